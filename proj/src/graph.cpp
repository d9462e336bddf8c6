#include "tinlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "tinlab/errors.hpp"

namespace tinlab {

VertexSet& normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet normalized(VertexSet s) { return std::move(normalize(s)); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n, edges, {}) {}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<Weight> weights) {
  if (n < 0) throw InputError("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& row = adjacency_[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InputError("parallel edge at vertex " + std::to_string(v));
    }
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
  set_weights(std::move(weights));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency, std::vector<Weight> weights) {
  Graph g;
  const int n = static_cast<int>(adjacency.size());
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    auto& row = adjacency[v];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (Vertex u : row) {
      if (u < 0 || u >= n) throw InputError("neighbor out of range");
      if (static_cast<std::size_t>(u) == v) throw InputError("self-loop at vertex " + std::to_string(v));
    }
    g.edge_count_ += row.size();
  }
  g.edge_count_ /= 2;
  g.adjacency_ = std::move(adjacency);
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    for (Vertex u : g.adjacency_[v]) {
      if (!std::binary_search(g.adjacency_[static_cast<std::size_t>(u)].begin(),
                              g.adjacency_[static_cast<std::size_t>(u)].end(), static_cast<Vertex>(v))) {
        throw InputError("adjacency is not symmetric");
      }
    }
  }
  g.set_weights(std::move(weights));
  return g;
}

void Graph::set_weights(std::vector<Weight> weights) {
  const std::size_t n = adjacency_.size();
  if (weights.empty()) {
    weights_.assign(n, Weight(1));
    weighted_ = false;
    return;
  }
  if (weights.size() != n) throw InputError("weight vector length differs from vertex count");
  for (const auto& w : weights) {
    if (w < 0) throw InputError("negative vertex weight");
  }
  weights_ = std::move(weights);
  weighted_ = true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Graph Graph::with_weights(std::vector<Weight> weights) const {
  Graph g = *this;
  g.set_weights(std::move(weights));
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Weight Graph::weight_of(std::span<const Vertex> s) const {
  Weight total = 0;
  for (Vertex v : s) total += weight(v);
  return total;
}

DistanceRow bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw InputError("BFS source " + std::to_string(source) + " out of range");
  const Vertex sources[] = {source};
  return DistanceRow{source, bfs_from_set(g, sources)};
}

std::vector<std::optional<int>> bfs_from_set(const Graph& g, std::span<const Vertex> sources,
                                             std::optional<int> radius) {
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw InputError("BFS source " + std::to_string(s) + " out of range");
    if (!dist[static_cast<std::size_t>(s)]) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    int du = *dist[static_cast<std::size_t>(u)];
    if (radius && du >= *radius) continue;
    for (Vertex v : g.neighbors(u)) {
      auto& dv = dist[static_cast<std::size_t>(v)];
      if (!dv) {
        dv = du + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw InputError("graph power requires k >= 1, got " + std::to_string(k));
  if (k == 1) return g;
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) {
    const Vertex sources[] = {u};
    auto dist = bfs_from_set(g, sources, k);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != u && dist[static_cast<std::size_t>(v)]) adjacency[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adjacency), g.weighted() ? g.weights() : std::vector<Weight>{});
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> s) {
  VertexSet vertices(s.begin(), s.end());
  normalize(vertices);
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (!g.contains(v)) throw InputError("induced: vertex " + std::to_string(v) + " out of range");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::vector<Vertex>> adjacency(vertices.size());
  std::vector<Weight> weights;
  weights.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      if (int j = index[static_cast<std::size_t>(u)]; j >= 0) adjacency[i].push_back(j);
    }
    weights.push_back(g.weight(vertices[i]));
  }
  Graph sub = Graph::from_adjacency(std::move(adjacency), g.weighted() ? std::move(weights) : std::vector<Weight>{});
  return InducedSubgraph{std::move(sub), std::move(vertices)};
}

namespace {

// Visit order of maximum cardinality search; bucket queue with lazy deletion.
std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(n));
  int top = 0;
  while (static_cast<int>(visit.size()) < n) {
    Vertex v = -1;
    while (v < 0) {
      auto& bucket = buckets[static_cast<std::size_t>(top)];
      while (!bucket.empty()) {
        Vertex cand = bucket.back();
        bucket.pop_back();
        if (!numbered[static_cast<std::size_t>(cand)] && label[static_cast<std::size_t>(cand)] == top) {
          v = cand;
          break;
        }
      }
      if (v < 0) --top;
    }
    numbered[static_cast<std::size_t>(v)] = 1;
    visit.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (numbered[static_cast<std::size_t>(u)]) continue;
      int l = ++label[static_cast<std::size_t>(u)];
      buckets[static_cast<std::size_t>(l)].push_back(u);
      top = std::max(top, l);
    }
  }
  return visit;
}

// First vertex violating the perfect-elimination condition, with the
// offending nonadjacent pair of its later neighbours.
struct Violation {
  Vertex v, a, b;
};

std::optional<Violation> first_violation(const Graph& g, std::span<const Vertex> order) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] &&
          (parent < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)])) {
        parent = u;
      }
    }
    if (parent < 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u != parent && pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] && !g.adjacent(parent, u)) {
        return Violation{v, parent, u};
      }
    }
  }
  return std::nullopt;
}

// Shortest a-b path avoiding N[v] \ {a, b}; closing it through v gives an
// induced cycle of length >= 4 because a and b are nonadjacent.
std::vector<Vertex> cycle_through(const Graph& g, Vertex v, Vertex a, Vertex b) {
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  blocked[static_cast<std::size_t>(v)] = 1;
  for (Vertex u : g.neighbors(v)) {
    if (u != a && u != b) blocked[static_cast<std::size_t>(u)] = 1;
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{a};
  parent[static_cast<std::size_t>(a)] = a;
  while (!queue.empty() && parent[static_cast<std::size_t>(b)] < 0) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (blocked[static_cast<std::size_t>(y)] || parent[static_cast<std::size_t>(y)] >= 0) continue;
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (parent[static_cast<std::size_t>(b)] < 0) return {};
  std::vector<Vertex> cycle{v};
  std::vector<Vertex> path;
  for (Vertex x = b; x != a; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(a);
  cycle.insert(cycle.end(), path.rbegin(), path.rend());
  return cycle;
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != static_cast<std::size_t>(g.order())) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : order) {
    if (!g.contains(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  // Direct definition: later neighbours of every vertex form a clique.
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) later.push_back(u);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult result;
  std::vector<Vertex> order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  auto violation = first_violation(g, order);
  if (!violation) {
    result.chordal = true;
    result.elimination_order = std::move(order);
    return result;
  }
  result.cycle = cycle_through(g, violation->v, violation->a, violation->b);
  if (result.cycle.empty()) {
    // Every induced cycle of length >= 4 passes through some vertex and its
    // two nonadjacent cycle neighbours, so this scan is complete.
    for (Vertex v = 0; v < g.order() && result.cycle.empty(); ++v) {
      auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size() && result.cycle.empty(); ++i) {
        for (std::size_t j = i + 1; j < nb.size() && result.cycle.empty(); ++j) {
          if (!g.adjacent(nb[i], nb[j])) result.cycle = cycle_through(g, v, nb[i], nb[j]);
        }
      }
    }
  }
  if (result.cycle.empty()) throw ContractViolation("non-chordal graph without an induced cycle certificate");
  return result;
}

std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError("components: vertex " + std::to_string(v) + " out of range");
    member[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet sorted = normalized(VertexSet(s.begin(), s.end()));
  std::vector<VertexSet> out;
  for (Vertex start : sorted) {
    if (member[static_cast<std::size_t>(start)] != 1) continue;
    VertexSet comp{start};
    member[static_cast<std::size_t>(start)] = 2;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex u : g.neighbors(comp[i])) {
        if (member[static_cast<std::size_t>(u)] == 1) {
          member[static_cast<std::size_t>(u)] = 2;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> s) {
  return connected_components(g, s).size() == 1;
}

}  // namespace tinlab
