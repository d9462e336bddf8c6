#include "tinlab/lift.hpp"

#include <algorithm>
#include <string>

#include "tinlab/errors.hpp"

namespace tinlab {

void require_valid(const SubgraphFamily& fam) {
  if (fam.member_weights.size() != fam.members.size()) throw InputError("family: one weight per member required");
  for (std::size_t j = 0; j < fam.members.size(); ++j) {
    const auto& m = fam.members[j];
    if (m.empty()) throw InputError("family member " + std::to_string(j) + " is empty");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!fam.host.contains(m[i])) throw InputError("family member " + std::to_string(j) + " has out-of-range vertex");
      if (i > 0 && m[i - 1] >= m[i]) throw InputError("family member " + std::to_string(j) + " is not a sorted set");
    }
    if (!is_connected_subset(fam.host, m)) throw InputError("family member " + std::to_string(j) + " is disconnected");
    if (fam.member_weights[j] < 0) throw InputError("family member " + std::to_string(j) + " has negative weight");
  }
}

SubgraphFamily singleton_family(const Graph& g) {
  SubgraphFamily fam{g, {}, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    fam.members.push_back({v});
    fam.member_weights.push_back(g.weight(v));
  }
  return fam;
}

SubgraphFamily edge_family(const Graph& g) {
  SubgraphFamily fam{g, {}, {}};
  for (auto [u, v] : g.edges()) {
    fam.members.push_back({u, v});
    fam.member_weights.push_back(g.weight(u) + g.weight(v));
  }
  return fam;
}

Graph blowup_graph(const SubgraphFamily& fam) {
  require_valid(fam);
  const Graph& host = fam.host;
  const std::size_t count = fam.members.size();
  // closed[j][v]: v lies in N[member j]
  std::vector<std::vector<char>> closed(count, std::vector<char>(static_cast<std::size_t>(host.order()), 0));
  for (std::size_t j = 0; j < count; ++j) {
    for (Vertex v : fam.members[j]) {
      closed[j][static_cast<std::size_t>(v)] = 1;
      for (Vertex u : host.neighbors(v)) closed[j][static_cast<std::size_t>(u)] = 1;
    }
  }
  std::vector<std::vector<Vertex>> adjacency(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      bool touch = std::any_of(fam.members[j].begin(), fam.members[j].end(),
                               [&](Vertex v) { return closed[i][static_cast<std::size_t>(v)] != 0; });
      if (touch) {
        adjacency[i].push_back(static_cast<Vertex>(j));
        adjacency[j].push_back(static_cast<Vertex>(i));
      }
    }
  }
  return Graph::from_adjacency(std::move(adjacency), fam.member_weights);
}

TreeDecomposition lift_decomposition(const SubgraphFamily& fam, const TreeDecomposition& td) {
  require_valid(fam);
  require_valid(fam.host, td);
  TreeDecomposition out;
  out.nodes = td.nodes;
  out.tree_edges = td.tree_edges;
  out.root = td.root;
  out.bags.resize(td.bags.size());
  for (std::size_t t = 0; t < td.bags.size(); ++t) {
    const auto& bag = td.bags[t];
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      const auto& m = fam.members[j];
      auto bi = bag.begin();
      auto mi = m.begin();
      bool meets = false;
      while (bi != bag.end() && mi != m.end() && !meets) {
        if (*bi < *mi) ++bi;
        else if (*mi < *bi) ++mi;
        else meets = true;
      }
      if (meets) out.bags[t].push_back(static_cast<Vertex>(j));
    }
  }
  return out;
}

SubgraphFamily ball_family(const Graph& g, int d) {
  if (d < 1) throw InputError("ball radius must be >= 1, got " + std::to_string(d));
  SubgraphFamily fam{g, {}, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex sources[] = {v};
    auto dist = bfs_from_set(g, sources, d);
    VertexSet ball;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (dist[static_cast<std::size_t>(u)]) ball.push_back(u);
    }
    fam.members.push_back(std::move(ball));
    fam.member_weights.push_back(g.weight(v));
  }
  return fam;
}

bool verify_power_identity(const Graph& g, int k, int d) {
  if (k < 1 || d < 1) throw InputError("power identity needs k, d >= 1");
  Graph lhs = power(g, k + 2 * d);
  SubgraphFamily balls = ball_family(g, d);
  // The balls stay connected in G^k, which is a supergraph of g.
  balls.host = power(g, k);
  Graph rhs = blowup_graph(balls);
  return lhs.edges() == rhs.edges();
}

std::pair<Graph, TreeDecomposition> power_with_decomposition(const Graph& g, const TreeDecomposition& td, int k) {
  if (k < 1) throw InputError("power requires k >= 1");
  if (k % 2 == 0) {
    throw InputError("no decomposition bound exists for even powers (k = " + std::to_string(k) +
                     "); only odd k is supported");
  }
  require_valid(g, td);
  if (k == 1) return {g, td};
  const int radius = (k - 1) / 2;
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    auto dist = bfs_from_set(g, bag, radius);
    VertexSet grown;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[static_cast<std::size_t>(v)]) grown.push_back(v);
    }
    bag = std::move(grown);
  }
  return {power(g, k), std::move(out)};
}

}  // namespace tinlab
