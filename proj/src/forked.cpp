#include "tinlab/forked.hpp"

#include <algorithm>

#include "tinlab/errors.hpp"

namespace tinlab {

ForkedGraph forked_version(const Graph& g, const VertexSet& m) {
  const int n = g.order();
  std::vector<char> marked(static_cast<std::size_t>(n), 0);
  for (Vertex v : m) {
    if (!g.contains(v)) throw InputError("marked vertex " + std::to_string(v) + " outside the graph");
    marked[static_cast<std::size_t>(v)] = 1;
  }

  ForkedGraph out;
  std::vector<Edge> edges = g.edges();
  std::vector<Weight> weights(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    out.origin.push_back(v);
    out.role.push_back(ForkRole::original);
  }
  auto add = [&](Vertex v, ForkRole role) {
    const auto id = static_cast<Vertex>(out.origin.size());
    out.origin.push_back(v);
    out.role.push_back(role);
    weights.emplace_back(0);
    return id;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < 3; ++i) edges.emplace_back(v, add(v, ForkRole::leaf));
    if (marked[static_cast<std::size_t>(v)]) {
      Vertex middle = add(v, ForkRole::path_middle);
      Vertex end = add(v, ForkRole::path_end);
      edges.emplace_back(v, middle);
      edges.emplace_back(middle, end);
      weights[static_cast<std::size_t>(end)] = g.weight(v);
    }
  }
  out.graph = Graph(static_cast<int>(out.origin.size()), edges, std::move(weights));
  return out;
}

std::optional<DecodedFork> decode_forked(const Graph& g) {
  // An unmarked vertex that is isolated in G has degree exactly three, so the
  // threshold is three rather than four.
  const int n = g.order();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  DecodedFork out;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      index[static_cast<std::size_t>(v)] = static_cast<int>(out.f.size());
      out.f.push_back(v);
    }
  }

  std::vector<char> claimed(static_cast<std::size_t>(n), 0);
  std::vector<Weight> weights(out.f.size(), 0);
  for (std::size_t i = 0; i < out.f.size(); ++i) {
    const Vertex v = out.f[i];
    claimed[static_cast<std::size_t>(v)] = 1;
    int leaves = 0;
    int paths = 0;
    for (Vertex u : g.neighbors(v)) {
      if (index[static_cast<std::size_t>(u)] >= 0) continue;
      if (g.degree(u) == 1) {
        ++leaves;
        claimed[static_cast<std::size_t>(u)] = 1;
      } else if (g.degree(u) == 2) {
        const Vertex end = g.neighbors(u)[0] == v ? g.neighbors(u)[1] : g.neighbors(u)[0];
        if (g.degree(end) != 1) return std::nullopt;
        ++paths;
        claimed[static_cast<std::size_t>(u)] = 1;
        claimed[static_cast<std::size_t>(end)] = 1;
        weights[i] = g.weight(end);
      } else {
        return std::nullopt;
      }
    }
    if (leaves != 3 || paths > 1) return std::nullopt;
    if (paths == 1) out.marked.push_back(static_cast<Vertex>(i));
  }
  // Any unclaimed vertex (a stray component, or leaves on a non-F vertex)
  // means the input is not a forked graph.
  if (std::find(claimed.begin(), claimed.end(), 0) != claimed.end()) return std::nullopt;
  if (static_cast<std::size_t>(n) != 4 * out.f.size() + 2 * out.marked.size()) return std::nullopt;

  InducedSubgraph core = induced(g, out.f);
  out.graph = core.graph.with_weights(std::move(weights));
  if (g.size() != out.graph.size() + 3 * out.f.size() + 2 * out.marked.size()) return std::nullopt;
  return out;
}

}  // namespace tinlab
