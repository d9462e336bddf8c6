#pragma once

#include <utility>
#include <vector>

#include "tinlab/decomposition.hpp"
#include "tinlab/graph.hpp"

namespace tinlab {

/// Indexed family of connected vertex subsets of a host graph, with one
/// weight per member. Members are stored as sorted vertex sets; the member
/// subgraph is the induced one.
struct SubgraphFamily {
  Graph host;
  std::vector<VertexSet> members;
  std::vector<Weight> member_weights;

  std::size_t size() const noexcept { return members.size(); }
};

/// Throws InputError for empty, disconnected or out-of-range members, or a
/// weight vector of the wrong length.
void require_valid(const SubgraphFamily& fam);

/// Family of all singletons {v}, weighted by host vertex weights.
SubgraphFamily singleton_family(const Graph& g);

/// Family of all edges {u, v} (u < v, lexicographic), weighted by the sum of
/// endpoint weights.
SubgraphFamily edge_family(const Graph& g);

/// Vertex per member; i ~ j iff the members share a vertex or a host edge
/// joins them. Vertex weights are the member weights.
Graph blowup_graph(const SubgraphFamily& fam);

/// Same tree; member j lies in lifted bag t iff it meets X_t.
TreeDecomposition lift_decomposition(const SubgraphFamily& fam, const TreeDecomposition& td);

/// Closed radius-d ball around every vertex, weighted by the center's weight.
SubgraphFamily ball_family(const Graph& g, int d);

/// Compares power(g, k + 2d) against the blow-up, taken in power(g, k), of
/// the radius-d balls of g. Exact edge-set equality.
bool verify_power_identity(const Graph& g, int k, int d);

/// (G^k, T') for odd k, where X'_t holds the vertices within distance
/// (k - 1) / 2 of X_t. Throws InputError for even k.
std::pair<Graph, TreeDecomposition> power_with_decomposition(const Graph& g, const TreeDecomposition& td, int k);

}  // namespace tinlab
