#pragma once

#include <optional>
#include <vector>

#include "tinlab/graph.hpp"

namespace tinlab {

/// Role of a vertex of a forked graph.
enum class ForkRole { original, leaf, path_middle, path_end };

/// The forked version of (G, M): three pendant leaves on every vertex and a
/// two-edge path on every vertex of M. Vertices 0..n-1 copy G; the rest
/// follow in vertex order (three leaves, then middle and end when marked).
/// All weights are zero except that w(v) for v in M moves to its path end.
struct ForkedGraph {
  Graph graph;
  std::vector<Vertex> origin;    ///< vertex of G each vertex hangs off
  std::vector<ForkRole> role;
};

/// Throws InputError when m has a vertex outside g.
ForkedGraph forked_version(const Graph& g, const VertexSet& m);

struct DecodedFork {
  Graph graph;       ///< induced on the decoded F, relabelled 0..|F|-1
  VertexSet marked;  ///< M, in the relabelled ids
  VertexSet f;       ///< F as vertex ids of the forked graph
};

/// Recovers (G, M) from a forked graph. F is the set of vertices of degree
/// at least three; M holds the F-vertices carrying a two-edge path. Marked
/// vertices get the weight of their path end, the others weight zero.
/// std::nullopt unless the input is exactly the forked version of the result.
std::optional<DecodedFork> decode_forked(const Graph& g);

}  // namespace tinlab
