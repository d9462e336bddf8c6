#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tinlab/weight.hpp"

namespace tinlab {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet& normalize(VertexSet& s);
VertexSet normalized(VertexSet s);

/// Simple undirected graph on vertices 0..n-1 with per-vertex weights.
///
/// Adjacency lists are sorted; the graph is immutable once built. Weights
/// default to 1 and `weighted()` records whether they were supplied.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, parallel edges or endpoints out of range.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::span<const Edge> edges, std::vector<Weight> weights);

  /// Builds from symmetric adjacency lists, sorting them. Duplicates are
  /// merged; self-loops are rejected.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                              std::vector<Weight> weights = {});

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  const Weight& weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  bool weighted() const noexcept { return weighted_; }

  /// Same structure, new weights (length n, each >= 0).
  Graph with_weights(std::vector<Weight> weights) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Weight weight_of(std::span<const Vertex> s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.weights_ == b.weights_;
  }

 private:
  void set_weights(std::vector<Weight> weights);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Weight> weights_;
  std::size_t edge_count_ = 0;
  bool weighted_ = false;
};

/// Unweighted shortest-path distances from one source. Unreachable vertices
/// hold std::nullopt rather than a large finite value.
struct DistanceRow {
  Vertex source = 0;
  std::vector<std::optional<int>> dist;

  bool reachable(Vertex v) const { return dist[static_cast<std::size_t>(v)].has_value(); }
  /// True when v is reachable within `radius` steps.
  bool within(Vertex v, int radius) const {
    const auto& d = dist[static_cast<std::size_t>(v)];
    return d.has_value() && *d <= radius;
  }
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

/// Multi-source BFS: distance from the nearest vertex of `sources`, explored up
/// to `radius` (vertices farther away are reported unreachable).
std::vector<std::optional<int>> bfs_from_set(const Graph& g, std::span<const Vertex> sources,
                                             std::optional<int> radius = std::nullopt);

/// k-th power: u ~ v iff 0 < dist(u, v) <= k. Weights are copied.
Graph power(const Graph& g, int k);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  ///< new id -> original id
};

InducedSubgraph induced(const Graph& g, std::span<const Vertex> s);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (first eliminated first) when chordal.
  std::vector<Vertex> elimination_order;
  /// Induced cycle of length >= 4, in cyclic order, when not chordal.
  std::vector<Vertex> cycle;
};

/// Maximum cardinality search followed by elimination-order verification.
ChordalityResult is_chordal(const Graph& g);

/// True when `order` is a perfect elimination ordering of g.
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

/// Components of g[s], each sorted, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> s);

bool is_connected_subset(const Graph& g, std::span<const Vertex> s);

}  // namespace tinlab
