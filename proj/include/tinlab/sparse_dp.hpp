#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tinlab/decomposition.hpp"
#include "tinlab/graph.hpp"

namespace tinlab {

/// Opaque per-property summary of a boundaried partial solution. Algebras
/// keep it canonical so that equal summaries compare equal.
using AlgebraState = std::vector<std::int32_t>;

/// The boundary S = F_t ∩ X_t of a partial solution, as seen by an algebra.
/// Positions index the sorted vertex list.
class Boundary {
 public:
  Boundary(const Graph& g, std::span<const Vertex> vertices, std::span<const char> in_target)
      : graph_(&g), vertices_(vertices), in_target_(in_target) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex vertex(std::size_t i) const { return vertices_[i]; }
  bool in_target(std::size_t i) const { return in_target_[i] != 0; }
  bool adjacent(std::size_t i, std::size_t j) const { return graph_->adjacent(vertices_[i], vertices_[j]); }
  std::size_t edge_count() const;

 private:
  const Graph* graph_;
  std::span<const Vertex> vertices_;
  std::span<const char> in_target_;
};

/// A vertex joining the boundary at an introduce (or leaf) node.
struct Introduction {
  Vertex vertex = -1;
  std::size_t position = 0;            ///< insertion position in the sorted boundary
  std::vector<std::size_t> neighbors;  ///< positions (before insertion) adjacent to vertex
  bool in_target = false;              ///< v ∈ X (target mode); false in base mode
  bool target_mode = false;            ///< engine maximizes the weight of X
  std::uint32_t annotations = 0;       ///< bit i set iff v ∈ A_i
};

/// Finite-state composition algebra over boundaried partial solutions. The
/// engine owns the DP skeleton (boundary sets, weights, traceback); the
/// algebra owns the property. Implementations must be stateless after
/// construction.
class PropertyAlgebra {
 public:
  virtual ~PropertyAlgebra() = default;

  virtual std::string name() const = 0;
  /// Chromatic bound r implied by the property: every accepted G[F] is
  /// r-colorable.
  virtual int chromatic_bound() const = 0;

  /// State of the empty partial solution.
  virtual AlgebraState empty_state() const { return {}; }

  /// States at a leaf with boundary {in.vertex}; `before` is the empty
  /// boundary. Defaults to introducing the vertex into the empty state.
  virtual std::vector<AlgebraState> leaf_states(const Boundary& before, const Boundary& after,
                                                const Introduction& in) const {
    return introduce(empty_state(), before, after, in);
  }

  /// Extends the boundary by in.vertex. `before` is the boundary without it;
  /// `after` includes it. An empty result rejects.
  virtual std::vector<AlgebraState> introduce(const AlgebraState& s, const Boundary& before, const Boundary& after,
                                              const Introduction& in) const = 0;

  /// Drops boundary position `position` of `before`; the vertex stays in F.
  virtual std::optional<AlgebraState> forget(const AlgebraState& s, const Boundary& before,
                                             std::size_t position) const = 0;

  /// Glues two partial solutions sharing exactly the boundary vertices.
  virtual std::vector<AlgebraState> join(const AlgebraState& a, const AlgebraState& b,
                                         const Boundary& boundary) const = 0;

  /// Acceptance at the empty root boundary.
  virtual bool accepts(const AlgebraState& s) const = 0;

  /// Domain check the engine applies to every produced state.
  virtual bool well_formed(const AlgebraState& s, const Boundary& boundary) const = 0;
};

/// Vertex subsets A_1..A_p handed to algebras as per-vertex bitmasks.
class VertexAnnotations {
 public:
  VertexAnnotations() = default;
  explicit VertexAnnotations(std::vector<VertexSet> sets);

  std::size_t count() const noexcept { return sets_.size(); }
  const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  std::uint32_t mask(Vertex v) const;

 private:
  std::vector<VertexSet> sets_;
};

struct DpStats {
  std::size_t nice_nodes = 0;
  std::size_t states = 0;         ///< total table entries over all nodes
  std::size_t max_boundary = 0;   ///< largest |S| in any reachable state
  std::size_t boundary_cap = 0;   ///< k_cap * r
};

struct SparseSolution {
  VertexSet solution;             ///< F
  std::optional<VertexSet> target;///< X, in target mode
  Weight total_weight = 0;        ///< weight of F, or of X in target mode
  DpStats stats;
};

/// Maximum-weight F with G[F] accepted by `algebra`. Throws BudgetError when
/// alpha(td) > k_cap and ContractViolation when a state breaks |S| <= k_cap * r
/// or the algebra's domain. std::nullopt when no accepting state survives.
std::optional<SparseSolution> solve(const Graph& g, const TreeDecomposition& td, const PropertyAlgebra& algebra,
                                    int k_cap, const VertexAnnotations& annotations = {});

/// As solve, but each vertex of F is also labelled in or out of X, and the
/// weight of X is maximized. The algebra decides which (F, X) pairs it accepts.
std::optional<SparseSolution> solve_with_target(const Graph& g, const TreeDecomposition& td,
                                                const PropertyAlgebra& algebra, int k_cap,
                                                const VertexAnnotations& annotations = {});

}  // namespace tinlab
