#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "tinlab/sparse_dp.hpp"

namespace tinlab {

inline constexpr int kMaxColors = 8;

/// Catalog of property algebras for the sparse-subgraph DP.
///
/// In target mode every algebra except the forest one requires X = F, so
/// solve_with_target coincides with solve. The forest algebra accepts (F, X)
/// when G[F] is a forest and each component of G[F] holds at most one vertex
/// of X.

/// Independent sets (r = 1); the state is empty.
std::unique_ptr<PropertyAlgebra> make_independent_set();

/// Induced forests (r = 2). The state partitions the boundary into the
/// connected blocks of the partial forest; in target mode each block also
/// records whether an already-forgotten vertex of X lies in its component.
std::unique_ptr<PropertyAlgebra> make_forest();

/// Induced bipartite subgraphs: r_colorable(2) under another name.
std::unique_ptr<PropertyAlgebra> make_bipartite();

/// Induced r-colorable subgraphs; the state is a proper coloring of the
/// boundary modulo color permutation. Throws InputError unless 1 <= r <= 8.
std::unique_ptr<PropertyAlgebra> make_r_colorable(int r);

/// Induced subgraphs with a proper list coloring. Lists arrive as
/// annotations: vertex v may take color c iff v ∈ A_c. No permutation
/// quotient. Throws InputError unless 1 <= r <= 8.
std::unique_ptr<PropertyAlgebra> make_list_colorable(int r);

/// Annotations A_0..A_{r-1} with A_c = {v : c ∈ lists[v]} (colors 0-based).
VertexAnnotations list_annotations(const std::vector<std::vector<int>>& lists, int r);

/// mwis, forest, bipartite, color:3, listcolor:3.
std::vector<std::unique_ptr<PropertyAlgebra>> algebra_catalog();

/// Parses "mwis", "forest", "bipartite", "color:r" or "listcolor:r".
std::unique_ptr<PropertyAlgebra> make_algebra(std::string_view spec);

}  // namespace tinlab
