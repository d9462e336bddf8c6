#pragma once

#include <vector>

#include "tinlab/decomposition.hpp"
#include "tinlab/lift.hpp"

namespace tinlab {

struct PackingSolution {
  std::vector<int> chosen;  ///< sorted member indices
  Weight total_weight = 0;
  /// Largest independent bag subset held by any DP state.
  std::size_t max_state_size = 0;
};

/// Maximum-weight independent set of `g` by DP over a nice decomposition;
/// states are the independent subsets of each bag, of which none may exceed
/// `state_cap` vertices (ContractViolation otherwise). Ties resolve to the
/// forget-side "not chosen" alternative first, so output is deterministic.
PackingSolution max_weight_independent_set(const Graph& g, const TreeDecomposition& td, int state_cap);

/// Optimal independent packing of `fam`: MWIS of the blow-up graph over the
/// lifted decomposition. Throws BudgetError when alpha(td) > k_cap.
PackingSolution max_weight_independent_packing(const SubgraphFamily& fam, const TreeDecomposition& td, int k_cap);

/// Optimal packing with pairwise host distance >= d, for even d, via the
/// independent packing in G^(d-1). Odd d is refused: the problem is NP-hard
/// already on chordal graphs.
PackingSolution max_weight_distance_d_packing(const SubgraphFamily& fam, const TreeDecomposition& td, int d, int k_cap);

}  // namespace tinlab
