#pragma once

// Named auxiliary systems used by the cubic induction.
//
// Subspace ids are L, L1, L2, L3. All subspaces are general; the oracle samples them.

#include "ahc/linear_system.hpp"

namespace ahc::cubic {

/// L_{r,3}(2^{n_minus(r,3)}, 1^{gamma(r)}), virtual dimension -1 for every r >= 2.
LinearSystem ah3(int r);

/// L_{r,3}(2L, 2^{r+1}, 1^{gamma(r) - gamma(r-3)}) with L of codimension 3: the
/// kernel left after restricting to the component that contains the blown-up L.
LinearSystem double_subspace(int r);

/// L_{r,2}(2L, 2, 1^r): residual of double_subspace after specializing r+1 nodes
/// to a hyperplane (the extra simple points are dropped by SIMPLE_POINTS).
LinearSystem double_subspace_quadric_kernel(int r);

/// L_{r,2}(2L, 2), dimension 2 for r >= 4.
LinearSystem double_subspace_quadric(int r);

/// L_{r-1,3}(2L, 2^r): the trace of double_subspace on the hyperplane.
LinearSystem double_subspace_trace(int r);

/// Matching system L_{r,3}({L, 2^{n_minus(r-3,3)}}, 2^{r+1}, 1^{gamma(r) - gamma(r-3)}).
LinearSystem matching(int r);

/// K_1(r) = L_{r,3}({L1, 2^{r-2}}, {L2, 2^{r-2}}, 2^3) with L1, L2 of codimension 3.
LinearSystem k1(int r);

/// K_2(r) = L_{r,3}({L1, 2^3}, {L2, 2^3}, {L3, 2^3}) with codimension-3 subspaces.
LinearSystem k2(int r);

/// L_{r,2}(L1, L2, L3): quadrics through three codimension-3 subspaces.
LinearSystem three_subspace_quadrics(int r);

/// L_{7,2}({L, 2^3}, 2), dimension 6.
LinearSystem p7_witness();

/// The P^7 track: L1 has codimension 4 and carries 5 nodes.
LinearSystem p7_double_kernel();  // L_{7,3}(2L1, 2^10)
LinearSystem p7_matching();       // L_{7,3}({L1, 2^5}, 2^10)
LinearSystem p7_k1();             // L_{7,3}({L1, 2^5}, {L2, 2^5}, 2^5)
LinearSystem p7_k2();             // L_{7,3}({L1, 2^5}, {L2, 2^5}, {L3, 2^5})

}  // namespace ahc::cubic
