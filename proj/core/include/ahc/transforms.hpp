#pragma once

// Symbolic transformations of linear systems used by the degeneration arguments.

#include "ahc/linear_system.hpp"

#include <cstdint>
#include <span>

namespace ahc {

/// Kernel and trace of the restriction of a system to a hyperplane.
struct RestrictionSplit {
  LinearSystem kernel;  // degree d-1 in P^r: residual of the specialized points
  LinearSystem trace;   // degree d in P^{r-1}: the specialized points themselves
};

/// Specializes the listed general points onto a hyperplane H.
///
/// A point of multiplicity m on H leaves a point of multiplicity m-1 in the
/// kernel (dropped when m = 1) and a point of multiplicity m in the trace;
/// points off H stay in the kernel only. Conditions are conserved:
/// C(r+m-1, r) = C(r+m-2, r) + C(r+m-2, r-1).
///
/// Throws std::invalid_argument for systems with subspaces, r < 2, d < 1, or
/// when more points are specialized than the system has.
RestrictionSplit castelnuovo_split(const LinearSystem& system,
                                   std::span<const PointBatch> on_hyperplane);

/// Specializes h of the double points: L_{r,d}(2^n) -> kernel L_{r,d-1}(2^{n-h}, 1^h),
/// trace L_{r-1,d}(2^h).
RestrictionSplit castelnuovo_split(const LinearSystem& system, std::int64_t h);

/// A degree-d hypersurface with a d-fold point is a cone with that vertex, so
/// L_{r,d}(d, Z) has the same h^0 as L_{r-1,d}(Z') with Z' the projection of Z.
/// Throws unless the system has exactly one d-fold point and no subspaces.
LinearSystem cone_reduce(const LinearSystem& system);

/// Systems on the two components of the one-point degeneration that sends b of
/// the n nodes to the blown-up component.
struct FirstDegeneration {
  LinearSystem exceptional;         // L_{r,d-1}(2^{n-b})
  LinearSystem exceptional_kernel;  // L_{r,d-2}(2^{n-b})
  LinearSystem blowup;              // L_{r,d}(d-1, 2^b)
  LinearSystem blowup_kernel;       // L_{r,d}(d, 2^b), a cone over L_{r-1,d}(2^b)
  Integer restricted_sections;      // C(d+r-2, r-1): sections of O(d-1) on the common P^{r-1}
};

/// Requires r >= 2, d >= 2, 0 <= b <= n.
FirstDegeneration deg1_components(int r, int d, std::int64_t n, std::int64_t b);

/// Systems of the second degeneration, in which beta of the b nodes on the
/// blown-up component approach the common divisor.
struct SecondDegeneration {
  LinearSystem exceptional;             // L_{r,d-1}(2^{n-b})
  LinearSystem exceptional_kernel;      // L_{r,d-2}(2^{n-b})
  LinearSystem exceptional_with_nodes;  // L_{r,d-1}(2^{n-b+beta})
  LinearSystem blowup;                  // L_{r,d}(d-1, 2^b)
  LinearSystem blowup_kernel;           // L_{r,d}(d, 2^{b-beta}, 1^beta)
  LinearSystem blowup_kernel_cone;      // L_{r-1,d}(2^{b-beta}, 1^beta)
  LinearSystem blowup_restricted;       // L_{r-1,d-1}(1^{b-beta}, 2^beta)
};

/// Requires r >= 2, d >= 2, 0 <= beta <= b <= n, beta < r. With beta = 0 the
/// systems coincide with deg1_components.
SecondDegeneration deg2_components(int r, int d, std::int64_t n, std::int64_t b, std::int64_t beta);

/// Dimension of the limit system: dim(R) + l_hat_P + l_hat_F + 2, where R is the
/// intersection of the restricted systems and the hats are the kernels on the two
/// components. All inputs must be >= -1.
Integer limit_dim(const Integer& dim_intersection, const Integer& exceptional_kernel_dim,
                  const Integer& blowup_kernel_dim);

/// Dimension of the intersection of two properly intersecting linear systems of
/// projective dimensions r_p and r_f inside a projective space of dimension
/// `ambient`: max(r_p + r_f - ambient, -1). Either factor empty gives -1.
///
/// For the one-point degeneration, ambient = C(d+r-2, r-1) - 1.
Integer transversal_intersection_dim(const Integer& r_p, const Integer& r_f, const Integer& ambient);

}  // namespace ahc
