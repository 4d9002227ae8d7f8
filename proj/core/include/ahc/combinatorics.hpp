#pragma once

// Integer arithmetic for dimensions of linear systems with fat points and for
// the thresholds that drive the degeneration induction.
//
// Every function is a pure function of its arguments.

#include "ahc/integer.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ahc {

/// `count` points of the same multiplicity.
struct PointBatch {
  int multiplicity = 1;
  std::int64_t count = 1;

  friend bool operator==(const PointBatch&, const PointBatch&) = default;
};

/// C(a, b); zero when b < 0 or b > a. `a` must be non-negative.
Integer binom(std::int64_t a, std::int64_t b);

/// Number of linear conditions a point of multiplicity m imposes in P^r: C(r+m-1, r).
Integer point_conditions(int r, int multiplicity);

/// C(r+d, r) - 1 - sum_i C(r+m_i-1, r). May be far below -1.
Integer virtual_dim(int r, int d, std::span<const int> multiplicities);
Integer virtual_dim(int r, int d, std::span<const PointBatch> batches);

/// max(v, -1).
Integer expected_dim(const Integer& virtual_dimension);

struct NodeBounds {
  Integer n_minus;
  Integer n_plus;
};

/// floor / ceil of C(r+d, r) / (r+1). Requires r >= 2, d >= 2.
NodeBounds n_bounds(int r, int d);

/// ceil(C(r+4, 4)/(r+1)) - r - 1: how many nodes a quartic with a triple point
/// can carry while staying non-special. Requires r >= 2.
Integer quartic_lf_bound(int r);

/// floor((d^2 + 2d - 3)/4). Requires d >= 3.
Integer k0(int d);

/// floor((2d + 1)/3). Requires d >= 3.
Integer h(int d);

/// floor((C(r+d, r) - C(r+d-2, r))/(r+1)) - (r-2). Requires r >= 3, d >= 4.
Integer lf_bound(int r, int d);

struct LfBounds {
  Integer k_r;
  Integer k0_d;
  Integer h_d;
  Integer k_rd;
};

/// All four bounds at once. Requires r >= 3 and d >= 4.
LfBounds lf_bounds(int r, int d);

struct B0Decomposition {
  Integer b0_floor;
  Integer beta;  // in [0, r-1]
};

/// C(r+d-1, r-1) = r * b0_floor + beta. Requires r >= 3, d >= 5.
B0Decomposition b0_decompose(int r, int d);

/// b0_floor + beta: how many nodes the second degeneration sends to the blown-up
/// component. Requires r >= 3, d >= 5.
Integer second_b(int r, int d);

/// Number of auxiliary simple points that makes L_{r,3}(2^{n_minus(r,3)}, 1^gamma)
/// have virtual dimension exactly -1.
///
/// gamma(r) = C(r+3, 3) - (r+1) * n_minus(r, 3) = C(r+3, 3) mod (r+1).
/// Writing C(r+3, 3)/(r+1) = (r+3)(r+2)/6, the remainder is zero unless
/// (r+2)(r+3) is not divisible by 3, i.e. unless r = 2 (mod 3). For r = 3k+2,
/// (r+3)(r+2)/6 = (3k+5)(3k+4)/6 = n_minus + 1/3, so gamma = (r+1)/3.
/// Defined for r >= 2; the cubic induction itself uses r >= 5 and the
/// values gamma(2) = 1, gamma(3) = gamma(4) = 0 at its base.
Integer gamma_r(int r);

struct ThresholdBundle {
  Integer n_minus;
  Integer n_plus;
  Integer k_r;
  Integer k0_d;
  Integer h_d;
  Integer k_rd;
  Integer b0_floor;
  Integer beta;
  Integer b_second;
  Integer gamma_r;
};

/// Every threshold at (r, d) evaluated from its closed form. Requires r >= 2,
/// d >= 2; entries whose own domain is not met are evaluated from the same
/// formula anyway (they are only meaningful where the corresponding rule applies).
ThresholdBundle thresholds(int r, int d);

}  // namespace ahc
