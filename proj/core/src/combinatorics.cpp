#include "ahc/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace ahc {
namespace {

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

// Unchecked closed forms shared by the checked entry points and thresholds().
Integer raw_quartic_lf_bound(int r) {
  return ceil_div(binom(r + 4, 4), r + 1) - r - 1;
}
Integer raw_k0(int d) { return floor_div(Integer(d) * d + 2 * d - 3, 4); }
Integer raw_h(int d) { return floor_div(Integer(2 * d + 1), 3); }
Integer raw_lf_bound(int r, int d) {
  return floor_div(binom(r + d, r) - binom(r + d - 2, r), r + 1) - (r - 2);
}
B0Decomposition raw_b0(int r, int d) {
  const Integer c = binom(r + d - 1, r - 1);
  return {floor_div(c, r), c - floor_div(c, r) * r};
}
Integer raw_gamma(int r) {
  const Integer c = binom(r + 3, 3);
  return c - floor_div(c, r + 1) * (r + 1);
}

}  // namespace

Integer binom(std::int64_t a, std::int64_t b) {
  require(a >= 0, "binom: a must be non-negative");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= (a - b + i);
    result /= i;
  }
  return result;
}

Integer point_conditions(int r, int multiplicity) {
  require(r >= 1, "point_conditions: r must be >= 1");
  require(multiplicity >= 1, "point_conditions: multiplicity must be >= 1");
  return binom(r + multiplicity - 1, r);
}

Integer virtual_dim(int r, int d, std::span<const int> multiplicities) {
  require(r >= 1, "virtual_dim: r must be >= 1");
  require(d >= 0, "virtual_dim: d must be >= 0");
  Integer v = binom(r + d, r) - 1;
  for (int m : multiplicities) v -= point_conditions(r, m);
  return v;
}

Integer virtual_dim(int r, int d, std::span<const PointBatch> batches) {
  require(r >= 1, "virtual_dim: r must be >= 1");
  require(d >= 0, "virtual_dim: d must be >= 0");
  Integer v = binom(r + d, r) - 1;
  for (const auto& batch : batches) {
    require(batch.count >= 0, "virtual_dim: negative point count");
    v -= point_conditions(r, batch.multiplicity) * batch.count;
  }
  return v;
}

Integer expected_dim(const Integer& virtual_dimension) {
  return virtual_dimension < -1 ? Integer(-1) : virtual_dimension;
}

NodeBounds n_bounds(int r, int d) {
  require(r >= 2 && d >= 2, "n_bounds: requires r >= 2 and d >= 2");
  const Integer c = binom(r + d, r);
  return {floor_div(c, r + 1), ceil_div(c, r + 1)};
}

Integer quartic_lf_bound(int r) {
  require(r >= 2, "quartic_lf_bound: requires r >= 2");
  return raw_quartic_lf_bound(r);
}

Integer k0(int d) {
  require(d >= 3, "k0: requires d >= 3");
  return raw_k0(d);
}

Integer h(int d) {
  require(d >= 3, "h: requires d >= 3");
  return raw_h(d);
}

Integer lf_bound(int r, int d) {
  require(r >= 3 && d >= 4, "lf_bound: requires r >= 3 and d >= 4");
  return raw_lf_bound(r, d);
}

LfBounds lf_bounds(int r, int d) {
  require(r >= 3 && d >= 4, "lf_bounds: requires r >= 3 and d >= 4");
  return {raw_quartic_lf_bound(r), raw_k0(d), raw_h(d), raw_lf_bound(r, d)};
}

B0Decomposition b0_decompose(int r, int d) {
  require(r >= 3 && d >= 5, "b0_decompose: requires r >= 3 and d >= 5");
  return raw_b0(r, d);
}

Integer second_b(int r, int d) {
  const auto [b0, beta] = b0_decompose(r, d);
  return b0 + beta;
}

Integer gamma_r(int r) {
  require(r >= 2, "gamma_r: requires r >= 2");
  return raw_gamma(r);
}

ThresholdBundle thresholds(int r, int d) {
  require(r >= 2 && d >= 2, "thresholds: requires r >= 2 and d >= 2");
  const auto [n_minus, n_plus] = n_bounds(r, d);
  const auto [b0, beta] = raw_b0(r, d);
  return ThresholdBundle{
      .n_minus = n_minus,
      .n_plus = n_plus,
      .k_r = raw_quartic_lf_bound(r),
      .k0_d = raw_k0(d),
      .h_d = raw_h(d),
      .k_rd = raw_lf_bound(r, d),
      .b0_floor = b0,
      .beta = beta,
      .b_second = b0 + beta,
      .gamma_r = raw_gamma(r),
  };
}

}  // namespace ahc
