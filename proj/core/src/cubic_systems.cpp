#include "ahc/cubic_systems.hpp"

#include "ahc/combinatorics.hpp"

#include <stdexcept>

namespace ahc::cubic {
namespace {

std::int64_t n_minus3(int r) { return to_int64(n_bounds(r, 3).n_minus); }

std::int64_t gamma_gap(int r) { return to_int64(gamma_r(r) - gamma_r(r - 3)); }

SubspaceGroup group(const std::string& id, int codim, std::int64_t nodes, int multiplicity = 1) {
  SubspaceGroup g{id, codim, multiplicity, {}};
  if (nodes > 0) g.points.push_back({2, nodes});
  return g;
}

void require_r(int r, int min_r, const char* what) {
  if (r < min_r) throw std::invalid_argument(std::string(what) + ": r too small");
}

}  // namespace

LinearSystem ah3(int r) {
  require_r(r, 2, "ah3");
  return LinearSystem(r, 3, {{2, n_minus3(r)}, {1, to_int64(gamma_r(r))}});
}

LinearSystem double_subspace(int r) {
  require_r(r, 5, "double_subspace");
  return LinearSystem(r, 3, {{2, r + 1}, {1, gamma_gap(r)}}, {group("L", 3, 0, 2)});
}

LinearSystem double_subspace_quadric_kernel(int r) {
  require_r(r, 3, "double_subspace_quadric_kernel");
  return LinearSystem(r, 2, {{2, 1}, {1, r}}, {group("L", 3, 0, 2)});
}

LinearSystem double_subspace_quadric(int r) {
  require_r(r, 3, "double_subspace_quadric");
  return LinearSystem(r, 2, {{2, 1}}, {group("L", 3, 0, 2)});
}

LinearSystem double_subspace_trace(int r) {
  require_r(r, 4, "double_subspace_trace");
  return LinearSystem(r - 1, 3, {{2, r}}, {group("L", 3, 0, 2)});
}

LinearSystem matching(int r) {
  require_r(r, 5, "matching");
  return LinearSystem(r, 3, {{2, r + 1}, {1, gamma_gap(r)}}, {group("L", 3, n_minus3(r - 3))});
}

LinearSystem k1(int r) {
  require_r(r, 3, "k1");
  return LinearSystem(r, 3, {{2, 3}}, {group("L1", 3, r - 2), group("L2", 3, r - 2)});
}

LinearSystem k2(int r) {
  require_r(r, 3, "k2");
  return LinearSystem(r, 3, {}, {group("L1", 3, 3), group("L2", 3, 3), group("L3", 3, 3)});
}

LinearSystem three_subspace_quadrics(int r) {
  require_r(r, 3, "three_subspace_quadrics");
  return LinearSystem(r, 2, {}, {group("L1", 3, 0), group("L2", 3, 0), group("L3", 3, 0)});
}

LinearSystem p7_witness() { return LinearSystem(7, 2, {{2, 1}}, {group("L", 3, 3)}); }

LinearSystem p7_double_kernel() { return LinearSystem(7, 3, {{2, 10}}, {group("L1", 4, 0, 2)}); }

LinearSystem p7_matching() { return LinearSystem(7, 3, {{2, 10}}, {group("L1", 4, 5)}); }

LinearSystem p7_k1() {
  return LinearSystem(7, 3, {{2, 5}}, {group("L1", 4, 5), group("L2", 4, 5)});
}

LinearSystem p7_k2() {
  return LinearSystem(7, 3, {}, {group("L1", 4, 5), group("L2", 4, 5), group("L3", 4, 5)});
}

}  // namespace ahc::cubic
