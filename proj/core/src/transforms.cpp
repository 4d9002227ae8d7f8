#include "ahc/transforms.hpp"

#include <stdexcept>
#include <string>

namespace ahc {
namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

}  // namespace

RestrictionSplit castelnuovo_split(const LinearSystem& system,
                                   std::span<const PointBatch> on_hyperplane) {
  require(!system.has_subspaces(), "castelnuovo_split: subspace conditions are not supported");
  require(system.r() >= 2, "castelnuovo_split: requires r >= 2");
  require(system.d() >= 1, "castelnuovo_split: requires d >= 1");

  std::vector<PointBatch> kernel_points;
  std::vector<PointBatch> trace_points;
  LinearSystem remaining = system;
  for (const auto& p : normalize_batches({on_hyperplane.begin(), on_hyperplane.end()})) {
    require(system.count_of(p.multiplicity) >= p.count,
            "castelnuovo_split: cannot specialize " + std::to_string(p.count) +
                " points of multiplicity " + std::to_string(p.multiplicity));
    remaining = remaining.without_points(p.multiplicity, p.count);
    if (p.multiplicity > 1) kernel_points.push_back({p.multiplicity - 1, p.count});
    trace_points.push_back(p);
  }
  for (const auto& p : remaining.points()) kernel_points.push_back(p);

  return {LinearSystem(system.r(), system.d() - 1, std::move(kernel_points)),
          LinearSystem(system.r() - 1, system.d(), std::move(trace_points))};
}

RestrictionSplit castelnuovo_split(const LinearSystem& system, std::int64_t h) {
  require(h >= 0, "castelnuovo_split: h must be >= 0");
  const PointBatch nodes[] = {{2, h}};
  return castelnuovo_split(system, nodes);
}

LinearSystem cone_reduce(const LinearSystem& system) {
  require(!system.has_subspaces(), "cone_reduce: subspace conditions are not supported");
  require(system.r() >= 2, "cone_reduce: requires r >= 2");
  require(system.count_of(system.d()) == 1,
          "cone_reduce: requires exactly one point of multiplicity d = " + std::to_string(system.d()));
  const auto rest = system.without_points(system.d(), 1);
  return LinearSystem(system.r() - 1, system.d(), rest.points());
}

FirstDegeneration deg1_components(int r, int d, std::int64_t n, std::int64_t b) {
  require(r >= 2 && d >= 2, "deg1_components: requires r >= 2 and d >= 2");
  require(0 <= b && b <= n, "deg1_components: requires 0 <= b <= n");
  return FirstDegeneration{
      .exceptional = LinearSystem::nodes(r, d - 1, n - b),
      .exceptional_kernel = LinearSystem::nodes(r, d - 2, n - b),
      .blowup = LinearSystem(r, d, {{d - 1, 1}, {2, b}}),
      .blowup_kernel = LinearSystem(r, d, {{d, 1}, {2, b}}),
      .restricted_sections = binom(d + r - 2, r - 1),
  };
}

SecondDegeneration deg2_components(int r, int d, std::int64_t n, std::int64_t b, std::int64_t beta) {
  require(r >= 2 && d >= 2, "deg2_components: requires r >= 2 and d >= 2");
  require(0 <= beta && beta <= b && b <= n, "deg2_components: requires 0 <= beta <= b <= n");
  require(beta < r, "deg2_components: requires beta < r");
  return SecondDegeneration{
      .exceptional = LinearSystem::nodes(r, d - 1, n - b),
      .exceptional_kernel = LinearSystem::nodes(r, d - 2, n - b),
      .exceptional_with_nodes = LinearSystem::nodes(r, d - 1, n - b + beta),
      .blowup = LinearSystem(r, d, {{d - 1, 1}, {2, b}}),
      .blowup_kernel = LinearSystem(r, d, {{d, 1}, {2, b - beta}, {1, beta}}),
      .blowup_kernel_cone = LinearSystem(r - 1, d, {{2, b - beta}, {1, beta}}),
      .blowup_restricted = LinearSystem(r - 1, d - 1, {{1, b - beta}, {2, beta}}),
  };
}

Integer limit_dim(const Integer& dim_intersection, const Integer& exceptional_kernel_dim,
                  const Integer& blowup_kernel_dim) {
  require(dim_intersection >= -1 && exceptional_kernel_dim >= -1 && blowup_kernel_dim >= -1,
          "limit_dim: dimensions must be >= -1");
  return dim_intersection + exceptional_kernel_dim + blowup_kernel_dim + 2;
}

Integer transversal_intersection_dim(const Integer& r_p, const Integer& r_f, const Integer& ambient) {
  require(r_p >= -1 && r_f >= -1, "transversal_intersection_dim: dimensions must be >= -1");
  if (r_p == -1 || r_f == -1) return -1;
  const Integer dim = r_p + r_f - ambient;
  return dim < -1 ? Integer(-1) : dim;
}

}  // namespace ahc
