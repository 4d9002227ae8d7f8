#include "ahc/linear_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ahc {

std::vector<PointBatch> normalize_batches(std::vector<PointBatch> batches) {
  std::map<int, std::int64_t, std::greater<>> merged;
  for (const auto& b : batches) {
    if (b.multiplicity < 1) throw std::invalid_argument("point multiplicity must be >= 1");
    if (b.count < 0) throw std::invalid_argument("point count must be >= 0");
    merged[b.multiplicity] += b.count;
  }
  std::vector<PointBatch> out;
  for (const auto& [m, c] : merged) {
    if (c > 0) out.push_back({m, c});
  }
  return out;
}

LinearSystem::LinearSystem(int r, int d, std::vector<PointBatch> points,
                           std::vector<SubspaceGroup> subspaces)
    : r_(r), d_(d), points_(normalize_batches(std::move(points))), subspaces_(std::move(subspaces)) {
  if (r_ < 1) throw std::invalid_argument("linear system: r must be >= 1");
  if (d_ < 0) throw std::invalid_argument("linear system: d must be >= 0");
  auto check_mult = [&](int m) {
    if (m > d_ + 1) {
      throw std::invalid_argument("linear system: multiplicity " + std::to_string(m) +
                                  " exceeds d+1 = " + std::to_string(d_ + 1));
    }
  };
  for (const auto& p : points_) check_mult(p.multiplicity);
  std::set<std::string> ids;
  for (auto& s : subspaces_) {
    if (s.id.empty()) throw std::invalid_argument("linear system: empty subspace id");
    if (!ids.insert(s.id).second) {
      throw std::invalid_argument("linear system: duplicate subspace id " + s.id);
    }
    if (s.codim < 1 || s.codim > r_) {
      throw std::invalid_argument("linear system: subspace codim must be in [1, r]");
    }
    if (s.multiplicity < 1) throw std::invalid_argument("linear system: subspace multiplicity must be >= 1");
    check_mult(s.multiplicity);
    s.points = normalize_batches(std::move(s.points));
    for (const auto& p : s.points) check_mult(p.multiplicity);
  }
}

LinearSystem LinearSystem::nodes(int r, int d, std::int64_t n) {
  return LinearSystem(r, d, {{2, n}});
}

std::vector<BaseCondition> LinearSystem::conditions() const {
  std::vector<BaseCondition> out;
  for (const auto& s : subspaces_) {
    out.push_back({ConditionKind::FatSubspace, s.multiplicity, 1, s.id, s.codim});
    for (const auto& p : s.points) {
      out.push_back({ConditionKind::PointOnSubspace, p.multiplicity, p.count, s.id, 0});
    }
  }
  for (const auto& p : points_) {
    out.push_back({ConditionKind::FatPoint, p.multiplicity, p.count, std::nullopt, 0});
  }
  return out;
}

std::int64_t LinearSystem::count_of(int multiplicity) const noexcept {
  for (const auto& p : points_) {
    if (p.multiplicity == multiplicity) return p.count;
  }
  return 0;
}

std::int64_t LinearSystem::total_points() const noexcept {
  std::int64_t total = 0;
  for (const auto& p : points_) total += p.count;
  return total;
}

int LinearSystem::max_multiplicity() const noexcept {
  int m = 0;
  for (const auto& p : points_) m = std::max(m, p.multiplicity);
  for (const auto& s : subspaces_) {
    for (const auto& p : s.points) m = std::max(m, p.multiplicity);
  }
  return m;
}

bool LinearSystem::is_nodes_only() const noexcept {
  return subspaces_.empty() && std::all_of(points_.begin(), points_.end(),
                                            [](const PointBatch& p) { return p.multiplicity == 2; });
}

LinearSystem LinearSystem::with_points(int multiplicity, std::int64_t count) const {
  auto pts = points_;
  pts.push_back({multiplicity, count});
  return LinearSystem(r_, d_, std::move(pts), subspaces_);
}

LinearSystem LinearSystem::without_points(int multiplicity, std::int64_t count) const {
  if (count_of(multiplicity) < count) {
    throw std::invalid_argument("linear system: cannot remove " + std::to_string(count) +
                                " points of multiplicity " + std::to_string(multiplicity));
  }
  auto pts = points_;
  for (auto& p : pts) {
    if (p.multiplicity == multiplicity) p.count -= count;
  }
  return LinearSystem(r_, d_, std::move(pts), subspaces_);
}

LinearSystem LinearSystem::with_degree(int d) const {
  return LinearSystem(r_, d, points_, subspaces_);
}

Integer LinearSystem::sections() const { return binom(r_ + d_, r_); }

Integer subspace_conditions(int r, int d, int codim, int multiplicity) {
  Integer total = 0;
  for (int k = 0; k < multiplicity && k <= d; ++k) {
    total += binom(codim - 1 + k, k) * binom(r - codim + d - k, r - codim);
  }
  return total;
}

Integer point_on_subspace_conditions(int r, int codim, int subspace_mult, int point_mult) {
  Integer total = 0;
  for (int k = subspace_mult; k < point_mult; ++k) {
    total += binom(codim - 1 + k, k) * binom(r - codim + point_mult - 1 - k, r - codim);
  }
  return total;
}

Integer LinearSystem::condition_count() const {
  Integer total = 0;
  for (const auto& p : points_) total += point_conditions(r_, p.multiplicity) * p.count;
  for (const auto& s : subspaces_) {
    total += subspace_conditions(r_, d_, s.codim, s.multiplicity);
    for (const auto& p : s.points) {
      total += point_on_subspace_conditions(r_, s.codim, s.multiplicity, p.multiplicity) * p.count;
    }
  }
  return total;
}

Integer LinearSystem::virtual_dim() const { return sections() - 1 - condition_count(); }

Integer LinearSystem::expected_dim() const { return ahc::expected_dim(virtual_dim()); }

}  // namespace ahc
