#pragma once

#include "ahc/combinatorics.hpp"
#include "ahc/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ahc {

enum class ConditionKind { FatPoint, FatSubspace, PointOnSubspace };

/// Flat view of one base condition, as listed by LinearSystem::conditions().
struct BaseCondition {
  ConditionKind kind = ConditionKind::FatPoint;
  int multiplicity = 1;
  std::int64_t count = 1;
  std::optional<std::string> subspace_id;
  int subspace_codim = 0;  // FatSubspace only

  friend bool operator==(const BaseCondition&, const BaseCondition&) = default;
};

/// A linear subspace of codimension `codim` along which members vanish to order
/// `multiplicity`, together with fat points supported on it. The subspace and the
/// points on it are in general position (chosen at random by the oracle).
struct SubspaceGroup {
  std::string id;
  int codim = 1;
  int multiplicity = 1;
  std::vector<PointBatch> points;

  friend bool operator==(const SubspaceGroup&, const SubspaceGroup&) = default;
};

/// Degree-d hypersurfaces of P^r with prescribed base conditions.
///
/// Values are immutable; every modifier returns a fresh system. General fat points
/// are kept merged by multiplicity and sorted by descending multiplicity, so two
/// systems with the same conditions compare equal.
class LinearSystem {
 public:
  LinearSystem(int r, int d, std::vector<PointBatch> points = {},
               std::vector<SubspaceGroup> subspaces = {});

  /// L_{r,d}(2^n).
  static LinearSystem nodes(int r, int d, std::int64_t n);

  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }
  const std::vector<PointBatch>& points() const noexcept { return points_; }
  const std::vector<SubspaceGroup>& subspaces() const noexcept { return subspaces_; }

  std::vector<BaseCondition> conditions() const;

  bool has_subspaces() const noexcept { return !subspaces_.empty(); }
  /// Number of general points of the given multiplicity.
  std::int64_t count_of(int multiplicity) const noexcept;
  std::int64_t total_points() const noexcept;
  /// Largest multiplicity among general points and points on subspaces (0 if none).
  int max_multiplicity() const noexcept;
  /// True when every condition is a general double point (vacuously true with no conditions).
  bool is_nodes_only() const noexcept;

  LinearSystem with_points(int multiplicity, std::int64_t count) const;
  /// Removes `count` general points of the given multiplicity; throws if there are fewer.
  LinearSystem without_points(int multiplicity, std::int64_t count) const;
  LinearSystem with_degree(int d) const;

  /// C(r+d, r): the number of degree-d monomials in r+1 variables.
  Integer sections() const;
  /// Naive count of the linear conditions imposed by all base conditions.
  Integer condition_count() const;
  Integer virtual_dim() const;
  Integer expected_dim() const;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  int r_;
  int d_;
  std::vector<PointBatch> points_;
  std::vector<SubspaceGroup> subspaces_;
};

/// Conditions that vanishing to order m along a codimension-c subspace imposes on
/// degree-d forms in P^r: monomials whose degree in the c normal variables is < m.
Integer subspace_conditions(int r, int d, int codim, int multiplicity);

/// Extra conditions a point of multiplicity `point_mult` adds when it lies on a
/// codimension-c subspace that is already of multiplicity `subspace_mult`.
Integer point_on_subspace_conditions(int r, int codim, int subspace_mult, int point_mult);

/// Merges equal multiplicities, drops empty batches, sorts by descending multiplicity.
std::vector<PointBatch> normalize_batches(std::vector<PointBatch> batches);

}  // namespace ahc
