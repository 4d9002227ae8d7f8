#pragma once

// Randomized exact dimension computation over a prime field.
//
// A trial places every general point and subspace at random, writes one row per
// linear condition on the degree-d monomial basis and computes the rank mod p.
// By semicontinuity each trial's dimension is an upper bound for the dimension
// at general position, so the minimum over trials is reported.
//
// Failure probability: a trial overestimates the dimension only if the random
// placement lies on the vanishing locus of some nonzero maximal minor. That
// minor is a polynomial of degree at most D = (number of conditions) * d in the
// random coordinates, so by the Schwartz-Zippel bound a trial is wrong with
// probability at most D / p. With p = 2^31 - 1 and desk-scale systems
// (D < 10^5) that is below 5e-5 per trial, and the minimum over t independent
// trials is wrong with probability below (D/p)^t.

#include "ahc/linear_system.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahc {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

enum class SubspacePath {
  Auto,     // axis-aligned when exactly one subspace, sampled otherwise
  Axis,     // coordinate subspace, exact monomial filter; single subspace only
  Sampled,  // random subspace, derivative rows at sampled points
};

struct FieldConfig {
  std::uint64_t prime = kDefaultPrime;  // must be a prime below 2^32
  int trials = 3;
  std::uint64_t seed = 0;
  std::int64_t max_columns = 5000;
  SubspacePath subspace_path = SubspacePath::Auto;
  /// When set, every trial is repeated over this second prime and the lower of
  /// the two dimensions is kept.
  std::optional<std::uint64_t> cross_check_prime;
};

/// Thrown when C(r+d, r) exceeds FieldConfig::max_columns.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument if the prime is not prime, not below 2^32, or not
/// larger than 2 * d * (largest multiplicity) for the given system.
void validate_field(const FieldConfig& cfg, const LinearSystem& system);

/// Degree-d monomials in r+1 variables, in a fixed order. Exponents are stored
/// row-major, (r+1) entries per monomial.
class MonomialBasis {
 public:
  MonomialBasis(int r, int d);
  int r() const noexcept { return r_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const int> exponents(std::size_t index) const {
    return {exps_.data() + index * static_cast<std::size_t>(r_ + 1), static_cast<std::size_t>(r_ + 1)};
  }

 private:
  int r_;
  int d_;
  std::size_t count_ = 0;
  std::vector<int> exps_;
};

using Row = std::vector<std::uint32_t>;

/// Portable uniform sampling of field elements (same stream on every platform).
class FieldRng {
 public:
  explicit FieldRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [1, prime).
  std::uint64_t nonzero(std::uint64_t prime) { return 1 + below(prime - 1); }

 private:
  std::mt19937_64 engine_;
};

/// Rows on the degree-d monomial basis with entries in Z/p.
struct ConditionMatrix {
  std::uint64_t prime = kDefaultPrime;
  std::size_t columns = 0;
  std::vector<Row> rows;
};

/// One row per Hasse derivative of order <= m-1 in the affine chart where the
/// point's largest residue is scaled to 1. Throws on the zero point.
std::vector<Row> rows_for_point(const MonomialBasis& basis, std::span<const std::uint64_t> point,
                                int multiplicity, std::uint64_t prime);

/// Vanishing to order m along the coordinate subspace x_0 = ... = x_{c-1} = 0:
/// one unit row per monomial of degree < m in the first c variables.
std::vector<Row> rows_for_axis_subspace(const MonomialBasis& basis, int codim, int multiplicity,
                                        std::uint64_t prime);

/// Vanishing to order m along the span of `spanning` (r-c+1 vectors): derivative
/// rows of order <= m-1 at C(r-c+d, r-c) random points of the span.
std::vector<Row> rows_for_subspace(const MonomialBasis& basis,
                                   std::span<const std::vector<std::uint64_t>> spanning,
                                   int multiplicity, std::uint64_t prime, FieldRng& rng);

/// Incremental Gaussian elimination mod p. Each basis row is stored from its
/// pivot onwards, normalized so the pivot is 1.
class Eliminator {
 public:
  Eliminator(std::size_t columns, std::uint64_t prime);

  /// Reduces `row` against the basis; returns true if it was independent.
  bool add(Row row);
  std::size_t rank() const noexcept { return rank_; }
  std::size_t columns() const noexcept { return columns_; }
  bool full() const noexcept { return rank_ == columns_; }

 private:
  bool add_mersenne(const Row& row);
  template <class It>
  void store_pivot(std::size_t column, It first, It last);

  std::size_t columns_;
  std::uint64_t prime_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::uint32_t>> pivot_rows_;  // indexed by pivot column, empty if none
};

std::size_t rank_mod_p(const ConditionMatrix& matrix);

struct DimensionReport {
  std::string system;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::int64_t> per_trial_rank;
  std::int64_t columns = 0;
  Integer dim = -1;
  Integer virtual_dim = -1;
  Integer expected = -1;
  bool special = false;
};

/// Assembles the condition matrix of one random placement.
ConditionMatrix build_matrix(const LinearSystem& system, const FieldConfig& cfg, std::uint64_t trial_seed);

/// Minimum over cfg.trials random placements of C(r+d, r) - rank - 1.
/// Throws BudgetExceeded when the column count is over budget.
DimensionReport dimension(const LinearSystem& system, const FieldConfig& cfg);

/// dimension(...).dim == -1, stopping at the first trial that reaches full rank.
bool is_empty(const LinearSystem& system, const FieldConfig& cfg);

/// {system, prime, seed, trials, per_trial_rank, dim, virtual, expected, special}.
std::string report_to_json(const DimensionReport& report);

/// Seed of trial t derived from the base seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t seed, int trial);

}  // namespace ahc
