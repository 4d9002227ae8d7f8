#include "ahc/oracle.hpp"

#include "ahc/syntax.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>

namespace ahc {
namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kMersenne31 = (1ULL << 31) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>((static_cast<Wide>(result) * base) % p);
    base = static_cast<std::uint64_t>((static_cast<Wide>(base) * base) % p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Calls f(alpha) for every multi-index over `vars` variables with |alpha| <= max_order.
template <class F>
void for_each_multi_index(int vars, int max_order, F&& f) {
  std::vector<int> alpha(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == vars) {
      f(alpha);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      alpha[static_cast<std::size_t>(index)] = k;
      self(self, index + 1, remaining - k);
    }
    alpha[static_cast<std::size_t>(index)] = 0;
  };
  rec(rec, 0, max_order);
}

std::vector<std::uint64_t> random_point(int r, std::uint64_t prime, FieldRng& rng) {
  std::vector<std::uint64_t> point(static_cast<std::size_t>(r + 1));
  for (auto& x : point) x = rng.nonzero(prime);
  return point;
}

std::vector<std::uint64_t> random_combination(std::span<const std::vector<std::uint64_t>> spanning,
                                              std::size_t length, std::uint64_t prime, FieldRng& rng) {
  for (;;) {
    std::vector<std::uint64_t> point(length, 0);
    for (const auto& v : spanning) {
      const std::uint64_t lambda = rng.nonzero(prime);
      for (std::size_t i = 0; i < length; ++i) point[i] = (point[i] + mulmod(lambda, v[i], prime)) % prime;
    }
    if (std::any_of(point.begin(), point.end(), [](std::uint64_t x) { return x != 0; })) return point;
  }
}

}  // namespace

std::uint64_t FieldRng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = static_cast<std::uint64_t>((static_cast<Wide>(x) * x) % n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

void validate_field(const FieldConfig& cfg, const LinearSystem& system) {
  auto check = [&](std::uint64_t p) {
    if (p >= (1ULL << 32)) throw std::invalid_argument("field prime must be below 2^32");
    if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    int mult = system.max_multiplicity();
    for (const auto& s : system.subspaces()) mult = std::max(mult, s.multiplicity);
    const std::uint64_t bound = 2ULL * static_cast<std::uint64_t>(system.d()) * static_cast<std::uint64_t>(mult);
    if (p <= bound) {
      throw std::invalid_argument("field prime " + std::to_string(p) + " must exceed 2*d*m = " +
                                  std::to_string(bound));
    }
  };
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  check(cfg.prime);
  if (cfg.cross_check_prime) check(*cfg.cross_check_prime);
}

MonomialBasis::MonomialBasis(int r, int d) : r_(r), d_(d) {
  if (r < 0 || d < 0) throw std::invalid_argument("monomial basis: r and d must be >= 0");
  const int vars = r + 1;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == vars - 1) {
      e[static_cast<std::size_t>(index)] = remaining;
      exps_.insert(exps_.end(), e.begin(), e.end());
      ++count_;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(index)] = k;
      self(self, index + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
}

std::vector<Row> rows_for_point(const MonomialBasis& basis, std::span<const std::uint64_t> point,
                                int multiplicity, std::uint64_t prime) {
  const int r = basis.r();
  const int d = basis.d();
  if (point.size() != static_cast<std::size_t>(r + 1)) throw std::invalid_argument("point has wrong length");
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be >= 1");

  // Affine chart at the coordinate with the largest residue.
  std::size_t chart = 0;
  for (std::size_t i = 1; i < point.size(); ++i) {
    if (point[i] % prime > point[chart] % prime) chart = i;
  }
  if (point[chart] % prime == 0) throw std::invalid_argument("rows_for_point: zero point");
  const std::uint64_t scale = inverse(point[chart] % prime, prime);
  std::vector<std::uint64_t> x(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) x[i] = mulmod(point[i] % prime, scale, prime);

  const int order = std::min(multiplicity - 1, d);
  // powers[i][e] = x_i^e, binom_mod[a][k] = C(a, k) mod p for k <= order.
  std::vector<std::vector<std::uint64_t>> powers(point.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(d + 1)));
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i][0] = 1;
    for (int e = 1; e <= d; ++e) powers[i][static_cast<std::size_t>(e)] = mulmod(powers[i][static_cast<std::size_t>(e - 1)], x[i], prime);
  }
  std::vector<std::vector<std::uint64_t>> binom_mod(static_cast<std::size_t>(d + 1),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(order + 1), 0));
  for (int a = 0; a <= d; ++a) {
    binom_mod[static_cast<std::size_t>(a)][0] = 1;
    for (int k = 1; k <= std::min(a, order); ++k) {
      const std::uint64_t above = k <= a - 1 ? binom_mod[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(k)] : 0;
      binom_mod[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] =
          (binom_mod[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(k - 1)] + above) % prime;
    }
  }

  std::vector<std::size_t> affine;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i != chart) affine.push_back(i);
  }

  std::vector<Row> rows;
  for_each_multi_index(r, order, [&](const std::vector<int>& alpha) {
    Row row(basis.size(), 0);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto a = basis.exponents(col);
      std::uint64_t value = 1;
      for (std::size_t j = 0; j < affine.size() && value != 0; ++j) {
        const int ai = a[affine[j]];
        const int k = alpha[j];
        if (ai < k) {
          value = 0;
          break;
        }
        value = mulmod(value, binom_mod[static_cast<std::size_t>(ai)][static_cast<std::size_t>(k)], prime);
        value = mulmod(value, powers[affine[j]][static_cast<std::size_t>(ai - k)], prime);
      }
      row[col] = static_cast<std::uint32_t>(value);
    }
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<Row> rows_for_axis_subspace(const MonomialBasis& basis, int codim, int multiplicity,
                                        std::uint64_t) {
  if (codim < 1 || codim > basis.r()) throw std::invalid_argument("subspace codim must be in [1, r]");
  std::vector<Row> rows;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto a = basis.exponents(col);
    int normal_degree = 0;
    for (int i = 0; i < codim; ++i) normal_degree += a[static_cast<std::size_t>(i)];
    if (normal_degree < multiplicity) {
      Row row(basis.size(), 0);
      row[col] = 1;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Row> rows_for_subspace(const MonomialBasis& basis,
                                   std::span<const std::vector<std::uint64_t>> spanning,
                                   int multiplicity, std::uint64_t prime, FieldRng& rng) {
  const int r = basis.r();
  const int codim = r + 1 - static_cast<int>(spanning.size());
  if (codim < 1 || codim > r) throw std::invalid_argument("subspace codim must be in [1, r]");
  const auto samples = to_int64(binom(r - codim + basis.d(), r - codim));
  std::vector<Row> rows;
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto point = random_combination(spanning, static_cast<std::size_t>(r + 1), prime, rng);
    auto block = rows_for_point(basis, point, multiplicity, prime);
    std::move(block.begin(), block.end(), std::back_inserter(rows));
  }
  return rows;
}

Eliminator::Eliminator(std::size_t columns, std::uint64_t prime)
    : columns_(columns), prime_(prime), pivot_rows_(columns) {}

bool Eliminator::add(Row row) {
  if (row.size() != columns_) throw std::invalid_argument("eliminator: row has wrong length");
  if (prime_ == kMersenne31) return add_mersenne(row);
  const std::uint64_t p = prime_;
  // Barrett reduction: for x < 2^64 the estimate x * m / 2^64 is at most two
  // below the true quotient, which avoids a hardware division per entry.
  const std::uint64_t m = ~std::uint64_t{0} / p;
  auto reduce = [p, m](std::uint64_t x) {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  };
  for (std::size_t j = 0; j < columns_; ++j) {
    if (row[j] == 0) continue;
    auto& pivot = pivot_rows_[j];
    if (pivot.empty()) {
      store_pivot(j, row.begin() + static_cast<std::ptrdiff_t>(j), row.end());
      return true;
    }
    const std::uint64_t factor = p - row[j];
    std::uint32_t* target = row.data() + j;
    for (std::size_t k = 0; k < pivot.size(); ++k) {
      target[k] = static_cast<std::uint32_t>(reduce(target[k] + factor * pivot[k]));
    }
  }
  return false;
}

// For p = 2^31 - 1 the row is held in 64-bit accumulators and folded only every
// few updates: after a fold every entry is below 2^31 + 8, and three products
// below 2^62 + 2^34 can be added before the sum could reach 2^64.
bool Eliminator::add_mersenne(const Row& input) {
  constexpr std::uint64_t M = kMersenne31;
  auto fold = [](std::uint64_t v) {
    v = (v & M) + (v >> 31);
    return (v & M) + (v >> 31);
  };
  auto canonical = [&](std::uint64_t v) {
    v = fold(v);
    return v >= M ? v - M : v;
  };
  std::vector<std::uint64_t> acc(input.begin(), input.end());
  int pending = 0;
  for (std::size_t j = 0; j < columns_; ++j) {
    const std::uint64_t v = canonical(acc[j]);
    acc[j] = v;
    if (v == 0) continue;
    auto& pivot = pivot_rows_[j];
    if (pivot.empty()) {
      std::vector<std::uint32_t> tail(columns_ - j);
      for (std::size_t k = j; k < columns_; ++k) tail[k - j] = static_cast<std::uint32_t>(canonical(acc[k]));
      store_pivot(j, tail.begin(), tail.end());
      return true;
    }
    const std::uint64_t factor = M - v;
    std::uint64_t* target = acc.data() + j;
    const std::uint32_t* source = pivot.data();
    const std::size_t n = pivot.size();
    for (std::size_t k = 0; k < n; ++k) target[k] += factor * source[k];
    if (++pending == 3) {
      for (std::size_t k = j + 1; k < columns_; ++k) acc[k] = fold(acc[k]);
      pending = 0;
    }
  }
  return false;
}

template <class It>
void Eliminator::store_pivot(std::size_t column, It first, It last) {
  auto& pivot = pivot_rows_[column];
  pivot.assign(first, last);
  const std::uint64_t inv = inverse(pivot.front(), prime_);
  for (auto& x : pivot) x = static_cast<std::uint32_t>(mulmod(x, inv, prime_));
  ++rank_;
}

std::size_t rank_mod_p(const ConditionMatrix& matrix) {
  Eliminator elim(matrix.columns, matrix.prime);
  for (const auto& row : matrix.rows) {
    Row reduced(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) reduced[i] = static_cast<std::uint32_t>(row[i] % matrix.prime);
    elim.add(std::move(reduced));
    if (elim.full()) break;
  }
  return elim.rank();
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// Feeds the rows of one random placement to `sink` block by block; stops early
// when sink returns false.
template <class Sink>
void generate_rows(const LinearSystem& system, std::uint64_t prime, SubspacePath path,
                   std::uint64_t seed, const MonomialBasis& basis, Sink&& sink) {
  FieldRng rng(seed);
  const int r = system.r();
  const bool axis = path == SubspacePath::Axis ||
                    (path == SubspacePath::Auto && system.subspaces().size() == 1);
  if (axis && system.subspaces().size() > 1) {
    throw std::invalid_argument("axis-aligned subspace path supports a single subspace");
  }

  for (const auto& group : system.subspaces()) {
    const auto span_size = static_cast<std::size_t>(r + 1 - group.codim);
    std::vector<std::vector<std::uint64_t>> spanning;
    if (axis) {
      // Coordinate subspace x_0 = ... = x_{c-1} = 0, spanned by the remaining unit vectors
      // mixed at random so that sampled points on it are general.
      for (std::size_t k = 0; k < span_size; ++k) {
        std::vector<std::uint64_t> v(static_cast<std::size_t>(r + 1), 0);
        for (int i = group.codim; i <= r; ++i) v[static_cast<std::size_t>(i)] = rng.nonzero(prime);
        spanning.push_back(std::move(v));
      }
      if (!sink(rows_for_axis_subspace(basis, group.codim, group.multiplicity, prime))) return;
    } else {
      for (std::size_t k = 0; k < span_size; ++k) spanning.push_back(random_point(r, prime, rng));
      if (!sink(rows_for_subspace(basis, spanning, group.multiplicity, prime, rng))) return;
    }
    for (const auto& batch : group.points) {
      for (std::int64_t i = 0; i < batch.count; ++i) {
        const auto point = random_combination(spanning, static_cast<std::size_t>(r + 1), prime, rng);
        if (!sink(rows_for_point(basis, point, batch.multiplicity, prime))) return;
      }
    }
  }
  for (const auto& batch : system.points()) {
    for (std::int64_t i = 0; i < batch.count; ++i) {
      if (!sink(rows_for_point(basis, random_point(r, prime, rng), batch.multiplicity, prime))) return;
    }
  }
}

std::int64_t trial_rank(const LinearSystem& system, const MonomialBasis& basis, std::uint64_t prime,
                        SubspacePath path, std::uint64_t seed) {
  Eliminator elim(basis.size(), prime);
  generate_rows(system, prime, path, seed, basis, [&](std::vector<Row> block) {
    for (auto& row : block) {
      elim.add(std::move(row));
      if (elim.full()) return false;
    }
    return true;
  });
  return static_cast<std::int64_t>(elim.rank());
}

void check_budget(const LinearSystem& system, const FieldConfig& cfg) {
  if (system.sections() > cfg.max_columns) {
    throw BudgetExceeded("system " + format_system(system) + " needs " + to_string(system.sections()) +
                         " columns, budget is " + std::to_string(cfg.max_columns));
  }
}

}  // namespace

ConditionMatrix build_matrix(const LinearSystem& system, const FieldConfig& cfg, std::uint64_t seed) {
  check_budget(system, cfg);
  validate_field(cfg, system);
  MonomialBasis basis(system.r(), system.d());
  ConditionMatrix matrix{cfg.prime, basis.size(), {}};
  generate_rows(system, cfg.prime, cfg.subspace_path, seed, basis, [&](std::vector<Row> block) {
    std::move(block.begin(), block.end(), std::back_inserter(matrix.rows));
    return true;
  });
  return matrix;
}

DimensionReport dimension(const LinearSystem& system, const FieldConfig& cfg) {
  check_budget(system, cfg);
  validate_field(cfg, system);
  MonomialBasis basis(system.r(), system.d());
  const auto columns = static_cast<std::int64_t>(basis.size());

  DimensionReport report;
  report.system = format_system(system);
  report.prime = cfg.prime;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.columns = columns;
  report.virtual_dim = system.virtual_dim();
  report.expected = system.expected_dim();

  std::int64_t best_rank = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, t);
    std::int64_t rank = trial_rank(system, basis, cfg.prime, cfg.subspace_path, seed);
    if (cfg.cross_check_prime) {
      rank = std::max(rank, trial_rank(system, basis, *cfg.cross_check_prime, cfg.subspace_path, seed));
    }
    report.per_trial_rank.push_back(rank);
    best_rank = std::max(best_rank, rank);
  }
  report.dim = Integer(columns - best_rank - 1);
  report.special = report.dim > report.expected;
  return report;
}

bool is_empty(const LinearSystem& system, const FieldConfig& cfg) {
  check_budget(system, cfg);
  validate_field(cfg, system);
  MonomialBasis basis(system.r(), system.d());
  const auto columns = static_cast<std::int64_t>(basis.size());
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, t);
    if (trial_rank(system, basis, cfg.prime, cfg.subspace_path, seed) == columns) return true;
    if (cfg.cross_check_prime &&
        trial_rank(system, basis, *cfg.cross_check_prime, cfg.subspace_path, seed) == columns) {
      return true;
    }
  }
  return false;
}

namespace {

// Numbers when they fit in 64 bits, decimal strings otherwise.
nlohmann::ordered_json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

}  // namespace

std::string report_to_json(const DimensionReport& report) {
  nlohmann::ordered_json j;
  j["system"] = report.system;
  j["prime"] = report.prime;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["per_trial_rank"] = report.per_trial_rank;
  j["dim"] = json_integer(report.dim);
  j["virtual"] = json_integer(report.virtual_dim);
  j["expected"] = json_integer(report.expected);
  j["special"] = report.special;
  return j.dump();
}

}  // namespace ahc
