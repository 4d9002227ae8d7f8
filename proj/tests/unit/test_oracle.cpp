#include "ahc/oracle.hpp"

#include "ahc/cubic_systems.hpp"
#include "ahc/syntax.hpp"
#include "exact_oracle.hpp"
#include "reference.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace ahc {
namespace {

FieldConfig config(std::uint64_t seed) {
  FieldConfig cfg;
  cfg.seed = seed;
  return cfg;
}

std::int64_t oracle_dim(const LinearSystem& s, std::uint64_t seed = 1) {
  return to_int64(dimension(s, config(seed)).dim);
}

TEST(Primes, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(2147483647ULL));
  EXPECT_TRUE(is_prime(4294967291ULL));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(4294967295ULL));
  EXPECT_FALSE(is_prime(2147483649ULL));
}

TEST(FieldValidation, RejectsBadPrimes) {
  const auto s = LinearSystem::nodes(3, 4, 8);
  FieldConfig cfg;
  EXPECT_NO_THROW(validate_field(cfg, s));
  cfg.prime = 1000;
  EXPECT_THROW(validate_field(cfg, s), std::invalid_argument);
  cfg.prime = 4294967311ULL;  // prime, but not below 2^32
  EXPECT_THROW(validate_field(cfg, s), std::invalid_argument);
  cfg.prime = 13;  // not larger than 2 * d * m = 16
  EXPECT_THROW(validate_field(cfg, s), std::invalid_argument);
}

TEST(MonomialBasis, SizeIsBinomial) {
  for (int r = 1; r <= 6; ++r) {
    for (int d = 0; d <= 6; ++d) {
      const MonomialBasis basis(r, d);
      ASSERT_EQ(basis.size(), static_cast<std::size_t>(testing::pascal(r + d, r)));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        int sum = 0;
        for (int e : basis.exponents(i)) sum += e;
        EXPECT_EQ(sum, d);
      }
    }
  }
}

TEST(RowsForPoint, Shapes) {
  const std::uint64_t p = kDefaultPrime;
  {
    const MonomialBasis basis(2, 2);
    const std::vector<std::uint64_t> pt{3, 5, 7};
    const auto rows = rows_for_point(basis, pt, 2, p);
    EXPECT_EQ(rows.size(), 3u);
    for (const auto& row : rows) EXPECT_EQ(row.size(), 6u);
  }
  {
    const MonomialBasis basis(3, 4);
    const std::vector<std::uint64_t> pt{1, 2, 3, 4};
    EXPECT_EQ(rows_for_point(basis, pt, 1, p).size(), 1u);
    EXPECT_EQ(rows_for_point(basis, pt, 3, p).size(), 10u);
    const std::vector<std::uint64_t> zero{0, 0, 0, 0};
    EXPECT_THROW((void)rows_for_point(basis, zero, 2, p), std::invalid_argument);
  }
}

TEST(RowsForPoint, SimplePointIsEvaluation) {
  const MonomialBasis basis(2, 3);
  const std::vector<std::uint64_t> pt{1, 2, 3};
  const auto rows = rows_for_point(basis, pt, 1, kDefaultPrime);
  ASSERT_EQ(rows.size(), 1u);
  // The row is proportional to the monomial values; compare ratios against x^e.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::uint64_t value = 1;
    const auto e = basis.exponents(i);
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < e[v]; ++k) value *= pt[v];
    }
    // The chart scales by the largest coordinate; cross-multiply against monomial 0.
    std::uint64_t first = 1;
    const auto e0 = basis.exponents(0);
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < e0[v]; ++k) first *= pt[v];
    }
    const unsigned __int128 lhs = static_cast<unsigned __int128>(rows[0][i]) * first % kDefaultPrime;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(rows[0][0]) * value % kDefaultPrime;
    EXPECT_EQ(static_cast<std::uint64_t>(lhs), static_cast<std::uint64_t>(rhs)) << i;
  }
}

TEST(RowsForSubspace, FullCodimensionContainmentIsOneEvaluation) {
  const MonomialBasis basis(3, 3);
  FieldRng rng(5);
  const std::vector<std::vector<std::uint64_t>> span{{2, 3, 5, 7}};
  ConditionMatrix m{kDefaultPrime, basis.size(), rows_for_subspace(basis, span, 1, kDefaultPrime, rng)};
  EXPECT_EQ(rank_mod_p(m), 1u);
}

TEST(RankModP, TrivialMatrices) {
  ConditionMatrix id{kDefaultPrime, 4, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    Row row(4, 0);
    row[i] = 1;
    id.rows.push_back(row);
  }
  EXPECT_EQ(rank_mod_p(id), 3u);
  id.rows.push_back(id.rows.front());
  EXPECT_EQ(rank_mod_p(id), 3u);
  id.rows.push_back(Row(4, 0));
  EXPECT_EQ(rank_mod_p(id), 3u);
  Row combo{5, 7, 0, 0};
  id.rows.push_back(combo);
  EXPECT_EQ(rank_mod_p(id), 3u);
}

TEST(RankModP, SmallPrimeArithmetic) {
  // Over Z/7: rows (1,2) and (3,6) are dependent.
  ConditionMatrix m{7, 2, {{1, 2}, {3, 6}}};
  EXPECT_EQ(rank_mod_p(m), 1u);
  m.rows.push_back({0, 1});
  EXPECT_EQ(rank_mod_p(m), 2u);
}

TEST(RankModP, SecantCubicInP4) {
  const auto s = LinearSystem::nodes(4, 3, 7);
  const auto m = build_matrix(s, config(3), trial_seed(3, 0));
  EXPECT_EQ(m.columns, 35u);
  EXPECT_EQ(rank_mod_p(m), 34u);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(oracle_dim(LinearSystem::nodes(2, 2, 2)), 0);
  EXPECT_EQ(oracle_dim(LinearSystem::nodes(3, 3, 5)), -1);
  EXPECT_EQ(oracle_dim(LinearSystem::nodes(2, 4, 5)), 0);
  EXPECT_EQ(oracle_dim(LinearSystem::nodes(2, 3, 2)), testing::exact_dimension(LinearSystem::nodes(2, 3, 2)));
  EXPECT_EQ(oracle_dim(LinearSystem::nodes(2, 3, 2)), 3);
}

TEST(Dimension, ReportFields) {
  const auto report = dimension(LinearSystem::nodes(2, 4, 5), config(9));
  EXPECT_EQ(report.system, "L(r=2,d=4; 2^5)");
  EXPECT_EQ(report.columns, 15);
  EXPECT_EQ(report.trials, 3);
  EXPECT_EQ(report.per_trial_rank.size(), 3u);
  EXPECT_EQ(report.virtual_dim, -1);
  EXPECT_EQ(report.expected, -1);
  EXPECT_TRUE(report.special);
  const auto j = nlohmann::json::parse(report_to_json(report));
  EXPECT_EQ(j.at("system"), "L(r=2,d=4; 2^5)");
  EXPECT_EQ(j.at("dim"), 0);
  EXPECT_EQ(j.at("virtual"), -1);
  EXPECT_EQ(j.at("expected"), -1);
  EXPECT_EQ(j.at("special"), true);
  EXPECT_EQ(j.at("per_trial_rank").size(), 3u);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  for (const char* k : {"system", "prime", "seed", "trials", "per_trial_rank", "dim", "virtual", "expected", "special"}) {
    EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end()) << k;
  }
}

TEST(Dimension, BudgetExceeded) {
  FieldConfig cfg;
  cfg.max_columns = 19;
  EXPECT_THROW((void)dimension(LinearSystem::nodes(3, 3, 2), cfg), BudgetExceeded);
  EXPECT_THROW((void)is_empty(LinearSystem::nodes(3, 3, 2), cfg), BudgetExceeded);
}

TEST(Dimension, DeterministicForSeed) {
  const auto s = LinearSystem::nodes(3, 5, 14);
  const auto a = dimension(s, config(42));
  const auto b = dimension(s, config(42));
  EXPECT_EQ(a.per_trial_rank, b.per_trial_rank);
  EXPECT_EQ(report_to_json(a), report_to_json(b));
}

TEST(Dimension, CrossCheckPrime) {
  FieldConfig cfg = config(4);
  cfg.cross_check_prime = 4294967291ULL;
  EXPECT_EQ(dimension(LinearSystem::nodes(4, 4, 14), cfg).dim, 0);
  EXPECT_EQ(dimension(LinearSystem::nodes(4, 4, 13), cfg).dim, 4);
}

TEST(IsEmpty, Examples) {
  EXPECT_TRUE(is_empty(LinearSystem(5, 3, {{2, 9}, {1, 2}}), config(1)));
  EXPECT_TRUE(is_empty(LinearSystem::nodes(7, 3, 15), config(1)));
  for (int d = 0; d <= 4; ++d) EXPECT_FALSE(is_empty(LinearSystem(3, d), config(1)));
}

TEST(Subspaces, PaperDimensions) {
  EXPECT_EQ(oracle_dim(cubic::p7_witness()), 6);
  for (int r = 4; r <= 7; ++r) EXPECT_EQ(oracle_dim(cubic::double_subspace_quadric(r)), 2) << r;
}

TEST(Subspaces, AxisAndSampledPathsAgree) {
  for (int r = 3; r <= 7; ++r) {
    for (int d = 1; d <= 3; ++d) {
      for (int c : {3, 4}) {
        if (c > r) continue;
        for (int m = 1; m <= 2; ++m) {
          for (std::int64_t nodes : {0, 2, 4}) {
            std::vector<PointBatch> on;
            if (r - c >= 1 && nodes > 0 && m < 2) on.push_back({2, nodes / 2});
            const LinearSystem s(r, d, {{2, nodes}}, {{"L", c, m, on}});
            FieldConfig axis = config(11);
            axis.subspace_path = SubspacePath::Axis;
            FieldConfig sampled = config(11);
            sampled.subspace_path = SubspacePath::Sampled;
            EXPECT_EQ(dimension(s, axis).dim, dimension(s, sampled).dim) << format_system(s);
          }
        }
      }
    }
  }
}

TEST(Subspaces, AgreeWithExactOracle) {
  const std::vector<LinearSystem> systems{
      cubic::double_subspace_quadric(4), cubic::double_subspace_quadric(5), cubic::three_subspace_quadrics(4),
      LinearSystem(4, 3, {{2, 3}}, {{"L", 3, 1, {{2, 1}}}}), LinearSystem(5, 3, {}, {{"L", 3, 2, {}}})};
  for (const auto& s : systems) {
    EXPECT_EQ(oracle_dim(s), testing::exact_dimension(s)) << format_system(s);
  }
}

TEST(Soundness, EveryTrialIsAtLeastExpected) {
  for (int r = 2; r <= 4; ++r) {
    for (int d = 2; d <= 5; ++d) {
      for (std::int64_t n = 0; n <= 12; ++n) {
        const auto s = LinearSystem::nodes(r, d, n);
        const auto report = dimension(s, config(static_cast<std::uint64_t>(100 * r + 10 * d + n)));
        for (auto rank : report.per_trial_rank) {
          EXPECT_GE(report.columns - rank - 1, s.expected_dim());
        }
        EXPECT_GE(report.dim, report.expected);
      }
    }
  }
}

TEST(Stability, DisjointSeedsAgree) {
  for (int r = 2; r <= 5; ++r) {
    for (int d = 3; d <= 5; ++d) {
      const auto b = n_bounds(r, d);
      for (auto n : {b.n_minus, b.n_plus}) {
        const auto s = LinearSystem::nodes(r, d, static_cast<std::int64_t>(n));
        EXPECT_EQ(oracle_dim(s, 1), oracle_dim(s, 0xdeadbeef)) << format_system(s);
      }
    }
  }
}

TEST(Agreement, MatchesExactOracleOnSmallSystems) {
  for (int r = 2; r <= 3; ++r) {
    for (int d = 2; d <= 5; ++d) {
      const auto top = static_cast<std::int64_t>(n_bounds(r, d).n_plus);
      for (std::int64_t n = 0; n <= top; ++n) {
        const auto s = LinearSystem::nodes(r, d, n);
        EXPECT_EQ(oracle_dim(s), testing::exact_dimension(s)) << format_system(s);
      }
    }
  }
  for (const auto& s : {LinearSystem(3, 4, {{3, 1}, {2, 5}}), LinearSystem(2, 5, {{4, 1}, {2, 3}}),
                        LinearSystem(3, 4, {{4, 1}, {2, 4}}), LinearSystem(3, 3, {{2, 4}, {1, 4}})}) {
    EXPECT_EQ(oracle_dim(s), testing::exact_dimension(s)) << format_system(s);
  }
}

TEST(FieldRng, BelowStaysInRange) {
  FieldRng rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const auto x = rng.nonzero(11);
    EXPECT_GE(x, 1u);
    EXPECT_LT(x, 11u);
  }
}

TEST(TrialSeed, DistinctPerTrial) {
  EXPECT_NE(trial_seed(0, 0), trial_seed(0, 1));
  EXPECT_NE(trial_seed(0, 0), trial_seed(1, 0));
  EXPECT_EQ(trial_seed(5, 2), trial_seed(5, 2));
}

}  // namespace
}  // namespace ahc
