#include "ahc/combinatorics.hpp"

#include "reference.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace ahc {
namespace {

using testing::pascal;

TEST(Binom, DirectValues) {
  EXPECT_EQ(binom(7, 3), 35);
  EXPECT_EQ(binom(8, 4), 70);
  EXPECT_EQ(binom(5, 7), 0);
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(0, 0), 1);
}

TEST(Binom, MatchesPascalTriangle) {
  for (int a = 0; a <= 60; ++a) {
    for (int b = -1; b <= a + 1; ++b) EXPECT_EQ(binom(a, b), pascal(a, b)) << a << "," << b;
  }
}

TEST(Binom, ArbitraryPrecision) {
  // C(100, 50) does not fit in 64 bits.
  EXPECT_EQ(binom(100, 50), pascal(100, 50));
  EXPECT_GT(binom(100, 50), Integer(1) << 64);
}

TEST(VirtualDim, Examples) {
  EXPECT_EQ(virtual_dim(4, 3, std::vector<int>(7, 2)), -1);
  EXPECT_EQ(virtual_dim(3, 4, std::vector<int>(8, 2)), 2);
  EXPECT_EQ(virtual_dim(3, 4, std::vector<int>{}), binom(7, 3) - 1);
  EXPECT_EQ(virtual_dim(3, 4, std::vector<int>(8, 2)), testing::reference_virtual(3, 4, std::vector<int>(8, 2)));
}

TEST(VirtualDim, BatchesAgreeWithMultiplicities) {
  const std::vector<PointBatch> batches{{3, 1}, {2, 5}, {1, 2}};
  const std::vector<int> flat{3, 2, 2, 2, 2, 2, 1, 1};
  EXPECT_EQ(virtual_dim(3, 4, batches), virtual_dim(3, 4, flat));
  EXPECT_EQ(virtual_dim(3, 4, flat), testing::reference_virtual(3, 4, flat));
}

TEST(VirtualDim, RejectsNonPositiveMultiplicity) {
  EXPECT_ANY_THROW(virtual_dim(3, 4, std::vector<int>{2, 0}));
}

TEST(ExpectedDim, Clamp) {
  EXPECT_EQ(expected_dim(-5), -1);
  EXPECT_EQ(expected_dim(2), 2);
  EXPECT_EQ(expected_dim(virtual_dim(4, 4, std::vector<int>(14, 2))), -1);
}

TEST(NodeBounds, Examples) {
  auto check = [](int r, int d, int lo, int hi) {
    const auto b = n_bounds(r, d);
    EXPECT_EQ(b.n_minus, lo);
    EXPECT_EQ(b.n_plus, hi);
    EXPECT_EQ(b.n_minus, testing::search_n_minus(r, d));
    EXPECT_EQ(b.n_plus, testing::search_n_plus(r, d));
  };
  check(3, 4, 8, 9);
  check(4, 4, 14, 14);
  check(5, 3, 9, 10);
}

TEST(LfBounds, Examples) {
  EXPECT_EQ(quartic_lf_bound(3), 5);
  EXPECT_EQ(quartic_lf_bound(2), 2);
  for (int d = 4; d <= 12; ++d) {
    EXPECT_EQ(lf_bound(3, d), k0(d)) << d;
    // Both equal floor((d+1)^2 / 4) - 1.
    EXPECT_EQ(k0(d), (d + 1) * (d + 1) / 4 - 1) << d;
  }
  const auto all = lf_bounds(3, 5);
  EXPECT_EQ(all.k_r, quartic_lf_bound(3));
  EXPECT_EQ(all.k0_d, k0(5));
  EXPECT_EQ(all.h_d, h(5));
  EXPECT_EQ(all.k_rd, lf_bound(3, 5));
}

TEST(LfBounds, SmallDegreeValues) {
  EXPECT_EQ(h(3), 2);
  EXPECT_EQ(h(4), 3);
  EXPECT_EQ(h(5), 3);
  EXPECT_EQ(k0(3), 3);
  EXPECT_EQ(k0(4), 5);
}

TEST(B0Decompose, Examples) {
  auto check = [](int r, int d, int b0, int beta) {
    const auto got = b0_decompose(r, d);
    EXPECT_EQ(got.b0_floor, b0);
    EXPECT_EQ(got.beta, beta);
    EXPECT_EQ(got.b0_floor * r + got.beta, pascal(r + d - 1, r - 1));
  };
  check(3, 5, 7, 0);
  check(3, 6, 9, 1);
  check(5, 5, 25, 1);
}

TEST(SecondB, Examples) {
  EXPECT_EQ(second_b(3, 6), 10);
  EXPECT_EQ(second_b(3, 5), 7);
  EXPECT_EQ(second_b(5, 5), 26);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_r(6), 0);
  EXPECT_EQ(gamma_r(5), 2);
  EXPECT_EQ(gamma_r(8), 3);
  EXPECT_EQ(gamma_r(11), 4);
}

TEST(Gamma, AgreesWithSearchedValue) {
  for (int r = 2; r <= 40; ++r) EXPECT_EQ(gamma_r(r), testing::search_gamma(r)) << r;
}

TEST(Thresholds, BundleMatchesIndividualFunctions) {
  for (int r = 3; r <= 8; ++r) {
    for (int d = 5; d <= 8; ++d) {
      const auto t = thresholds(r, d);
      EXPECT_EQ(t.n_minus, n_bounds(r, d).n_minus);
      EXPECT_EQ(t.n_plus, n_bounds(r, d).n_plus);
      EXPECT_EQ(t.k_r, quartic_lf_bound(r));
      EXPECT_EQ(t.k0_d, k0(d));
      EXPECT_EQ(t.h_d, h(d));
      EXPECT_EQ(t.k_rd, lf_bound(r, d));
      EXPECT_EQ(t.b0_floor, b0_decompose(r, d).b0_floor);
      EXPECT_EQ(t.beta, b0_decompose(r, d).beta);
      EXPECT_EQ(t.b_second, second_b(r, d));
      EXPECT_EQ(t.gamma_r, gamma_r(r));
      if (t.beta == 0) EXPECT_EQ(t.b_second, t.b0_floor);
    }
  }
}

}  // namespace
}  // namespace ahc
