#include "ahc/sweep.hpp"

#include "ahc/classify.hpp"
#include "ahc/combinatorics.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <set>
#include <sstream>

namespace ahc {
namespace {

SweepOptions small(int r_max, int d_max) {
  SweepOptions o;
  o.r_max = r_max;
  o.d_max = d_max;
  o.field.seed = 7;
  return o;
}

TEST(Sweep, TargetsIncludeBoundsAndTableRows) {
  const auto targets = sweep_targets(small(4, 6));
  std::set<std::tuple<int, int, std::int64_t>> set(targets.begin(), targets.end());
  EXPECT_EQ(set.size(), targets.size());
  EXPECT_TRUE(std::is_sorted(targets.begin(), targets.end()));
  for (int r = 2; r <= 4; ++r) {
    for (int d = 2; d <= 6; ++d) {
      const auto b = n_bounds(r, d);
      EXPECT_TRUE(set.count({r, d, to_int64(b.n_minus)}));
      EXPECT_TRUE(set.count({r, d, to_int64(b.n_plus)}));
    }
    for (int n = 2; n <= r; ++n) EXPECT_TRUE(set.count({r, 2, n}));
  }
  for (auto t : {std::tuple{2, 4, 5}, std::tuple{3, 4, 9}, std::tuple{4, 4, 14}, std::tuple{4, 3, 7}}) {
    EXPECT_TRUE(set.count({std::get<0>(t), std::get<1>(t), std::get<2>(t)}));
  }
}

TEST(Sweep, FlagsExactlyTheTable) {
  const auto rows = run_sweep(small(4, 6));
  std::size_t special = 0;
  for (const auto& row : rows) {
    ASSERT_FALSE(row.skipped());
    EXPECT_FALSE(row.mismatch()) << row.r << "," << row.d << "," << row.n;
    EXPECT_EQ(row.table_exception, classify(row.r, row.d, row.n).is_exception);
    EXPECT_GE(*row.oracle_dim, row.expected);
    EXPECT_NE(row.rule, "FAILED");
    special += row.special;
  }
  // Quadric rows n = 2..r for r = 2, 3, 4 and the four sporadic rows.
  EXPECT_EQ(special, 1u + 2u + 3u + 4u);
}

TEST(Sweep, PlaneHasOnlyQuadricsAndTheQuartic) {
  const auto rows = run_sweep(small(2, 8));
  for (const auto& row : rows) {
    if (row.special) EXPECT_TRUE(row.d == 2 || (row.d == 4 && row.n == 5)) << row.d << "," << row.n;
  }
}

TEST(Sweep, EmptyRange) {
  auto o = small(4, 6);
  o.r_min = 5;
  EXPECT_TRUE(run_sweep(o).empty());
  EXPECT_EQ(format_sweep({}, SweepFormat::Csv), "r,d,n,virtual,expected,oracle_dim,special,rule,ms\n");
}

TEST(Sweep, SkippedRowsAreKept) {
  auto o = small(4, 6);
  o.field.max_columns = 40;
  const auto rows = run_sweep(o);
  EXPECT_EQ(rows.size(), sweep_targets(o).size());
  bool any = false;
  for (const auto& row : rows) any |= row.skipped();
  EXPECT_TRUE(any);
  const auto csv = format_sweep(rows, SweepFormat::Csv);
  EXPECT_NE(csv.find("SKIPPED"), std::string::npos);
  const auto json = nlohmann::json::parse(format_sweep(rows, SweepFormat::Json));
  EXPECT_EQ(json.size(), rows.size());
}

TEST(Sweep, FormatsAreDeterministic) {
  const auto o = small(3, 5);
  for (auto f : {SweepFormat::Csv, SweepFormat::Json, SweepFormat::Text}) {
    EXPECT_EQ(format_sweep(run_sweep(o), f), format_sweep(run_sweep(o), f));
  }
  auto serial = o;
  serial.jobs = 1;
  EXPECT_EQ(format_sweep(run_sweep(o), SweepFormat::Csv), format_sweep(run_sweep(serial), SweepFormat::Csv));
}

TEST(Sweep, CsvColumns) {
  const auto csv = format_sweep(run_sweep(small(2, 4)), SweepFormat::Csv);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "r,d,n,virtual,expected,oracle_dim,special,rule,ms");
  std::string line;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8) << line;
  }
}

TEST(Sweep, TimingColumn) {
  auto o = small(2, 3);
  o.timing = true;
  for (const auto& row : run_sweep(o)) EXPECT_TRUE(row.ms.has_value());
  o.timing = false;
  for (const auto& row : run_sweep(o)) EXPECT_FALSE(row.ms.has_value());
}

}  // namespace
}  // namespace ahc
