#pragma once

// Bulk classification of L_{r,d}(2^n) over a grid of (r, d).

#include "ahc/oracle.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ahc {

struct SweepOptions {
  int r_min = 2;
  int r_max = 4;
  int d_min = 2;
  int d_max = 6;
  FieldConfig field;
  unsigned jobs = 0;  // 0 means hardware concurrency
  bool prove = true;  // fill the rule column from a certificate
  bool timing = false;
};

struct SweepRow {
  int r = 0;
  int d = 0;
  std::int64_t n = 0;
  Integer virtual_dim = 0;
  Integer expected = 0;
  std::optional<Integer> oracle_dim;  // empty when over the column budget
  bool special = false;
  /// Root rule of the certificate, "FAILED", "BUDGET" or "-" when proving is off.
  std::string rule;
  bool table_exception = false;
  std::optional<double> ms;

  bool skipped() const noexcept { return !oracle_dim.has_value(); }
  /// The oracle disagrees with the exception table.
  bool mismatch() const noexcept { return !skipped() && special != table_exception; }
};

/// (r, d, n) targets: n in {n_minus, n_plus} plus every table row in range,
/// sorted by (r, d, n) without repeats.
std::vector<std::tuple<int, int, std::int64_t>> sweep_targets(const SweepOptions& options);

/// Rows in canonical order, computed on a worker pool.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

enum class SweepFormat { Text, Json, Csv };

std::string format_sweep(const std::vector<SweepRow>& rows, SweepFormat format);

}  // namespace ahc
