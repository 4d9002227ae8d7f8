#pragma once

// Classification of L_{r,d}(2^n) against the table of special double-point systems.

#include "ahc/integer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace ahc {

enum class ExceptionTag { Quadric, Quartic2, Quartic3, Quartic4, Cubic4 };

std::string_view to_string(ExceptionTag tag);
std::optional<ExceptionTag> exception_tag_from_string(std::string_view name);

/// One row of the exception table. A row matches (r, d, n) when r is in
/// [r_min, r_max] (r_max < 0 means unbounded), d equals `d`, and n lies in
/// [n_min, n_max]; a negative n_max means "n <= r".
struct ExceptionRow {
  ExceptionTag tag;
  int r_min;
  int r_max;
  int d;
  std::int64_t n_min;
  std::int64_t n_max;
};

/// The table, stored as data so reports can cite rows.
std::span<const ExceptionRow> exception_table();

struct SpecialVerdict {
  bool is_exception = false;
  std::optional<Integer> closed_form_dim;  // present iff is_exception
  std::optional<ExceptionTag> exception_tag;
  /// d = 2 and n >= r + 1: the quadric system is empty (non-special).
  bool quadric_empty = false;
};

/// Verdict for L_{r,d}(2^n). Requires r >= 1, d >= 0, n >= 0.
SpecialVerdict classify(int r, int d, std::int64_t n);

/// Closed-form dimension of an exception; throws std::invalid_argument otherwise.
///   quadrics, 2 <= n <= r:      C(r-n+2, 2) - 1
///   (2,4,5), (3,4,9), (4,4,14): 0  (the double quadric through the points)
///   (4,3,7):                    0  (the secant variety of the rational normal quartic)
Integer special_dim(int r, int d, std::int64_t n);

}  // namespace ahc
