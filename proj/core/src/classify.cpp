#include "ahc/classify.hpp"

#include "ahc/combinatorics.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ahc {
namespace {

constexpr std::array<ExceptionRow, 5> kTable{{
    {ExceptionTag::Quadric, 2, -1, 2, 2, -1},
    {ExceptionTag::Quartic2, 2, 2, 4, 5, 5},
    {ExceptionTag::Quartic3, 3, 3, 4, 9, 9},
    {ExceptionTag::Quartic4, 4, 4, 4, 14, 14},
    {ExceptionTag::Cubic4, 4, 4, 3, 7, 7},
}};

bool matches(const ExceptionRow& row, int r, int d, std::int64_t n) {
  if (d != row.d || r < row.r_min) return false;
  if (row.r_max >= 0 && r > row.r_max) return false;
  const std::int64_t n_max = row.n_max < 0 ? r : row.n_max;
  return n >= row.n_min && n <= n_max;
}

}  // namespace

std::string_view to_string(ExceptionTag tag) {
  switch (tag) {
    case ExceptionTag::Quadric: return "Quadric";
    case ExceptionTag::Quartic2: return "Quartic2";
    case ExceptionTag::Quartic3: return "Quartic3";
    case ExceptionTag::Quartic4: return "Quartic4";
    case ExceptionTag::Cubic4: return "Cubic4";
  }
  return "?";
}

std::optional<ExceptionTag> exception_tag_from_string(std::string_view name) {
  for (const auto& row : kTable) {
    if (to_string(row.tag) == name) return row.tag;
  }
  return std::nullopt;
}

std::span<const ExceptionRow> exception_table() { return kTable; }

SpecialVerdict classify(int r, int d, std::int64_t n) {
  if (r < 1 || d < 0 || n < 0) throw std::invalid_argument("classify: requires r >= 1, d >= 0, n >= 0");
  SpecialVerdict verdict;
  for (const auto& row : kTable) {
    if (matches(row, r, d, n)) {
      verdict.is_exception = true;
      verdict.exception_tag = row.tag;
      verdict.closed_form_dim =
          row.tag == ExceptionTag::Quadric ? binom(r - n + 2, 2) - 1 : Integer(0);
      return verdict;
    }
  }
  verdict.quadric_empty = d == 2 && n >= r + 1;
  return verdict;
}

Integer special_dim(int r, int d, std::int64_t n) {
  const auto verdict = classify(r, d, n);
  if (!verdict.is_exception) {
    throw std::invalid_argument("special_dim: L_{" + std::to_string(r) + "," + std::to_string(d) +
                                "}(2^" + std::to_string(n) + ") is not an exception");
  }
  return *verdict.closed_form_dim;
}

}  // namespace ahc
