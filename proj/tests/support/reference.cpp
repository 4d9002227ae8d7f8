#include "reference.hpp"

#include <map>
#include <mutex>

namespace ahc::testing {

Big pascal(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  static std::mutex m;
  static std::vector<std::vector<Big>> rows{{1}};
  std::lock_guard lock(m);
  while (static_cast<int>(rows.size()) <= a) {
    const auto& prev = rows.back();
    std::vector<Big> next(prev.size() + 1, 1);
    for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(next));
  }
  return rows[a][b];
}

std::int64_t search_n_minus(int r, int d) {
  const Big total = forms(r, d);
  std::int64_t n = 0;
  while (Big(n + 1) * (r + 1) <= total) ++n;
  return n;
}

std::int64_t search_n_plus(int r, int d) {
  const Big total = forms(r, d);
  std::int64_t n = 0;
  while (Big(n) * (r + 1) < total) ++n;
  return n;
}

Big reference_virtual(int r, int d, const std::vector<int>& mults) {
  Big v = forms(r, d) - 1;
  for (int m : mults) v -= pascal(r + m - 1, r);
  return v;
}

std::int64_t search_gamma(int r) {
  std::vector<int> mults(static_cast<std::size_t>(search_n_minus(r, 3)), 2);
  std::int64_t g = 0;
  while (reference_virtual(r, 3, mults) - g > -1) ++g;
  return g;
}

}  // namespace ahc::testing
