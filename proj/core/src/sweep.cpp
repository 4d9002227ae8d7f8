#include "ahc/sweep.hpp"

#include "ahc/classify.hpp"
#include "ahc/combinatorics.hpp"
#include "ahc/prover.hpp"
#include "ahc/rules.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

namespace ahc {

std::vector<std::tuple<int, int, std::int64_t>> sweep_targets(const SweepOptions& o) {
  std::set<std::tuple<int, int, std::int64_t>> targets;
  for (int r = std::max(o.r_min, 2); r <= o.r_max; ++r) {
    for (int d = std::max(o.d_min, 2); d <= o.d_max; ++d) {
      const auto b = n_bounds(r, d);
      targets.emplace(r, d, to_int64(b.n_minus));
      targets.emplace(r, d, to_int64(b.n_plus));
      for (const auto& row : exception_table()) {
        if (row.d != d || r < row.r_min || (row.r_max >= 0 && r > row.r_max)) continue;
        const std::int64_t hi = row.n_max < 0 ? r : row.n_max;
        for (auto n = row.n_min; n <= hi; ++n) targets.emplace(r, d, n);
      }
    }
  }
  return {targets.begin(), targets.end()};
}

std::vector<SweepRow> run_sweep(const SweepOptions& o) {
  const auto targets = sweep_targets(o);
  std::vector<SweepRow> rows(targets.size());
  ProverOptions popts;
  popts.field = o.field;
  Prover prover(popts);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < targets.size();) {
      const auto start = std::chrono::steady_clock::now();
      const auto [r, d, n] = targets[i];
      const auto sys = LinearSystem::nodes(r, d, n);
      SweepRow row;
      row.r = r;
      row.d = d;
      row.n = n;
      row.virtual_dim = sys.virtual_dim();
      row.expected = sys.expected_dim();
      row.table_exception = classify(r, d, n).is_exception;
      if (sys.sections() <= o.field.max_columns) {
        FieldConfig cfg = o.field;
        cfg.seed = oracle_seed(o.field.seed, sys);
        row.oracle_dim = dimension(sys, cfg).dim;
        row.special = *row.oracle_dim > row.expected;
      }
      if (o.prove) {
        const auto result = prover.prove(r, d, n);
        if (result.ok()) {
          row.rule = std::string(to_string(result.certificate->root->rule));
        } else {
          row.rule = result.failure->budget ? "BUDGET" : "FAILED";
        }
      } else {
        row.rule = "-";
      }
      if (o.timing) {
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      rows[i] = std::move(row);
    }
  };
  unsigned workers = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, targets.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return rows;
}

namespace {

std::string ms_text(const std::optional<double>& ms) {
  if (!ms) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *ms);
  return buf;
}

std::string oracle_text(const SweepRow& row) { return row.skipped() ? "SKIPPED" : to_string(*row.oracle_dim); }

std::string special_text(const SweepRow& row) {
  if (row.skipped()) return "SKIPPED";
  return row.special ? "true" : "false";
}

}  // namespace

std::string format_sweep(const std::vector<SweepRow>& rows, SweepFormat format) {
  std::ostringstream out;
  switch (format) {
    case SweepFormat::Csv:
      out << "r,d,n,virtual,expected,oracle_dim,special,rule,ms\n";
      for (const auto& row : rows) {
        out << row.r << ',' << row.d << ',' << row.n << ',' << row.virtual_dim << ',' << row.expected << ','
            << oracle_text(row) << ',' << special_text(row) << ',' << row.rule << ',' << ms_text(row.ms) << '\n';
      }
      break;
    case SweepFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["r"] = row.r;
        j["d"] = row.d;
        j["n"] = row.n;
        j["virtual"] = static_cast<std::int64_t>(row.virtual_dim);
        j["expected"] = static_cast<std::int64_t>(row.expected);
        if (row.skipped()) {
          j["oracle_dim"] = "SKIPPED";
          j["special"] = nullptr;
        } else {
          j["oracle_dim"] = static_cast<std::int64_t>(*row.oracle_dim);
          j["special"] = row.special;
        }
        j["rule"] = row.rule;
        j["ms"] = row.ms ? nlohmann::ordered_json(*row.ms) : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case SweepFormat::Text: {
      char line[160];
      std::snprintf(line, sizeof line, "%3s %3s %6s %9s %9s %10s %8s  %-14s %s\n", "r", "d", "n", "virtual",
                    "expected", "oracle", "special", "rule", "ms");
      out << line;
      for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "%3d %3d %6lld %9s %9s %10s %8s  %-14s %s\n", row.r, row.d,
                      static_cast<long long>(row.n), to_string(row.virtual_dim).c_str(),
                      to_string(row.expected).c_str(), oracle_text(row).c_str(),
                      row.skipped() ? "SKIPPED" : (row.special ? "SPECIAL" : "-"), row.rule.c_str(),
                      ms_text(row.ms).c_str());
        out << line;
      }
      break;
    }
  }
  return out.str();
}

}  // namespace ahc
