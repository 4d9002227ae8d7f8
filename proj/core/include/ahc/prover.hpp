#pragma once

// Certificate generator for the double-point induction.
//
// Dispatch for a system S, first match wins:
//   closed form, TABLE, named cubic systems, simple points, a d-fold point
//   (CONE), a (d-1)-fold point plus nodes (LF rules), nodes only (anchored
//   degenerations, MONOTONE_DOWN below and EMPTY_UP above the anchors).
// When the chosen rule fails, nodes-only systems try a Castelnuovo split and
// then an ORACLE leaf if the column budget allows.

#include "ahc/certificate.hpp"
#include "ahc/oracle.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

namespace ahc {

struct ProverOptions {
  FieldConfig field;
  int max_depth = 400;
  /// Fall back to ORACLE leaves when no rule applies.
  bool oracle_fallback = true;
};

struct ProofFailure {
  std::string system;
  std::string reason;
  bool budget = false;  // an ORACLE leaf was needed but over max_columns
};

struct ProveResult {
  std::optional<Certificate> certificate;
  std::optional<ProofFailure> failure;

  bool ok() const noexcept { return certificate.has_value(); }
};

/// Thread-safe: prove() may be called concurrently; subgoals are shared
/// through one synchronized memo table keyed on the canonical system text.
class Prover {
 public:
  explicit Prover(ProverOptions options = {});

  /// Certificate for L_{r,d}(2^n). Throws std::invalid_argument unless r >= 2,
  /// d >= 2, n >= 0.
  ProveResult prove(int r, int d, std::int64_t n);
  ProveResult prove_system(const LinearSystem& system);

  const ProverOptions& options() const noexcept { return options_; }

 private:
  using Outcome = std::variant<NodePtr, ProofFailure>;
  struct Context;

  Outcome solve(const LinearSystem& s, Context& ctx);
  Outcome dispatch(const LinearSystem& s, Context& ctx);
  Outcome apply(const LinearSystem& s, Rule rule, Params params, Context& ctx);
  Outcome apply_with_dims(const LinearSystem& s, Rule rule, Params params,
                          const std::vector<std::pair<std::string, std::size_t>>& dims, Context& ctx);
  Outcome prove_nodes(const LinearSystem& s, Context& ctx);
  Outcome prove_lf(const LinearSystem& s, Context& ctx);
  Outcome prove_ah3(int r, Context& ctx);
  Outcome fallback(const LinearSystem& s, const ProofFailure& why, Context& ctx);
  Outcome oracle_leaf(const LinearSystem& s, const std::string& role, Context& ctx);

  ProverOptions options_;
  std::mutex mutex_;
  std::map<std::string, Outcome> memo_;
};

}  // namespace ahc
