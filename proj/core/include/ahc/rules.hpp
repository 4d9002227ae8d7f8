#pragma once

// The rule catalog shared by the prover and the verifier.
//
// instantiate() turns (rule, system, params) into the claims the children must
// prove, the arithmetic side conditions and the value the rule concludes. It is
// a pure function: the verifier recomputes everything from it and never asks
// the prover.

#include "ahc/certificate.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ahc {

/// The rule does not apply to the system with these params.
class RuleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RuleInstance {
  std::vector<Claim> children;
  std::vector<SideCondition> side_conditions;
  /// Concluded dimension. Empty for ORACLE, whose value comes from the rank check.
  std::optional<std::int64_t> value;

  /// First side condition that does not hold, if any.
  const SideCondition* first_failure() const;
};

/// Throws RuleMismatch when the system does not have the shape the rule
/// expects or a required param is missing.
RuleInstance instantiate(Rule rule, const LinearSystem& system, const Params& params);

/// Largest k for which L_{r,d}(d-1, 2^k) is handled by an LF rule directly:
/// h(d) for r = 2, k(r) for d = 4, k0(d) for r = 3, k(r,d) otherwise.
/// Requires r >= 2, d >= 4.
Integer lf_node_bound(int r, int d);

/// The LF rule that handles L_{r,d}(d-1, 2^{lf_node_bound(r,d)}).
Rule lf_rule(int r, int d);

/// Row label used by TABLE leaves: an exception tag, "quadric_empty",
/// "classical" for r = 2 or "non_special".
std::string table_row(int r, int d, std::int64_t n);

/// Named closed form that applies to the system, if any.
std::optional<std::string> closed_form_for(const LinearSystem& system);

/// Seed recorded on an ORACLE leaf: base seed mixed with a hash of the
/// canonical system text, so leaves are reproducible independently.
std::uint64_t oracle_seed(std::uint64_t base_seed, const LinearSystem& system);

/// "3^1,2^4" for {(3,1),(2,4)} and back.
std::string format_batches(const std::vector<PointBatch>& batches);
std::vector<PointBatch> parse_batches(std::string_view text);

/// L_{r,3}(2L, 2^{r+1}) with L of codimension 3, the core of CUBIC_2L.
LinearSystem double_subspace_core(int r);

}  // namespace ahc
