#include "ahc/prover.hpp"

#include "ahc/classify.hpp"
#include "ahc/combinatorics.hpp"
#include "ahc/cubic_systems.hpp"
#include "ahc/rules.hpp"
#include "ahc/syntax.hpp"

#include <algorithm>
#include <set>

namespace ahc {

struct Prover::Context {
  std::vector<std::string> stack;
  bool depth_hit = false;
};

namespace {

ProofFailure fail(const LinearSystem& s, std::string reason, bool budget = false) {
  return ProofFailure{format_system(s), std::move(reason), budget};
}

bool is_failure(const std::variant<NodePtr, ProofFailure>& o) { return std::holds_alternative<ProofFailure>(o); }

std::string side_text(const SideCondition& c) {
  return c.name + " = " + std::to_string(c.value) + " violates '" + c.relation + "'";
}

/// Named subspace systems whose emptiness (or dimension) is an oracle base case.
bool is_designated_oracle_base(const LinearSystem& s) {
  using namespace cubic;
  const int r = s.r();
  if (!s.has_subspaces()) return false;
  if (s.d() == 3) {
    if (r >= 5 && r <= 7 && s == matching(r)) return true;
    if ((r == 3 || r == 5 || r == 7) && s == k1(r)) return true;
    if (r == 6 && s == k2(r)) return true;
    if (r == 3 && s == double_subspace_core(3)) return true;
    if (r == 7 && (s == p7_double_kernel() || s == p7_k2())) return true;
  }
  if (s.d() == 2 && r >= 3) {
    if (s == three_subspace_quadrics(r) || s == double_subspace_quadric(r)) return true;
  }
  return false;
}

}  // namespace

Prover::Prover(ProverOptions options) : options_(std::move(options)) {}

ProveResult Prover::prove(int r, int d, std::int64_t n) {
  if (r < 2 || d < 2 || n < 0) throw std::invalid_argument("prove: requires r >= 2, d >= 2, n >= 0");
  return prove_system(LinearSystem::nodes(r, d, n));
}

ProveResult Prover::prove_system(const LinearSystem& system) {
  Context ctx;
  auto outcome = solve(system, ctx);
  ProveResult result;
  if (auto* node = std::get_if<NodePtr>(&outcome)) {
    result.certificate = Certificate{kCertificateVersion, *node};
  } else {
    result.failure = std::get<ProofFailure>(outcome);
  }
  return result;
}

Prover::Outcome Prover::solve(const LinearSystem& s, Context& ctx) {
  const auto key = format_system(s);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  if (std::find(ctx.stack.begin(), ctx.stack.end(), key) != ctx.stack.end()) {
    throw std::logic_error("prover recursion revisits " + key);
  }
  if (static_cast<int>(ctx.stack.size()) >= options_.max_depth) {
    ctx.depth_hit = true;
    return fail(s, "depth limit " + std::to_string(options_.max_depth) + " reached");
  }
  ctx.stack.push_back(key);
  const bool depth_before = ctx.depth_hit;
  ctx.depth_hit = false;
  auto outcome = dispatch(s, ctx);
  const bool hit = ctx.depth_hit;
  ctx.depth_hit = depth_before || hit;
  ctx.stack.pop_back();
  // A result cut short by the depth limit depends on where the search started.
  // The first finished result wins so that concurrent callers share one node per system.
  if (!hit || !is_failure(outcome)) {
    std::lock_guard lock(mutex_);
    return memo_.emplace(key, std::move(outcome)).first->second;
  }
  return outcome;
}

Prover::Outcome Prover::apply(const LinearSystem& s, Rule rule, Params params, Context& ctx) {
  const auto rule_name = std::string(to_string(rule));
  RuleInstance inst;
  try {
    inst = instantiate(rule, s, params);
  } catch (const RuleMismatch& e) {
    return fail(s, rule_name + " does not apply: " + e.what());
  }
  if (const auto* bad = inst.first_failure()) return fail(s, rule_name + ": " + side_text(*bad));

  std::vector<NodePtr> children;
  for (const auto& expected : inst.children) {
    auto child = solve(expected.system, ctx);
    if (auto* f = std::get_if<ProofFailure>(&child)) {
      ProofFailure wrapped = *f;
      wrapped.reason = rule_name + " premise " + f->system + ": " + f->reason;
      wrapped.system = format_system(s);
      return wrapped;
    }
    const auto& node = std::get<NodePtr>(child);
    if (!(node->claim == expected)) {
      return fail(s, rule_name + " needs " + describe(expected) + " but it was proven that " + describe(node->claim));
    }
    children.push_back(node);
  }
  auto node = std::make_shared<ProofNode>(ProofNode{claim_for(s, *inst.value), rule, std::move(params),
                                                    std::move(inst.side_conditions), std::nullopt,
                                                    std::move(children)});
  return NodePtr(std::move(node));
}

Prover::Outcome Prover::apply_with_dims(const LinearSystem& s, Rule rule, Params params,
                                        const std::vector<std::pair<std::string, std::size_t>>& dims,
                                        Context& ctx) {
  // Probe with placeholder dimensions to learn the child systems, prove them,
  // then instantiate again with the proven values.
  for (const auto& [key, index] : dims) params.set(key, std::int64_t{-1});
  RuleInstance probe;
  try {
    probe = instantiate(rule, s, params);
  } catch (const RuleMismatch& e) {
    return fail(s, std::string(to_string(rule)) + " does not apply: " + e.what());
  }
  for (const auto& [key, index] : dims) {
    auto child = solve(probe.children.at(index).system, ctx);
    if (auto* f = std::get_if<ProofFailure>(&child)) {
      ProofFailure wrapped = *f;
      wrapped.reason = std::string(to_string(rule)) + " premise " + f->system + ": " + f->reason;
      wrapped.system = format_system(s);
      return wrapped;
    }
    params.set(key, std::get<NodePtr>(child)->claim.value);
  }
  return apply(s, rule, std::move(params), ctx);
}

Prover::Outcome Prover::oracle_leaf(const LinearSystem& s, const std::string& role, Context&) {
  if (s.sections() > options_.field.max_columns) {
    return fail(s, "oracle needs " + to_string(s.sections()) + " columns, budget is " +
                       std::to_string(options_.field.max_columns), true);
  }
  FieldConfig cfg = options_.field;
  cfg.seed = oracle_seed(options_.field.seed, s);
  const auto report = dimension(s, cfg);
  const auto value = to_int64(report.dim);
  auto node = std::make_shared<ProofNode>(
      ProofNode{claim_for(s, value), Rule::Oracle, Params{{"role", role}}, {},
                OracleStamp{cfg.prime, cfg.seed, cfg.trials}, {}});
  return NodePtr(std::move(node));
}

Prover::Outcome Prover::fallback(const LinearSystem& s, const ProofFailure& why, Context& ctx) {
  if (!s.has_subspaces() && s.is_nodes_only() && s.r() >= 3 && s.d() >= 3) {
    const auto n = s.count_of(2);
    const auto top = std::min<std::int64_t>(n, to_int64(n_bounds(s.r() - 1, s.d()).n_minus));
    for (std::int64_t h = top; h >= 1 && h > top - 3; --h) {
      auto out = apply_with_dims(s, Rule::Castelnuovo, Params{{"specialize", "2^" + std::to_string(h)}},
                                 {{"kernel_dim", 0}, {"trace_dim", 1}}, ctx);
      if (!is_failure(out)) return out;
    }
  }
  if (!options_.oracle_fallback) return why;
  auto leaf = oracle_leaf(s, "fallback", ctx);
  if (auto* f = std::get_if<ProofFailure>(&leaf)) {
    ProofFailure combined = why;
    combined.reason += "; " + f->reason;
    combined.budget = f->budget;
    return combined;
  }
  return leaf;
}

Prover::Outcome Prover::dispatch(const LinearSystem& s, Context& ctx) {
  using namespace cubic;
  const int r = s.r();
  const int d = s.d();

  if (auto form = closed_form_for(s)) return apply(s, Rule::ClosedForm, Params{{"form", *form}}, ctx);

  const bool nodes_only = !s.has_subspaces() && s.is_nodes_only();
  if (nodes_only && d >= 2) {
    const auto n = s.count_of(2);
    if (r == 2 || d == 2 || classify(r, d, n).is_exception) {
      return apply(s, Rule::Table, Params{{"row", table_row(r, d, n)}}, ctx);
    }
  }

  if (is_designated_oracle_base(s)) {
    auto leaf = oracle_leaf(s, "base", ctx);
    return leaf;
  }

  Outcome outcome = fail(s, "no rule applies");
  bool matched = true;
  if (d == 3 && r >= 5 && s == ah3(r)) {
    outcome = prove_ah3(r, ctx);
  } else if (d == 3 && s.has_subspaces()) {
    const Params pr{{"r", std::int64_t{r}}};
    if (r >= 8 && s == matching(r)) {
      outcome = apply(s, Rule::CubicMatching, pr, ctx);
    } else if ((r == 6 || r >= 8) && s == k1(r)) {
      outcome = apply(s, Rule::CubicK1, pr, ctx);
    } else if (r >= 7 && s == k2(r)) {
      outcome = apply(s, Rule::CubicK2, pr, ctx);
    } else if (r >= 4 && s == double_subspace_core(r)) {
      outcome = apply(s, Rule::Cubic2L, pr, ctx);
    } else if (r == 7 && s == p7_matching()) {
      outcome = apply(s, Rule::CubicBase, Params{{"r", std::int64_t{7}}, {"case", "R7_MATCHING"}}, ctx);
    } else if (r == 7 && s == p7_k1()) {
      outcome = apply(s, Rule::CubicBase, Params{{"r", std::int64_t{7}}, {"case", "R7_K1"}}, ctx);
    } else {
      matched = false;
    }
  } else {
    matched = false;
  }

  if (!matched) {
    if (s.count_of(1) > 0) {
      outcome = apply_with_dims(s, Rule::SimplePoints, Params{{"simple_points", s.count_of(1)}},
                                {{"from_dim", 0}}, ctx);
    } else if (!s.has_subspaces() && s.count_of(d) == 1 && s.points().front().multiplicity == d) {
      outcome = apply_with_dims(s, Rule::Cone, Params{}, {{"reduced_dim", 0}}, ctx);
    } else if (!s.has_subspaces() && d >= 4 && s.count_of(d - 1) == 1 &&
               s.total_points() == s.count_of(2) + 1) {
      outcome = prove_lf(s, ctx);
    } else if (nodes_only) {
      outcome = prove_nodes(s, ctx);
    }
  }
  if (!is_failure(outcome)) return outcome;
  return fallback(s, std::get<ProofFailure>(outcome), ctx);
}

Prover::Outcome Prover::prove_ah3(int r, Context& ctx) {
  const auto s = cubic::ah3(r);
  const Params pr{{"r", std::int64_t{r}}};
  if (r == 5 || r == 6) {
    return apply(s, Rule::CubicBase, Params{{"r", std::int64_t{r}}, {"case", r == 5 ? "R5" : "R6"}}, ctx);
  }
  if (r == 7) return apply(s, Rule::CubicBase, Params{{"r", std::int64_t{7}}, {"case", "R7"}}, ctx);
  return apply(s, Rule::CubicStep, pr, ctx);
}

Prover::Outcome Prover::prove_lf(const LinearSystem& s, Context& ctx) {
  const int r = s.r();
  const int d = s.d();
  const auto k = s.count_of(2);
  const auto bound = to_int64(lf_node_bound(r, d));
  if (k < bound) {
    const auto from = LinearSystem(r, d, {{d - 1, 1}, {2, bound}});
    return apply(s, Rule::MonotoneDown, Params{{"from", format_system(from)}}, ctx);
  }
  if (k > bound) {
    return fail(s, "LF: " + std::to_string(k) + " nodes exceed the bound " + std::to_string(bound));
  }
  return apply_with_dims(s, lf_rule(r, d), Params{}, {{"kernel_dim", 0}, {"trace_dim", 1}}, ctx);
}

Prover::Outcome Prover::prove_nodes(const LinearSystem& s, Context& ctx) {
  const int r = s.r();
  const int d = s.d();
  const auto n = s.count_of(2);
  const auto bounds = n_bounds(r, d);
  auto lo = to_int64(bounds.n_minus);
  auto hi = to_int64(bounds.n_plus);
  // Where an exception sits at the top of the range, prove the anchor just below it.
  if (r == 4 && d == 4) lo = 13;
  if (r == 4 && d == 3) lo = 6;

  if (n < lo) {
    return apply(s, Rule::MonotoneDown, Params{{"from", format_system(LinearSystem::nodes(r, d, lo))}}, ctx);
  }
  if (n > hi) {
    return apply_with_dims(s, Rule::EmptyUp, Params{{"from", format_system(LinearSystem::nodes(r, d, hi))}},
                           {{"from_dim", 0}}, ctx);
  }

  if (d == 3) {
    if (r == 3) return apply(s, Rule::CubicBase, Params{{"r", std::int64_t{3}}, {"case", "P3"}}, ctx);
    if (r >= 5 && n == lo) {
      if (gamma_r(r) == 0) return prove_ah3(r, ctx);
      return apply(s, Rule::MonotoneDown, Params{{"from", format_system(cubic::ah3(r))}}, ctx);
    }
    return fail(s, "no cubic rule for n = " + std::to_string(n));
  }
  if (d == 4) {
    if (r == 3) return apply_with_dims(s, Rule::QuarticR3, Params{{"b", std::int64_t{4}}}, {{"hat_F_dim", 0}}, ctx);
    if (r == 4) return apply_with_dims(s, Rule::QuarticR4, Params{{"b", std::int64_t{8}}}, {{"hat_F_dim", 0}}, ctx);
    return apply(s, Rule::QuarticGen, Params{{"b", n - r - 1}}, ctx);
  }
  const auto dec = b0_decompose(r, d);
  if (dec.beta == 0) {
    return apply(s, Rule::Deg1, Params{{"b", to_int64(dec.b0_floor)}, {"beta", std::int64_t{0}}}, ctx);
  }
  return apply(s, Rule::Deg2, Params{{"b", to_int64(second_b(r, d))}, {"beta", to_int64(dec.beta)}}, ctx);
}

}  // namespace ahc
