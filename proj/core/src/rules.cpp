#include "ahc/rules.hpp"

#include "ahc/classify.hpp"
#include "ahc/combinatorics.hpp"
#include "ahc/cubic_systems.hpp"
#include "ahc/oracle.hpp"
#include "ahc/syntax.hpp"
#include "ahc/transforms.hpp"

#include <algorithm>
#include <charconv>

namespace ahc {
namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw RuleMismatch(what);
}

std::int64_t i64(const Integer& v) { return to_int64(v); }

std::int64_t e_of(const LinearSystem& s) { return i64(s.expected_dim()); }

Integer v_of(const LinearSystem& s) { return s.virtual_dim(); }

Claim empty_claim(const LinearSystem& s) { return claim_for(s, -1); }

Claim expected_claim(const LinearSystem& s) { return claim_for(s, e_of(s)); }

std::int64_t param_int(const Params& p, std::string_view key) {
  try {
    return p.integer(key);
  } catch (const std::invalid_argument& e) {
    throw RuleMismatch(e.what());
  }
}

const std::string& param_text(const Params& p, std::string_view key) {
  try {
    return p.text(key);
  } catch (const std::invalid_argument& e) {
    throw RuleMismatch(e.what());
  }
}

LinearSystem param_system(const Params& p, std::string_view key) {
  try {
    return parse_system(param_text(p, key));
  } catch (const ParseError& e) {
    throw RuleMismatch(std::string("param '") + std::string(key) + "': " + e.what());
  }
}

/// n for L_{r,d}(2^n); mismatch otherwise.
std::int64_t require_nodes(const LinearSystem& s) {
  ensure(!s.has_subspaces() && s.is_nodes_only(), "system is not a general double-point system");
  return s.count_of(2);
}

/// True when `small` has every general point of `big` except possibly some,
/// with the same subspaces. Returns the number of points `big` has in excess.
std::optional<std::int64_t> excess_points(const LinearSystem& big, const LinearSystem& small) {
  if (big.r() != small.r() || big.d() != small.d() || big.subspaces() != small.subspaces()) {
    return std::nullopt;
  }
  for (const auto& batch : small.points()) {
    if (big.count_of(batch.multiplicity) < batch.count) return std::nullopt;
  }
  return big.total_points() - small.total_points();
}

Integer point_multiplicity_sum(const LinearSystem& s) {
  Integer total = 0;
  for (const auto& b : s.points()) total += Integer(b.multiplicity) * b.count;
  return total;
}

std::int64_t closed_form_value(const std::string& form, const LinearSystem& s) {
  if (form == "full_multiplicity") return -1;
  if (form == "complete") return i64(s.sections() - 1);
  if (form == "line") {
    return i64(std::max(Integer(s.d() + 1) - point_multiplicity_sum(s), Integer(0)) - 1);
  }
  if (form == "linear") return std::max<std::int64_t>(s.r() - s.count_of(1), -1);
  if (form == "single_point") {
    return i64(s.sections() - 1 - point_conditions(s.r(), s.points().front().multiplicity));
  }
  throw RuleMismatch("unknown closed form '" + form + "'");
}

// ---- leaves ----

RuleInstance table(const LinearSystem& s, const Params& p) {
  const auto n = require_nodes(s);
  ensure(s.d() >= 2, "TABLE needs d >= 2");
  const auto verdict = classify(s.r(), s.d(), n);
  ensure(s.r() == 2 || s.d() == 2 || verdict.is_exception, "system is not covered by the table");
  const auto row = table_row(s.r(), s.d(), n);
  ensure(param_text(p, "row") == row, "TABLE row should be '" + row + "'");
  RuleInstance out;
  out.value = verdict.is_exception ? i64(*verdict.closed_form_dim) : e_of(s);
  return out;
}

RuleInstance closed_form(const LinearSystem& s, const Params& p) {
  const auto form = closed_form_for(s);
  ensure(form.has_value(), "no closed form applies");
  ensure(param_text(p, "form") == *form, "closed form should be '" + *form + "'");
  RuleInstance out;
  out.value = closed_form_value(*form, s);
  return out;
}

// ---- structural rules ----

RuleInstance monotone_down(const LinearSystem& s, const Params& p) {
  const auto from = param_system(p, "from");
  const auto removed = excess_points(from, s);
  ensure(removed.has_value(), "'from' is not obtained by adding general points");
  RuleInstance out;
  out.children.push_back(expected_claim(from));
  out.side_conditions.push_back(side("removed_points", *removed, ">=", 1));
  out.side_conditions.push_back(side("v_from", v_of(from), ">=", -1));
  out.value = e_of(s);
  return out;
}

RuleInstance empty_up(const LinearSystem& s, const Params& p) {
  const auto from = param_system(p, "from");
  const auto added = excess_points(s, from);
  ensure(added.has_value(), "'from' is not obtained by removing general points");
  const auto k = param_int(p, "from_dim");
  ensure(k >= -1, "from_dim must be >= -1");
  RuleInstance out;
  out.children.push_back(claim_for(from, k));
  out.side_conditions.push_back(side("added_points", *added, ">", std::max<std::int64_t>(k, 0)));
  out.value = -1;
  return out;
}

RuleInstance simple_points(const LinearSystem& s, const Params& p) {
  const auto count = s.count_of(1);
  ensure(count >= 1, "no simple points");
  ensure(param_int(p, "simple_points") == count, "simple_points does not match the system");
  const auto k = param_int(p, "from_dim");
  ensure(k >= -1, "from_dim must be >= -1");
  RuleInstance out;
  out.children.push_back(claim_for(s.without_points(1, count), k));
  out.side_conditions.push_back(side("simple_points", count, ">=", 1));
  out.value = std::max<std::int64_t>(k - count, -1);
  return out;
}

RuleInstance split_rule(const LinearSystem& s, const std::vector<PointBatch>& specialize, const Params& p) {
  RestrictionSplit split = [&] {
    try {
      return castelnuovo_split(s, specialize);
    } catch (const std::invalid_argument& e) {
      throw RuleMismatch(e.what());
    }
  }();
  const auto kd = param_int(p, "kernel_dim");
  const auto td = param_int(p, "trace_dim");
  ensure(kd >= -1 && td >= -1, "kernel_dim and trace_dim must be >= -1");
  RuleInstance out;
  out.children.push_back(claim_for(split.kernel, kd));
  out.children.push_back(claim_for(split.trace, td));
  out.side_conditions.push_back(side("split_dim", Integer(kd) + td + 1, "==", s.expected_dim()));
  out.value = e_of(s);
  return out;
}

RuleInstance castelnuovo(const LinearSystem& s, const Params& p) {
  std::vector<PointBatch> specialize;
  try {
    specialize = parse_batches(param_text(p, "specialize"));
  } catch (const std::invalid_argument& e) {
    throw RuleMismatch(e.what());
  }
  return split_rule(s, specialize, p);
}

RuleInstance cone(const LinearSystem& s, const Params& p) {
  LinearSystem reduced = [&] {
    try {
      return cone_reduce(s);
    } catch (const std::invalid_argument& e) {
      throw RuleMismatch(e.what());
    }
  }();
  const auto k = param_int(p, "reduced_dim");
  ensure(k >= -1, "reduced_dim must be >= -1");
  RuleInstance out;
  out.children.push_back(claim_for(reduced, k));
  out.side_conditions.push_back(side("vertex_multiplicity", s.points().front().multiplicity, "==", s.d()));
  out.value = k;
  return out;
}

// ---- L_F rules: L_{r,d}(d-1, 2^k) ----

RuleInstance lf(Rule rule, const LinearSystem& s, const Params& p) {
  const int r = s.r();
  const int d = s.d();
  ensure(!s.has_subspaces() && d >= 4, "LF rules need L_{r,d}(d-1, 2^k) with d >= 4");
  const auto k = s.count_of(2);
  ensure(s.count_of(d - 1) == 1 && k >= 1 && s.total_points() == k + 1,
         "system is not L_{r,d}(d-1, 2^k)");
  Integer specialized;
  switch (rule) {
    case Rule::LfP2:
      ensure(r == 2, "LF_P2 needs r = 2");
      specialized = 1;
      break;
    case Rule::LfP3:
      ensure(r == 3 && d >= 5, "LF_P3 needs r = 3, d >= 5");
      specialized = h(d);
      break;
    case Rule::LfQuartic:
      ensure(r >= 3 && d == 4, "LF_QUARTIC needs r >= 3, d = 4");
      specialized = quartic_lf_bound(r - 1);
      break;
    default:
      ensure(r >= 4 && d >= 5, "LF_GENERAL needs r >= 4, d >= 5");
      specialized = lf_node_bound(r - 1, d);
      break;
  }
  const auto j = i64(specialized);
  ensure(j >= 1 && j <= k, "cannot specialize " + std::to_string(j) + " of " + std::to_string(k) + " nodes");
  auto out = split_rule(s, {{d - 1, 1}, {2, j}}, p);
  std::vector<SideCondition> sides;
  sides.push_back(side("nodes", k, "<=", lf_node_bound(r, d)));
  if (d - 1 >= 4) sides.push_back(side("kernel_nodes", k - j, "<=", lf_node_bound(r, d - 1)));
  sides.insert(sides.end(), out.side_conditions.begin(), out.side_conditions.end());
  out.side_conditions = std::move(sides);
  return out;
}

// ---- degenerations of L_{r,d}(2^n) ----

struct NodeTarget {
  int r;
  int d;
  std::int64_t n;
  std::int64_t b;
};

NodeTarget node_target(const LinearSystem& s, const Params& p) {
  const auto n = require_nodes(s);
  const auto b = param_int(p, "b");
  ensure(b >= 0 && b <= n, "b must lie in [0, n]");
  return {s.r(), s.d(), n, b};
}

RuleInstance deg1(const LinearSystem& s, const Params& p) {
  const auto t = node_target(s, p);
  ensure(t.r >= 3 && t.d >= 5, "DEG1 needs r >= 3, d >= 5");
  const auto dec = b0_decompose(t.r, t.d);
  ensure(param_int(p, "beta") == i64(dec.beta), "beta does not match C(r+d-1, r-1) mod r");
  const auto c = deg1_components(t.r, t.d, t.n, t.b);
  const auto cone_base = LinearSystem::nodes(t.r - 1, t.d, t.b);

  const Integer e = s.expected_dim();
  const Integer l_p = c.exceptional.expected_dim();
  const Integer ambient = c.restricted_sections - 1;
  const Integer dim_r = transversal_intersection_dim(l_p, ambient - t.b, ambient);
  const Integer l0 = limit_dim(dim_r, -1, -1);

  RuleInstance out;
  out.children = {empty_claim(c.blowup_kernel), expected_claim(c.exceptional),
                  empty_claim(c.exceptional_kernel), expected_claim(c.blowup)};
  out.side_conditions = {
      side("beta", dec.beta, "==", 0),
      side("b", t.b, "==", dec.b0_floor),
      side("v_P", v_of(c.exceptional), ">", -1),
      side("v_hat_P", v_of(c.exceptional_kernel), "<=", -1),
      side("v_cone_base", v_of(cone_base), "==", -1),
      side("b_lf_bound", t.b, "<=", lf_node_bound(t.r, t.d)),
      side("limit_dim", l0, "==", e),
  };
  out.value = i64(e);
  return out;
}

RuleInstance deg2(const LinearSystem& s, const Params& p) {
  const auto t = node_target(s, p);
  ensure(t.r >= 3 && t.d >= 5, "DEG2 needs r >= 3, d >= 5");
  const auto dec = b0_decompose(t.r, t.d);
  const auto beta = param_int(p, "beta");
  ensure(beta == i64(dec.beta), "beta does not match C(r+d-1, r-1) mod r");
  ensure(beta >= 1 && beta < t.r && beta <= t.b, "beta must lie in [1, min(b, r-1)]");
  const auto c = deg2_components(t.r, t.d, t.n, t.b, beta);

  const Integer e = s.expected_dim();
  const Integer v_hat = v_of(c.exceptional_kernel);
  const Integer matching =
      std::max(Integer(-1), v_of(c.exceptional) - Integer(t.r) * beta - (t.b - beta));
  const Integer l0 = limit_dim(matching, -1, -1);

  RuleInstance out;
  out.children = {empty_claim(c.blowup_kernel), expected_claim(c.exceptional_with_nodes),
                  empty_claim(c.exceptional_kernel), expected_claim(c.blowup)};
  out.side_conditions = {
      side("beta", beta, ">=", 1),
      side("beta_below_r", beta, "<=", t.r - 1),
      side("b", t.b, "==", second_b(t.r, t.d)),
      side("b_lf_bound", t.b, "<=", lf_node_bound(t.r, t.d)),
      side("v_hat_P", v_hat, "<=", -1),
      side("h1_hat_P", -v_hat - 1, ">=", 1),
      side("v_bar_P", v_of(c.exceptional_with_nodes), ">=", -1),
      side("matching_dim", matching, "==", e),
      side("limit_dim", l0, "==", e),
  };
  out.value = i64(e);
  return out;
}

RuleInstance quartic_small(Rule rule, const LinearSystem& s, const Params& p) {
  const auto t = node_target(s, p);
  const bool r3 = rule == Rule::QuarticR3;
  ensure(t.d == 4 && t.r == (r3 ? 3 : 4), r3 ? "QUARTIC_R3 needs r = 3, d = 4" : "QUARTIC_R4 needs r = 4, d = 4");
  ensure(t.n == (r3 ? 8 : 13), "unexpected node count for this quartic degeneration");
  const auto hat_f_dim = param_int(p, "hat_F_dim");
  ensure(hat_f_dim >= -1, "hat_F_dim must be >= -1");
  const auto c = deg1_components(t.r, 4, t.n, t.b);

  const Integer e = s.expected_dim();
  const Integer dim_r = std::max(c.exceptional.expected_dim() - t.b, Integer(-1));
  const Integer l0 = limit_dim(dim_r, -1, hat_f_dim);

  RuleInstance out;
  out.children = {claim_for(c.blowup_kernel, hat_f_dim), expected_claim(c.exceptional),
                  empty_claim(c.exceptional_kernel), expected_claim(c.blowup)};
  out.side_conditions = {
      side("b", t.b, "==", r3 ? 4 : 8),
      side("b_lf_bound", t.b, "<=", quartic_lf_bound(t.r)),
      side("v_hat_P", v_of(c.exceptional_kernel), "<=", -1),
      side("limit_dim", l0, "==", e),
  };
  out.value = i64(e);
  return out;
}

RuleInstance quartic_gen(const LinearSystem& s, const Params& p) {
  const auto t = node_target(s, p);
  ensure(t.d == 4 && t.r >= 5, "QUARTIC_GEN needs r >= 5, d = 4");
  const auto bounds = n_bounds(t.r, 4);
  const auto c = deg1_components(t.r, 4, t.n, t.b);

  const Integer e = s.expected_dim();
  const Integer dim_r = std::max(c.blowup.expected_dim() - binom(t.r + 1, 2), Integer(-1));
  const Integer l0 = limit_dim(dim_r, -1, -1);

  RuleInstance out;
  out.children = {empty_claim(c.blowup_kernel), expected_claim(c.blowup),
                  expected_claim(c.exceptional), empty_claim(c.exceptional_kernel)};
  out.side_conditions = {
      side("n_lower", t.n, ">=", bounds.n_minus),
      side("n_upper", t.n, "<=", bounds.n_plus),
      side("b", t.b, "==", t.n - t.r - 1),
      side("b_lf_bound", t.b, "<=", quartic_lf_bound(t.r)),
      side("v_P", v_of(c.exceptional), ">=", -1),
      side("v_hat_P", v_of(c.exceptional_kernel), "<=", -1),
      side("dim_R", dim_r, "==", e),
      side("limit_dim", l0, "==", e),
  };
  out.value = i64(e);
  return out;
}

// ---- cubics: every claim is emptiness ----

int cubic_r(const LinearSystem& s, const Params& p) {
  const auto r = param_int(p, "r");
  ensure(r == s.r(), "param r does not match the system");
  return s.r();
}

RuleInstance cubic_rule(const LinearSystem& expected_parent, const LinearSystem& s,
                   const std::vector<LinearSystem>& children, std::vector<SideCondition> sides) {
  ensure(s == expected_parent, "system should be " + format_system(expected_parent));
  RuleInstance out;
  for (const auto& c : children) out.children.push_back(empty_claim(c));
  out.side_conditions = std::move(sides);
  out.value = -1;
  return out;
}

RuleInstance cubic_base(const LinearSystem& s, const Params& p) {
  const int r = cubic_r(s, p);
  const auto& which = param_text(p, "case");
  using namespace cubic;
  if (which == "P3") {
    ensure(r == 3, "case P3 needs r = 3");
    // A cubic singular at two nodes contains their line, which meets the plane once.
    return cubic_rule(LinearSystem::nodes(3, 3, 5), s,
                 {LinearSystem(3, 2, {{2, 2}, {1, 3}}), LinearSystem(2, 3, {{2, 3}, {1, 1}})}, {});
  }
  if (which == "R5" || which == "R6") {
    ensure(r == (which == "R5" ? 5 : 6), "case " + which + " has the wrong r");
    return cubic_rule(ah3(r), s, {ah3(r - 3), double_subspace(r), matching(r)}, {});
  }
  if (which == "R7") {
    ensure(r == 7, "case R7 needs r = 7");
    return cubic_rule(ah3(7), s, {LinearSystem::nodes(3, 3, 5), p7_double_kernel(), p7_matching()}, {});
  }
  if (which == "R7_MATCHING") {
    ensure(r == 7, "case R7_MATCHING needs r = 7");
    return cubic_rule(p7_matching(), s, {p7_k1(), LinearSystem::nodes(3, 3, 5)}, {});
  }
  if (which == "R7_K1") {
    ensure(r == 7, "case R7_K1 needs r = 7");
    return cubic_rule(p7_k1(), s, {p7_k2(), LinearSystem::nodes(3, 3, 5)}, {});
  }
  throw RuleMismatch("unknown CUBIC_BASE case '" + which + "'");
}

}  // namespace

const SideCondition* RuleInstance::first_failure() const {
  for (const auto& s : side_conditions) {
    if (!s.holds()) return &s;
  }
  return nullptr;
}

Integer lf_node_bound(int r, int d) {
  if (r < 2 || d < 4) throw std::invalid_argument("lf_node_bound: requires r >= 2, d >= 4");
  if (r == 2) return h(d);
  if (d == 4) return quartic_lf_bound(r);
  if (r == 3) return k0(d);
  return lf_bound(r, d);
}

Rule lf_rule(int r, int d) {
  if (r == 2) return Rule::LfP2;
  if (d == 4) return Rule::LfQuartic;
  if (r == 3) return Rule::LfP3;
  return Rule::LfGeneral;
}

std::string table_row(int r, int d, std::int64_t n) {
  const auto v = classify(r, d, n);
  if (v.is_exception) return std::string(to_string(*v.exception_tag));
  if (v.quadric_empty) return "quadric_empty";
  if (r == 2) return "classical";
  return "non_special";
}

std::optional<std::string> closed_form_for(const LinearSystem& s) {
  const int d = s.d();
  for (const auto& b : s.points()) {
    if (b.multiplicity > d) return "full_multiplicity";
  }
  for (const auto& g : s.subspaces()) {
    if (g.multiplicity > d) return "full_multiplicity";
    for (const auto& b : g.points) {
      if (b.multiplicity > d) return "full_multiplicity";
    }
  }
  if (s.has_subspaces()) return std::nullopt;
  if (s.points().empty()) return "complete";
  if (s.r() == 1) return "line";
  if (d == 1 && s.count_of(1) == s.total_points()) return "linear";
  if (s.total_points() == 1) return "single_point";
  return std::nullopt;
}

std::uint64_t oracle_seed(std::uint64_t base_seed, const LinearSystem& system) {
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : format_system(system)) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return trial_seed(base_seed ^ hash, 0);
}

std::string format_batches(const std::vector<PointBatch>& batches) {
  std::string out;
  for (const auto& b : batches) {
    if (!out.empty()) out += ',';
    out += std::to_string(b.multiplicity) + '^' + std::to_string(b.count);
  }
  return out;
}

std::vector<PointBatch> parse_batches(std::string_view text) {
  std::vector<PointBatch> out;
  auto number = [&](std::string_view part, auto& value) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("bad point batch list '" + std::string(text) + "'");
    }
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto caret = item.find('^');
    if (caret == std::string_view::npos) throw std::invalid_argument("bad point batch '" + std::string(item) + "'");
    PointBatch b;
    number(item.substr(0, caret), b.multiplicity);
    number(item.substr(caret + 1), b.count);
    if (b.multiplicity < 1 || b.count < 1) throw std::invalid_argument("point batch must be positive");
    out.push_back(b);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
  }
  return out;
}

LinearSystem double_subspace_core(int r) { return cubic::double_subspace_trace(r + 1); }

RuleInstance instantiate(Rule rule, const LinearSystem& s, const Params& p) {
  using namespace cubic;
  switch (rule) {
    case Rule::Table: return table(s, p);
    case Rule::ClosedForm: return closed_form(s, p);
    case Rule::Oracle: return RuleInstance{};
    case Rule::MonotoneDown: return monotone_down(s, p);
    case Rule::EmptyUp: return empty_up(s, p);
    case Rule::SimplePoints: return simple_points(s, p);
    case Rule::Castelnuovo: return castelnuovo(s, p);
    case Rule::Cone: return cone(s, p);
    case Rule::LfQuartic:
    case Rule::LfP2:
    case Rule::LfP3:
    case Rule::LfGeneral: return lf(rule, s, p);
    case Rule::Deg1: return deg1(s, p);
    case Rule::Deg2: return deg2(s, p);
    case Rule::QuarticR3:
    case Rule::QuarticR4: return quartic_small(rule, s, p);
    case Rule::QuarticGen: return quartic_gen(s, p);
    case Rule::CubicBase: return cubic_base(s, p);
    case Rule::CubicStep: {
      const int r = cubic_r(s, p);
      ensure(r >= 8, "CUBIC_STEP needs r >= 8");
      return cubic_rule(ah3(r), s, {ah3(r - 3), double_subspace(r), matching(r)}, {side("r", r, ">=", 8)});
    }
    case Rule::CubicMatching: {
      const int r = cubic_r(s, p);
      ensure(r >= 8, "CUBIC_MATCHING needs r >= 8");
      return cubic_rule(matching(r), s, {k1(r), matching(r - 3)}, {side("r", r, ">=", 8)});
    }
    case Rule::CubicK1: {
      const int r = cubic_r(s, p);
      ensure(r == 6 || r >= 8, "CUBIC_K1 needs r = 6 or r >= 8");
      return cubic_rule(k1(r), s, {k2(r), k1(r - 3)}, {side("r_minus_3", r - 3, "!=", 4)});
    }
    case Rule::CubicK2: {
      const int r = cubic_r(s, p);
      ensure(r >= 7, "CUBIC_K2 needs r >= 7");
      return cubic_rule(k2(r), s, {three_subspace_quadrics(r), k2(r - 1)}, {side("r", r, ">=", 7)});
    }
    case Rule::Cubic2L: {
      const int r = cubic_r(s, p);
      ensure(r >= 4, "CUBIC_2L needs r >= 4");
      return cubic_rule(double_subspace_core(r), s,
                   {double_subspace_quadric_kernel(r), double_subspace_core(r - 1)}, {side("r", r, ">=", 4)});
    }
  }
  throw RuleMismatch("unknown rule");
}

}  // namespace ahc
