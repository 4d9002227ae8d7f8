#include "ahc/certificate.hpp"

#include "ahc/syntax.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace ahc {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Rule, std::string_view>, 23> kRuleNames{{
    {Rule::Table, "TABLE"},
    {Rule::ClosedForm, "CLOSED_FORM"},
    {Rule::Oracle, "ORACLE"},
    {Rule::MonotoneDown, "MONOTONE_DOWN"},
    {Rule::EmptyUp, "EMPTY_UP"},
    {Rule::SimplePoints, "SIMPLE_POINTS"},
    {Rule::Castelnuovo, "CASTELNUOVO"},
    {Rule::Cone, "CONE"},
    {Rule::LfQuartic, "LF_QUARTIC"},
    {Rule::LfP2, "LF_P2"},
    {Rule::LfP3, "LF_P3"},
    {Rule::LfGeneral, "LF_GENERAL"},
    {Rule::Deg1, "DEG1"},
    {Rule::Deg2, "DEG2"},
    {Rule::QuarticR3, "QUARTIC_R3"},
    {Rule::QuarticR4, "QUARTIC_R4"},
    {Rule::QuarticGen, "QUARTIC_GEN"},
    {Rule::CubicBase, "CUBIC_BASE"},
    {Rule::CubicStep, "CUBIC_STEP"},
    {Rule::CubicMatching, "CUBIC_MATCHING"},
    {Rule::CubicK1, "CUBIC_K1"},
    {Rule::CubicK2, "CUBIC_K2"},
    {Rule::Cubic2L, "CUBIC_2L"},
}};

[[noreturn]] void format_error(const std::string& what) { throw CertificateFormatError(what); }

Json params_to_json(const Params& params) {
  Json j = Json::object();
  for (const auto& [key, value] : params.entries()) {
    if (std::holds_alternative<std::int64_t>(value)) {
      j[key] = std::get<std::int64_t>(value);
    } else {
      j[key] = std::get<std::string>(value);
    }
  }
  return j;
}

Json node_to_json(const NodePtr& node, std::set<std::string>& emitted) {
  auto system = format_system(node->claim.system);
  if (!emitted.insert(system).second) return Json{{"ref", std::move(system)}};
  Json j;
  j["claim"] = {{"system", std::move(system)},
                {"assert", std::string(to_string(node->claim.assertion))},
                {"value", node->claim.value}};
  j["rule"] = std::string(to_string(node->rule));
  j["params"] = params_to_json(node->params);
  Json sides = Json::array();
  for (const auto& s : node->side_conditions) {
    sides.push_back({{"name", s.name}, {"value", s.value}, {"relation", s.relation}});
  }
  j["side_conditions"] = std::move(sides);
  if (node->oracle) {
    j["oracle"] = {{"prime", node->oracle->prime}, {"seed", node->oracle->seed}, {"trials", node->oracle->trials}};
  }
  Json children = Json::array();
  for (const auto& c : node->children) children.push_back(node_to_json(c, emitted));
  j["children"] = std::move(children);
  return j;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) format_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    format_error(std::string("field '") + key + "' has the wrong type");
  }
}

class NodeReader {
 public:
  NodePtr read(const Json& j) {
    if (j.is_object() && j.contains("ref")) {
      const auto key = field<std::string>(j, "ref");
      auto it = seen_.find(key);
      if (it == seen_.end()) format_error("dangling ref to " + key);
      return it->second;
    }
    const Json& claim = j.contains("claim") ? j.at("claim") : Json();
    const auto system_text = field<std::string>(claim, "system");
    std::optional<LinearSystem> system;
    try {
      system = parse_system(system_text);
    } catch (const ParseError& e) {
      format_error(std::string("bad system in certificate: ") + e.what());
    }
    const auto assertion = assertion_from_string(field<std::string>(claim, "assert"));
    if (!assertion) format_error("unknown assertion in claim of " + system_text);
    auto node = std::make_shared<ProofNode>(
        ProofNode{Claim{std::move(*system), *assertion, field<std::int64_t>(claim, "value")}, Rule::Oracle, {}, {}, {}, {}});

    const auto rule = rule_from_string(field<std::string>(j, "rule"));
    if (!rule) format_error("unknown rule at " + system_text);
    node->rule = *rule;

    if (j.contains("params")) {
      const Json& params = j.at("params");
      if (!params.is_object()) format_error("params must be an object");
      for (const auto& [key, value] : params.items()) {
        if (value.is_number_integer()) {
          node->params.set(key, value.get<std::int64_t>());
        } else if (value.is_string()) {
          node->params.set(key, value.get<std::string>());
        } else {
          format_error("param '" + key + "' must be an integer or a string");
        }
      }
    }
    if (j.contains("side_conditions")) {
      for (const auto& s : j.at("side_conditions")) {
        node->side_conditions.push_back(
            {field<std::string>(s, "name"), field<std::int64_t>(s, "value"), field<std::string>(s, "relation")});
      }
    }
    if (j.contains("oracle")) {
      const Json& o = j.at("oracle");
      node->oracle = OracleStamp{field<std::uint64_t>(o, "prime"), field<std::uint64_t>(o, "seed"),
                                 field<int>(o, "trials")};
    }
    // Register before reading children so that a child cannot refer back to its ancestor.
    const auto key = format_system(node->claim.system);
    if (j.contains("children")) {
      for (const auto& c : j.at("children")) node->children.push_back(read(c));
    }
    if (!seen_.emplace(key, node).second) format_error("system appears twice in full: " + key);
    return node;
  }

 private:
  std::unordered_map<std::string, NodePtr> seen_;
};

}  // namespace

std::string_view to_string(Assertion a) {
  switch (a) {
    case Assertion::Dim: return "dim";
    case Assertion::NonSpecial: return "non-special";
    case Assertion::Empty: return "empty";
  }
  return "dim";
}

std::optional<Assertion> assertion_from_string(std::string_view name) {
  for (auto a : {Assertion::Dim, Assertion::NonSpecial, Assertion::Empty}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

Claim claim_for(const LinearSystem& system, std::int64_t dim) {
  const Integer e = system.expected_dim();
  Assertion a = Assertion::Dim;
  if (e == dim) a = dim == -1 ? Assertion::Empty : Assertion::NonSpecial;
  return Claim{system, a, dim};
}

std::string describe(const Claim& claim) {
  const auto sys = format_system(claim.system);
  switch (claim.assertion) {
    case Assertion::Empty: return sys + " is empty";
    case Assertion::NonSpecial: return sys + " is non-special of dimension " + std::to_string(claim.value);
    case Assertion::Dim: return sys + " has dimension " + std::to_string(claim.value);
  }
  return sys;
}

std::string_view to_string(Rule rule) {
  for (const auto& [r, name] : kRuleNames) {
    if (r == rule) return name;
  }
  return "UNKNOWN";
}

std::optional<Rule> rule_from_string(std::string_view name) {
  for (const auto& [r, n] : kRuleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

bool is_leaf_rule(Rule rule) {
  return rule == Rule::Table || rule == Rule::ClosedForm || rule == Rule::Oracle;
}

bool SideCondition::holds() const {
  std::string_view rel = relation;
  static constexpr std::array<std::string_view, 6> ops{"==", "!=", "<=", ">=", "<", ">"};
  for (auto op : ops) {
    if (rel.substr(0, op.size()) != op) continue;
    auto rest = rel.substr(op.size());
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    std::int64_t rhs = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rhs);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) break;
    if (op == "==") return value == rhs;
    if (op == "!=") return value != rhs;
    if (op == "<=") return value <= rhs;
    if (op == ">=") return value >= rhs;
    if (op == "<") return value < rhs;
    return value > rhs;
  }
  throw std::invalid_argument("unparsable relation '" + relation + "'");
}

std::string relation(std::string_view op, const Integer& rhs) {
  return std::string(op) + " " + to_string(rhs);
}

SideCondition side(std::string name, const Integer& value, std::string_view op, const Integer& rhs) {
  return SideCondition{std::move(name), to_int64(value), relation(op, Integer(to_int64(rhs)))};
}

Params::Params(std::initializer_list<std::pair<std::string, ParamValue>> entries) : entries_(entries) {}

Params& Params::set(std::string key, ParamValue value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

bool Params::contains(std::string_view key) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == key; });
}

std::int64_t Params::integer(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) {
      if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
      throw std::invalid_argument("param '" + std::string(key) + "' is not an integer");
    }
  }
  throw std::invalid_argument("missing param '" + std::string(key) + "'");
}

const std::string& Params::text(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) {
      if (const auto* s = std::get_if<std::string>(&v)) return *s;
      throw std::invalid_argument("param '" + std::string(key) + "' is not a string");
    }
  }
  throw std::invalid_argument("missing param '" + std::string(key) + "'");
}

std::string to_json(const Certificate& certificate, int indent) {
  std::set<std::string> emitted;
  Json j;
  j["version"] = certificate.version;
  Json root = node_to_json(certificate.root, emitted);
  for (auto it = root.begin(); it != root.end(); ++it) j[it.key()] = it.value();
  return j.dump(indent) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) format_error("certificate must be a JSON object");
  Certificate cert;
  cert.version = field<int>(j, "version");
  if (cert.version != kCertificateVersion) {
    format_error("unsupported certificate version " + std::to_string(cert.version));
  }
  NodeReader reader;
  cert.root = reader.read(j);
  return cert;
}

CertificateStats stats(const Certificate& certificate) {
  CertificateStats out;
  std::map<std::string, std::size_t> depth;
  std::function<std::size_t(const NodePtr&)> visit = [&](const NodePtr& n) -> std::size_t {
    auto key = format_system(n->claim.system);
    if (auto it = depth.find(key); it != depth.end()) return it->second;
    ++out.nodes;
    if (n->rule == Rule::Oracle) ++out.oracle_leaves;
    std::size_t d = 0;
    for (const auto& c : n->children) d = std::max(d, visit(c));
    return depth[key] = d + 1;
  };
  if (certificate.root) out.depth = visit(certificate.root);
  return out;
}

}  // namespace ahc
