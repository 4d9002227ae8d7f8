#pragma once

// Proof trees for dimension claims and their JSON form.
//
// A certificate is a DAG of ProofNodes. In JSON every node appears in full the
// first time it is reached in depth-first order; later occurrences are written
// as {"ref": "<system>"} and resolve to that earlier node.

#include "ahc/linear_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ahc {

inline constexpr int kCertificateVersion = 1;

enum class Assertion { Dim, NonSpecial, Empty };

std::string_view to_string(Assertion a);
std::optional<Assertion> assertion_from_string(std::string_view name);

/// "dim(system) = value", phrased as non-special / empty when value is the
/// expected dimension.
struct Claim {
  LinearSystem system;
  Assertion assertion = Assertion::Dim;
  std::int64_t value = -1;

  friend bool operator==(const Claim&, const Claim&) = default;
};

/// The normalized claim dim(system) = dim: Empty when dim = e = -1,
/// NonSpecial when dim = e >= 0, Dim otherwise.
Claim claim_for(const LinearSystem& system, std::int64_t dim);

std::string describe(const Claim& claim);

enum class Rule {
  Table,
  ClosedForm,
  Oracle,
  MonotoneDown,
  EmptyUp,
  SimplePoints,
  Castelnuovo,
  Cone,
  LfQuartic,
  LfP2,
  LfP3,
  LfGeneral,
  Deg1,
  Deg2,
  QuarticR3,
  QuarticR4,
  QuarticGen,
  CubicBase,
  CubicStep,
  CubicMatching,
  CubicK1,
  CubicK2,
  Cubic2L,
};

std::string_view to_string(Rule rule);
std::optional<Rule> rule_from_string(std::string_view name);
/// TABLE, CLOSED_FORM and ORACLE.
bool is_leaf_rule(Rule rule);

/// `value` compared against `relation`, e.g. {"b", 7, "<= 9"}.
struct SideCondition {
  std::string name;
  std::int64_t value = 0;
  std::string relation;

  /// Evaluates the relation; throws std::invalid_argument if it does not parse.
  bool holds() const;
  friend bool operator==(const SideCondition&, const SideCondition&) = default;
};

/// Relation string "<op> <rhs>" with op one of == != <= >= < >.
std::string relation(std::string_view op, const Integer& rhs);

/// A side condition comparing `value` with `rhs`. Throws std::overflow_error if
/// either does not fit in 64 bits.
SideCondition side(std::string name, const Integer& value, std::string_view op, const Integer& rhs);

using ParamValue = std::variant<std::int64_t, std::string>;

/// Ordered rule parameters.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, ParamValue>> entries);

  Params& set(std::string key, ParamValue value);
  bool contains(std::string_view key) const;
  /// Throws std::invalid_argument if missing or of the wrong type.
  std::int64_t integer(std::string_view key) const;
  const std::string& text(std::string_view key) const;

  const std::vector<std::pair<std::string, ParamValue>>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::vector<std::pair<std::string, ParamValue>> entries_;
};

struct OracleStamp {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;

  friend bool operator==(const OracleStamp&, const OracleStamp&) = default;
};

struct ProofNode;
using NodePtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  Claim claim;
  Rule rule = Rule::Oracle;
  Params params;
  std::vector<SideCondition> side_conditions;
  std::optional<OracleStamp> oracle;
  std::vector<NodePtr> children;
};

struct Certificate {
  int version = kCertificateVersion;
  NodePtr root;
};

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_json(const Certificate& certificate, int indent = 2);
/// Throws CertificateFormatError on malformed input, unknown rules or
/// assertions, unparsable systems, or dangling refs.
Certificate certificate_from_json(std::string_view text);

/// Number of distinct nodes and number of ORACLE leaves in the DAG.
struct CertificateStats {
  std::size_t nodes = 0;
  std::size_t oracle_leaves = 0;
  std::size_t depth = 0;
};
CertificateStats stats(const Certificate& certificate);

}  // namespace ahc
