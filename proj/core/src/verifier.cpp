#include "ahc/verifier.hpp"

#include "ahc/rules.hpp"
#include "ahc/syntax.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace ahc {
namespace {

struct Rejection {
  std::vector<std::string> path;
  std::string reason;
  bool budget = false;
};

struct OracleJob {
  const ProofNode* node;
  std::vector<std::string> path;
};

std::string label(const ProofNode& node) {
  return std::string(to_string(node.rule)) + " " + format_system(node.claim.system);
}

class Walker {
 public:
  std::optional<Rejection> walk(const NodePtr& node) { return visit(*node); }
  std::vector<OracleJob>& jobs() { return jobs_; }
  std::size_t nodes() const { return seen_.size(); }

 private:
  std::optional<Rejection> reject(std::string reason) { return Rejection{path_, std::move(reason), false}; }

  std::optional<Rejection> visit(const ProofNode& node) {
    if (!seen_.insert(&node).second) return std::nullopt;
    path_.push_back(label(node));
    auto result = check(node);
    if (!result) {
      for (const auto& child : node.children) {
        if ((result = visit(*child))) break;
      }
    }
    path_.pop_back();
    return result;
  }

  std::optional<Rejection> check(const ProofNode& node) {
    const auto& claim = node.claim;
    if (claim.value < -1) return reject("claimed dimension " + std::to_string(claim.value) + " is below -1");
    const auto normalized = claim_for(claim.system, claim.value);
    if (normalized.assertion != claim.assertion) {
      return reject("assertion '" + std::string(to_string(claim.assertion)) + "' does not match dimension " +
                    std::to_string(claim.value) + " with expected dimension " +
                    to_string(claim.system.expected_dim()) + "; it should read '" +
                    std::string(to_string(normalized.assertion)) + "'");
    }
    if (node.rule == Rule::Oracle) {
      if (!node.oracle) return reject("ORACLE leaf without an oracle stamp");
      if (!node.children.empty()) return reject("ORACLE leaf has children");
      if (!node.side_conditions.empty()) return reject("ORACLE leaf has side conditions");
      jobs_.push_back({&node, path_});
      return std::nullopt;
    }
    if (node.oracle) return reject("only ORACLE leaves carry an oracle stamp");

    RuleInstance inst;
    try {
      inst = instantiate(node.rule, claim.system, node.params);
    } catch (const RuleMismatch& e) {
      return reject(std::string("rule does not apply: ") + e.what());
    }

    if (auto bad = compare_sides(node.side_conditions, inst.side_conditions)) return reject(*bad);
    for (const auto& s : node.side_conditions) {
      bool ok = false;
      try {
        ok = s.holds();
      } catch (const std::invalid_argument& e) {
        return reject(e.what());
      }
      if (!ok) {
        return reject("side condition '" + s.name + "' = " + std::to_string(s.value) + " violates '" + s.relation + "'");
      }
    }
    if (inst.value && *inst.value != claim.value) {
      return reject("rule concludes dimension " + std::to_string(*inst.value) + " but the claim is " +
                    std::to_string(claim.value));
    }
    if (node.children.size() != inst.children.size()) {
      return reject("rule needs " + std::to_string(inst.children.size()) + " premises, certificate has " +
                    std::to_string(node.children.size()));
    }
    for (std::size_t i = 0; i < inst.children.size(); ++i) {
      if (!(node.children[i]->claim == inst.children[i])) {
        return reject("premise " + std::to_string(i) + " should be '" + describe(inst.children[i]) +
                      "' but the certificate proves '" + describe(node.children[i]->claim) + "'");
      }
    }
    return std::nullopt;
  }

  static std::optional<std::string> compare_sides(const std::vector<SideCondition>& recorded,
                                                  const std::vector<SideCondition>& recomputed) {
    for (const auto& want : recomputed) {
      auto it = std::find_if(recorded.begin(), recorded.end(), [&](const auto& s) { return s.name == want.name; });
      if (it == recorded.end()) return "side condition '" + want.name + "' is missing";
      if (it->value != want.value) {
        return "side condition '" + want.name + "' records " + std::to_string(it->value) + ", recomputed " +
               std::to_string(want.value);
      }
      if (it->relation != want.relation) {
        return "side condition '" + want.name + "' records relation '" + it->relation + "', expected '" +
               want.relation + "'";
      }
    }
    if (recorded.size() != recomputed.size()) return std::string("certificate records unexpected side conditions");
    for (std::size_t i = 0; i < recorded.size(); ++i) {
      if (!(recorded[i] == recomputed[i])) return std::string("side conditions are out of order");
    }
    return std::nullopt;
  }

  std::set<const ProofNode*> seen_;
  std::vector<std::string> path_;
  std::vector<OracleJob> jobs_;
};

std::optional<Rejection> check_oracle(const OracleJob& job, const FieldConfig& base) {
  const auto& node = *job.node;
  const auto& stamp = *node.oracle;
  FieldConfig cfg = base;
  cfg.prime = stamp.prime;
  cfg.seed = stamp.seed;
  cfg.trials = stamp.trials;
  cfg.cross_check_prime.reset();
  const auto& sys = node.claim.system;
  if (sys.sections() > cfg.max_columns) {
    return Rejection{job.path,
                     "oracle leaf needs " + to_string(sys.sections()) + " columns, budget is " +
                         std::to_string(cfg.max_columns),
                     true};
  }
  try {
    validate_field(cfg, sys);
  } catch (const std::invalid_argument& e) {
    return Rejection{job.path, std::string("bad oracle stamp: ") + e.what(), false};
  }
  DimensionReport report;
  try {
    report = dimension(sys, cfg);
  } catch (const std::exception& e) {
    return Rejection{job.path, std::string("oracle failed: ") + e.what(), false};
  }
  if (report.dim != node.claim.value) {
    return Rejection{job.path,
                     "oracle computes dimension " + to_string(report.dim) + ", claim is " +
                         std::to_string(node.claim.value),
                     false};
  }
  return std::nullopt;
}

}  // namespace

std::string VerifyResult::path_text() const {
  std::string out;
  for (const auto& p : path) {
    if (!out.empty()) out += " > ";
    out += p;
  }
  return out;
}

VerifyResult verify(const Certificate& certificate, const VerifyOptions& options) {
  VerifyResult result;
  if (certificate.version != kCertificateVersion) {
    result.reason = "unsupported certificate version " + std::to_string(certificate.version);
    return result;
  }
  if (!certificate.root) {
    result.reason = "certificate has no root";
    return result;
  }
  Walker walker;
  auto structural = walker.walk(certificate.root);
  result.nodes_checked = walker.nodes();
  if (structural) {
    result.path = std::move(structural->path);
    result.reason = std::move(structural->reason);
    return result;
  }

  auto& jobs = walker.jobs();
  std::vector<std::optional<Rejection>> outcomes(jobs.size());
  unsigned workers = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) outcomes[i] = check_oracle(jobs[i], options.field);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  result.oracle_checks = jobs.size();
  // Report the first failing leaf in depth-first order, whatever finished first.
  for (auto& o : outcomes) {
    if (o) {
      result.path = std::move(o->path);
      result.reason = std::move(o->reason);
      result.budget = o->budget;
      return result;
    }
  }
  result.accepted = true;
  return result;
}

}  // namespace ahc
