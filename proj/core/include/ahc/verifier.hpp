#pragma once

// Independent certificate checking. Every side condition and child claim is
// recomputed from the rule catalog and every ORACLE leaf is rerun with its
// recorded stamp; the prover is never consulted.

#include "ahc/certificate.hpp"
#include "ahc/oracle.hpp"

#include <string>
#include <vector>

namespace ahc {

struct VerifyOptions {
  /// Only max_columns is read: prime, seed and trials come from each leaf's stamp.
  FieldConfig field;
  /// Worker threads for ORACLE leaves; 0 means hardware concurrency.
  unsigned jobs = 0;
};

struct VerifyResult {
  bool accepted = false;
  /// Root-to-node trail of "RULE system" entries for the rejected node.
  std::vector<std::string> path;
  std::string reason;
  /// Rejected only because an ORACLE leaf is over the column budget.
  bool budget = false;
  std::size_t nodes_checked = 0;
  std::size_t oracle_checks = 0;

  std::string path_text() const;
};

VerifyResult verify(const Certificate& certificate, const VerifyOptions& options = {});

}  // namespace ahc
