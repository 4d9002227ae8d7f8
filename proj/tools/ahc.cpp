// ahc: dimensions, certificates and sweeps for linear systems with fat points.
//
// Exit codes: 0 success, 1 rejected certificate or table mismatch, 2 usage or
// parse error, 3 column budget exceeded.

#include "ahc/certificate.hpp"
#include "ahc/explain.hpp"
#include "ahc/oracle.hpp"
#include "ahc/prover.hpp"
#include "ahc/sweep.hpp"
#include "ahc/syntax.hpp"
#include "ahc/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Globals {
  ahc::FieldConfig field;
  std::string format = "text";
  std::string out;
  unsigned jobs = 0;
  bool timing = false;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Usage("cannot write " + g.out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_dim(const Globals& g, const std::string& text) {
  const auto sys = ahc::parse_system(text);
  ahc::validate_field(g.field, sys);
  const auto report = ahc::dimension(sys, g.field);
  std::ostringstream out;
  if (g.format == "json") {
    out << ahc::report_to_json(report) << '\n';
  } else if (g.format == "csv") {
    out << "system,virtual,expected,oracle_dim,special\n"
        << '"' << report.system << "\"," << report.virtual_dim << ',' << report.expected << ',' << report.dim
        << ',' << (report.special ? "true" : "false") << '\n';
  } else {
    out << "system    " << report.system << '\n'
        << "virtual   " << report.virtual_dim << '\n'
        << "expected  " << report.expected << '\n'
        << "dim       " << report.dim << '\n'
        << "verdict   " << (report.special ? "SPECIAL" : "non-special") << '\n';
  }
  emit(g, out.str());
  return kOk;
}

int cmd_prove(const Globals& g, int r, int d, std::int64_t n) {
  ahc::ProverOptions opts;
  opts.field = g.field;
  ahc::Prover prover(opts);
  const auto result = prover.prove(r, d, n);
  if (!result.ok()) {
    std::cerr << "prove failed at " << result.failure->system << ": " << result.failure->reason << '\n';
    return result.failure->budget ? kBudget : kReject;
  }
  const auto& cert = *result.certificate;
  emit(g, ahc::to_json(cert));
  const auto st = ahc::stats(cert);
  std::cerr << ahc::describe(cert.root->claim) << " [" << ahc::to_string(cert.root->rule) << ", " << st.nodes
            << " nodes, " << st.oracle_leaves << " oracle leaves]\n";
  return kOk;
}

ahc::VerifyResult run_verify(const Globals& g, const ahc::Certificate& cert) {
  ahc::VerifyOptions opts;
  opts.field = g.field;
  opts.jobs = g.jobs;
  return ahc::verify(cert, opts);
}

int report_rejection(const ahc::VerifyResult& v) {
  std::cout << "REJECT\n";
  std::cerr << "at " << v.path_text() << "\n  " << v.reason << '\n';
  return v.budget ? kBudget : kReject;
}

int cmd_verify(const Globals& g, const std::string& path) {
  const auto cert = ahc::certificate_from_json(read_file(path));
  const auto v = run_verify(g, cert);
  if (!v.accepted) return report_rejection(v);
  std::cout << "ACCEPT " << ahc::describe(cert.root->claim) << " (" << v.nodes_checked << " nodes, "
            << v.oracle_checks << " oracle checks)\n";
  return kOk;
}

int cmd_explain(const Globals& g, const std::string& path, bool check) {
  const auto cert = ahc::certificate_from_json(read_file(path));
  if (check) {
    const auto v = run_verify(g, cert);
    if (!v.accepted) return report_rejection(v);
  }
  emit(g, ahc::explain(cert));
  return kOk;
}

int cmd_sweep(const Globals& g, ahc::SweepOptions o) {
  o.field = g.field;
  o.jobs = g.jobs;
  o.timing = g.timing;
  const auto rows = ahc::run_sweep(o);
  const auto format = g.format == "json" ? ahc::SweepFormat::Json
                      : g.format == "csv" ? ahc::SweepFormat::Csv
                                          : ahc::SweepFormat::Text;
  emit(g, ahc::format_sweep(rows, format));
  int code = kOk;
  for (const auto& row : rows) {
    if (row.mismatch()) {
      std::cerr << "table mismatch at r=" << row.r << " d=" << row.d << " n=" << row.n << '\n';
      code = kReject;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of linear systems with fat points: oracle, certificates, sweeps"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--prime", g.field.prime, "Prime field characteristic, below 2^32")->capture_default_str();
  app.add_option("--trials", g.field.trials, "Random placements per oracle call")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", g.field.seed, "Base seed")->capture_default_str();
  app.add_option("--max-cols", g.field.max_columns, "Largest C(r+d,r) the oracle accepts")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--timing", g.timing, "Fill the ms column of sweeps");
  app.fallthrough();

  std::string system_text;
  auto* dim = app.add_subcommand("dim", "Oracle dimension of a system, e.g. \"L(r=2,d=4; 2^5)\"");
  dim->add_option("system", system_text)->required();

  int r = 0;
  int d = 0;
  std::int64_t n = 0;
  auto* prove = app.add_subcommand("prove", "Certificate for L_{r,d}(2^n)");
  prove->add_option("r", r)->required()->check(CLI::Range(2, 1000));
  prove->add_option("d", d)->required()->check(CLI::Range(2, 1000));
  prove->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  prove->add_option("-o", g.out, "Certificate file");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  verify->add_option("certificate", cert_path)->required();

  bool no_check = false;
  auto* explain = app.add_subcommand("explain", "Narrate a certificate file");
  explain->add_option("certificate", cert_path)->required();
  explain->add_flag("--no-verify", no_check, "Skip verification before narrating");

  ahc::SweepOptions sweep_opts;
  bool no_prove = false;
  auto* sweep = app.add_subcommand("sweep", "Classify L_{r,d}(2^n) over a grid");
  sweep->add_option("--r-min", sweep_opts.r_min)->capture_default_str();
  sweep->add_option("--r-max", sweep_opts.r_max)->capture_default_str();
  sweep->add_option("--d-min", sweep_opts.d_min)->capture_default_str();
  sweep->add_option("--d-max", sweep_opts.d_max)->capture_default_str();
  sweep->add_flag("--no-prove", no_prove, "Leave the rule column empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dim) return cmd_dim(g, system_text);
    if (*prove) return cmd_prove(g, r, d, n);
    if (*verify) return cmd_verify(g, cert_path);
    if (*explain) return cmd_explain(g, cert_path, !no_check);
    if (*sweep) {
      sweep_opts.prove = !no_prove;
      return cmd_sweep(g, sweep_opts);
    }
  } catch (const ahc::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const ahc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ahc::CertificateFormatError& e) {
    std::cerr << "malformed certificate: " << e.what() << '\n';
    return kUsage;
  } catch (const Usage& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
