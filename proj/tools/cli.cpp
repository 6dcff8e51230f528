#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "springer_rca/errors.hpp"
#include "springer_rca/rca_operators.hpp"
#include "springer_rca/semigroup_oracle.hpp"
#include "springer_rca/serialize.hpp"
#include "springer_rca/verification.hpp"

namespace springer_rca::cli {

namespace {

struct RunConfig {
  int n = 0;
  int k = 0;
  int max_degree = 0;
  std::string command;
  std::string op;
  int r = 1;
  std::vector<int> lambda;
  std::string dress = "1";
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
  std::string suite = "all";
};

const std::vector<std::string> kOperators = {"X", "Y", "E", "F", "H", "Er", "Fr", "monopole", "commutator-XY"};
const std::vector<std::string> kSuites = {"weyl",       "sl2",   "singular", "kernel-y", "closed-forms",
                                          "stabilizer", "euler", "oracle",   "boundary", "all"};

unsigned effective_threads(unsigned requested) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("SPRINGER_RCA_THREADS")) {
    const long c = std::strtol(cap, nullptr, 10);
    if (c >= 1) t = std::min(t, static_cast<unsigned>(c));
  }
  return t;
}

DressPolynomial parse_dress(const std::string& s, int n) {
  auto index = [&](std::size_t prefix) {
    const std::string digits = s.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw ArgumentError("malformed dressing '" + s + "'");
    }
    return std::stoi(digits);
  };
  if (s == "1") return DressPolynomial::one(n);
  if (s == "m") return DressPolynomial::m_symbol(n);
  if (s == "hbar") return DressPolynomial::hbar_symbol(n);
  if (s.rfind("phi", 0) == 0) {
    const int a = index(3);
    if (a < 1 || a > n) throw ArgumentError("dressing " + s + " needs 1 <= a <= n");
    return DressPolynomial::phi(n, a - 1);
  }
  if (s.rfind('e', 0) == 0) {
    const int j = index(1);
    if (j > n) throw ArgumentError("dressing " + s + " needs j <= n");
    return DressPolynomial::elementary_symmetric(n, j);
  }
  throw ArgumentError("unknown dressing '" + s + "'; expected 1, m, hbar, e<j> or phi<a>");
}

MinusculeCoweight classify_minuscule(const std::vector<int>& lambda, int n) {
  if (lambda.size() != static_cast<std::size_t>(n)) {
    throw ArgumentError("--lambda needs n = " + std::to_string(n) + " entries");
  }
  int sign = 0;
  int r = 0;
  for (int x : lambda) {
    if (x == 0) continue;
    if ((x != 1 && x != -1) || (sign != 0 && x != sign)) {
      throw UnsupportedError("only minuscule coweights +-(1, ..., 1, 0, ..., 0) up to permutation are supported");
    }
    sign = x;
    ++r;
  }
  if (r == 0) throw UnsupportedError("the zero coweight is not minuscule");
  return MinusculeCoweight(sign, r, n);
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ArgumentError("cannot open output file " + cfg.output);
  file << body;
}

int cmd_fixed_points(const RunConfig& cfg, const Params& p, std::ostream& out) {
  p.require_coprime();
  const auto basis = build_graded_basis(p, cfg.max_degree, effective_threads(cfg.threads));
  if (cfg.format == "csv") {
    emit(cfg, basis_csv(basis), out);
  } else {
    emit(cfg, envelope(p, cfg.max_degree, "fixed-points", basis_json(basis)).dump(2) + "\n", out);
  }
  return kOk;
}

int cmd_operator(const RunConfig& cfg, const Params& p, std::ostream& out) {
  p.require_coprime();
  const unsigned threads = effective_threads(cfg.threads);
  const auto basis = make_basis(p, cfg.max_degree, threads);
  const auto dress = parse_dress(cfg.dress, p.n());
  const bool dressable = cfg.op == "E" || cfg.op == "F" || cfg.op == "Er" || cfg.op == "Fr" || cfg.op == "monopole";
  if (!dressable && cfg.dress != "1") throw ArgumentError("--dress only applies to E, F, Er, Fr and monopole");
  if ((cfg.op == "Er" || cfg.op == "Fr") && (cfg.r < 1 || cfg.r > p.n())) {
    throw ArgumentError("--r must lie in 1..n");
  }

  std::optional<GradedOperator> op;
  if (cfg.op == "X") {
    op = operator_X(basis, threads);
  } else if (cfg.op == "Y") {
    op = operator_Y(basis, threads);
  } else if (cfg.op == "E") {
    op = operator_E(p.n(), dress, basis, threads);
  } else if (cfg.op == "F") {
    op = operator_F(p.n(), dress, basis, threads).scaled(-1);
  } else if (cfg.op == "H") {
    op = operator_H(basis);
  } else if (cfg.op == "Er") {
    op = operator_E(cfg.r, dress, basis, threads);
  } else if (cfg.op == "Fr") {
    op = operator_F(cfg.r, dress, basis, threads);
  } else if (cfg.op == "monopole") {
    op = minuscule_monopole(classify_minuscule(cfg.lambda, p.n()), dress, basis, threads);
  } else {
    op = commutator(operator_X(basis, threads), operator_Y(basis, threads));
  }

  if (cfg.format == "csv") {
    emit(cfg, operator_csv(*op), out);
    return kOk;
  }
  Json results{{"operator", cfg.op}};
  if (cfg.op == "Er" || cfg.op == "Fr") results["r"] = cfg.r;
  if (cfg.op == "monopole") results["lambda"] = cfg.lambda;
  if (dressable) results["dress"] = dress.to_string();
  results["basis"] = basis_json(*basis);
  results["matrix"] = operator_json(*op);
  emit(cfg, envelope(p, cfg.max_degree, "operator", std::move(results)).dump(2) + "\n", out);
  return kOk;
}

std::vector<std::string> expand_suites(const std::string& suite, const Params& p) {
  if (suite != "all") return {suite};
  std::vector<std::string> out = {"weyl", "singular", "kernel-y", "stabilizer", "euler", "oracle", "boundary"};
  if (p.n() == 2) {
    out.insert(out.begin() + 1, "sl2");
    out.insert(out.begin() + 4, "closed-forms");
  }
  return out;
}

VerificationReport run_suite(const std::string& suite, const Params& p, int max_degree, unsigned threads) {
  if (suite == "weyl") return check_weyl_relation(p, max_degree, threads);
  if (suite == "sl2") {
    auto report = check_sl2_and_casimir(p, max_degree, threads);
    const auto lowest = check_lowest_weights(p, max_degree, threads);
    report.checks.insert(report.checks.end(), lowest.checks.begin(), lowest.checks.end());
    report.details["lowest_weights"] = lowest.details["lowest_weights"];
    return report;
  }
  if (suite == "singular") return check_singular_vectors(p, max_degree, threads);
  if (suite == "kernel-y") return check_kernel_Y(p, max_degree, threads);
  if (suite == "closed-forms") {
    p.require_coprime();
    if (p.n() != 2) throw UnsupportedError("the closed-forms suite needs n = 2");
    const int ell = (p.k() - 1) / 2;
    auto report = check_rank_two_closed_forms(ell, max_degree, threads);
    const auto kernel = check_rank_two_kernel_family(ell, threads);
    report.checks.insert(report.checks.end(), kernel.checks.begin(), kernel.checks.end());
    report.details["kernel_vectors"] = kernel.details["vectors"];
    return report;
  }
  if (suite == "stabilizer") return verify_stabilizer(p);
  if (suite == "euler") return check_euler(p, max_degree, threads);
  if (suite == "oracle") return compare_with_fixed_points(p, max_degree);
  auto report = check_boundary_vanishing(p, max_degree);
  const auto routes = check_evaluation_routes(p, max_degree, threads);
  report.checks.insert(report.checks.end(), routes.checks.begin(), routes.checks.end());
  return report;
}

int cmd_verify(const RunConfig& cfg, const Params& p, std::ostream& out, std::ostream& err) {
  p.require_coprime();
  const unsigned threads = effective_threads(cfg.threads);
  std::vector<VerificationReport> reports;
  for (const auto& suite : expand_suites(cfg.suite, p)) {
    try {
      reports.push_back(run_suite(suite, p, cfg.max_degree, threads));
    } catch (const UnderTruncationError& e) {
      err << "error: suite " << suite << " needs --max-degree >= " << e.required() << " (got " << e.given()
          << ")\n";
      return kUnderTruncation;
    }
  }
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (cfg.format == "csv") {
    emit(cfg, reports_csv(reports), out);
  } else {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    Json results{{"suite", cfg.suite}, {"passed", passed}, {"reports", std::move(list)}};
    emit(cfg, envelope(p, cfg.max_degree, "verify", std::move(results)).dump(2) + "\n", out);
  }
  for (const auto& r : reports) {
    if (const auto* f = r.first_failure()) {
      err << "FAIL " << r.claim << ": " << f->name;
      if (f->witness) {
        err << " at degree " << f->witness->degree << " (expected " << f->witness->expected << ", got "
            << f->witness->actual << ")";
      }
      err << "\n";
    }
  }
  return passed ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact monopole operators on the fixed-point basis of Hilbert schemes of x^n = t^k", "springer-rca"};
  app.set_config("--config", "", "Read flags from a key = value file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", cfg.n, "Matrix size n")->required()->check(CLI::PositiveNumber);
  app.add_option("--k", cfg.k, "Exponent k")->required()->check(CLI::PositiveNumber);
  app.add_option("--max-degree", cfg.max_degree, "Truncation degree D")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", cfg.output, "Write the report to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");

  auto* fixed = app.add_subcommand("fixed-points", "List admissible cocharacters per degree");
  auto* oper = app.add_subcommand("operator", "Emit an operator matrix in coordinate format");
  oper->add_option("--op", cfg.op, "Operator name")->required()->check(CLI::IsMember(kOperators));
  oper->add_option("--r", cfg.r, "Index r for Er and Fr");
  oper->add_option("--lambda", cfg.lambda, "Minuscule coweight for monopole, e.g. 1,0,0")->delimiter(',');
  oper->add_option("--dress", cfg.dress, "Dressing polynomial: 1, m, hbar, e<j> or phi<a>");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(kSuites));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    const Params p(cfg.n, cfg.k);
    if (fixed->parsed()) return cmd_fixed_points(cfg, p, out);
    if (oper->parsed()) return cmd_operator(cfg, p, out);
    if (verify->parsed()) return cmd_verify(cfg, p, out, err);
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UnderTruncationError& e) {
    err << "error: " << e.what() << "\n";
    return kUnderTruncation;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace springer_rca::cli
