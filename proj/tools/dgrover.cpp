#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dgrover/dgrover.hpp"

namespace {

// DGROVER_TOL replaces the default tolerance; --tol still wins.
double default_tolerance() {
  if (const char *env = std::getenv("DGROVER_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0.0) return tol;
    } catch (const std::exception &) {
    }
    throw dgrover::Error(dgrover::ErrorCode::InvalidArgument, std::string("bad DGROVER_TOL '") + env + "'");
  }
  return dgrover::kPstTolerance;
}

void print_warnings(const dgrover::AnalysisReport &r) {
  for (const auto &w : r.warnings) std::cerr << "warning: n=" << r.n << ": " << w << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Grover walks on Cayley graphs of dihedral groups"};
  app.require_subcommand(1);

  int n = 0;
  std::string expression;
  bool verify = false;
  std::optional<int> tau_max;
  std::optional<double> tol;
  std::string format = "json";

  auto *analyze = app.add_subcommand("analyze", "spectrum, period and PST for one connection set");
  analyze->add_option("--n", n, "order of the rotation subgroup")->required();
  analyze->add_option("--set", expression, "connection set, e.g. \"b, b*a^1\"")->required();
  analyze->add_flag("--verify", verify, "cross-check against the brute-force oracles");
  analyze->add_option("--tau-max", tau_max, "largest time searched (default 8n)");
  analyze->add_option("--tol", tol, "PST tolerance on |T_tau(P)_uv - 1|");
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string family;
  int from = 0, to = 0, jobs = 1;
  std::string scan_format = "json";
  auto *scan = app.add_subcommand("scan", "analyze a named family over a parameter range");
  scan->add_option("--family", family)->required()->check(CLI::IsMember(dgrover::family_names()));
  scan->add_option("--from", from)->required();
  scan->add_option("--to", to)->required();
  scan->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  scan->add_flag("--verify", verify, "cross-check every row against the brute-force oracles");
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    dgrover::AnalysisOptions options;
    options.verify = verify;
    options.tau_max = tau_max;
    options.tol = tol ? *tol : default_tolerance();
    if (options.tau_max && *options.tau_max < 1)
      throw dgrover::Error(dgrover::ErrorCode::InvalidArgument, "--tau-max must be positive");
    if (options.tol <= 0.0) throw dgrover::Error(dgrover::ErrorCode::InvalidArgument, "--tol must be positive");

    if (analyze->parsed()) {
      const auto report = dgrover::analyze(n, expression, options);
      print_warnings(report);
      if (format == "json")
        std::cout << dgrover::Json(report).dump(2) << "\n";
      else
        std::cout << dgrover::format_text(report);
    } else {
      const auto rows = dgrover::scan_family(family, from, to, jobs, options);
      for (const auto &row : rows) print_warnings(row.report);
      if (scan_format == "json")
        std::cout << dgrover::scan_json(family, rows).dump(2) << "\n";
      else
        std::cout << dgrover::scan_text(family, rows);
    }
  } catch (const dgrover::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return dgrover::is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
