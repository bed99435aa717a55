#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "gencheb/commands.hpp"
#include "gencheb/io.hpp"

namespace cli = gencheb::cli;

namespace {

void add_run_options(CLI::App& sub, cli::RunConfig& cfg, std::string& method,
                     std::string& lambda1, std::string& admissibility) {
  sub.add_option("--matrix-path", cfg.matrix_path, "MatrixMarket file holding A")
      ->required()
      ->check(CLI::ExistingFile);
  sub.add_option("--rhs-path", cfg.rhs_path, "MatrixMarket n x 1 file holding b")
      ->required()
      ->check(CLI::ExistingFile);
  sub.add_option("--method", method,
                 "jacobi | chebyshev | gencheby | stationary-classical | stationary-generalized")
      ->capture_default_str();
  sub.add_option("--steps", cfg.steps, "iteration budget")->capture_default_str();
  sub.add_option("--tol", cfg.tol, "stop when ||b - Ay||inf / ||b||inf <= tol")
      ->capture_default_str();
  sub.add_option("--lambda1-override", lambda1,
                 "lambda1 to use instead of the dominant eigenvalue, e.g. -0.5 or 0.2+0.3i");
  sub.add_option("--g-tilde-path", cfg.g_tilde_path,
                 "precomputed offset vector for the conjugate step");
  sub.add_option("--x-exact-path", cfg.x_exact_path, "known solution, enables error norms");
  sub.add_option("--admissibility", admissibility, "strict | warn")->capture_default_str();
  sub.add_option("--trace-out", cfg.trace_out, "write the per-step trace as CSV");
  sub.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
}

bool finish_config(cli::RunConfig& cfg, const std::string& method, const std::string& lambda1,
                   const std::string& admissibility) {
  const auto m = cli::parse_method(method);
  if (!m) {
    std::cerr << "error: unknown method '" << method << "'\n";
    return false;
  }
  cfg.method = *m;
  if (admissibility == "strict") {
    cfg.admissibility = gencheb::Admissibility::strict;
  } else if (admissibility == "warn") {
    cfg.admissibility = gencheb::Admissibility::warn;
  } else {
    std::cerr << "error: --admissibility must be strict or warn\n";
    return false;
  }
  if (!lambda1.empty()) {
    try {
      cfg.lambda1_override = gencheb::io::parse_scalar(lambda1);
    } catch (const std::exception& e) {
      std::cerr << "error: --lambda1-override: " << e.what() << '\n';
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi, Chebyshev and generalized Chebyshev iterative solvers"};
  app.require_subcommand(1);

  cli::RunConfig solve_cfg, analyze_cfg;
  std::string solve_method = "gencheby", solve_lambda1, solve_adm = "strict";
  std::string analyze_method = "gencheby", analyze_lambda1, analyze_adm = "strict";

  auto* solve = app.add_subcommand("solve", "run an iteration and report the final residual");
  add_run_options(*solve, solve_cfg, solve_method, solve_lambda1, solve_adm);

  auto* analyze = app.add_subcommand("analyze", "spectrum, asymptotic rates and admissibility");
  add_run_options(*analyze, analyze_cfg, analyze_method, analyze_lambda1, analyze_adm);

  std::size_t resolution = 201;
  std::string deltoid_out = "-";
  auto* deltoid = app.add_subcommand("deltoid", "sample the deltoid membership on a grid");
  deltoid->add_option("--resolution", resolution, "grid points per axis")->capture_default_str();
  deltoid->add_option("--out", deltoid_out, "CSV path, '-' for stdout")->capture_default_str();

  cli::ReproOptions repro_opts;
  auto* repro = app.add_subcommand("repro", "recompute the reference tables and compare");
  repro->add_flag("--perturb", repro_opts.perturb, "perturb the systems (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitError;
  }

  if (solve->parsed()) {
    if (!finish_config(solve_cfg, solve_method, solve_lambda1, solve_adm)) return cli::kExitError;
    return cli::cmd_solve(solve_cfg, std::cout, std::cerr);
  }
  if (analyze->parsed()) {
    if (!finish_config(analyze_cfg, analyze_method, analyze_lambda1, analyze_adm)) {
      return cli::kExitError;
    }
    return cli::cmd_analyze(analyze_cfg, std::cout, std::cerr);
  }
  if (deltoid->parsed()) return cli::cmd_deltoid(resolution, deltoid_out, std::cout, std::cerr);
  if (repro->parsed()) return cli::cmd_repro(repro_opts, std::cout);
  return cli::kExitError;
}
