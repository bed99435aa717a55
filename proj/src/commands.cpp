#include "gencheb/commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <span>
#include <sstream>

#include "gencheb/analysis.hpp"
#include "gencheb/chebyshev.hpp"
#include "gencheb/eigensolver.hpp"
#include "gencheb/io.hpp"
#include "gencheb/jacobi.hpp"
#include "gencheb/reference_systems.hpp"

namespace gencheb::cli {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethods{{
    {Method::jacobi, "jacobi"},
    {Method::chebyshev, "chebyshev"},
    {Method::gencheby, "gencheby"},
    {Method::stationary_classical, "stationary-classical"},
    {Method::stationary_generalized, "stationary-generalized"},
}};

struct LoadedSystem {
  JacobiSplit split;
  std::optional<DenseVector> x_exact;
  std::optional<DenseVector> g_tilde;
};

LoadedSystem load(const RunConfig& cfg) {
  DenseMatrix a = io::read_matrix_market(cfg.matrix_path);
  DenseVector b = io::read_vector(cfg.rhs_path);
  LoadedSystem sys{jacobi_split(a, b), std::nullopt, std::nullopt};
  if (cfg.x_exact_path) sys.x_exact = io::read_vector(*cfg.x_exact_path);
  if (cfg.g_tilde_path) sys.g_tilde = io::read_vector(*cfg.g_tilde_path);
  for (const auto* v : {&sys.x_exact, &sys.g_tilde})
    if (*v && (*v)->size() != sys.split.size())
      throw DimensionMismatch("auxiliary vector length does not match the system");
  return sys;
}

GenChebOperator build_operator(const RunConfig& cfg, const LoadedSystem& sys) {
  return make_operator(sys.split, {cfg.lambda1_override, sys.g_tilde, sys.x_exact});
}

double rho_for(const RunConfig& cfg, const JacobiSplit& split) {
  if (cfg.lambda1_override) return std::abs(*cfg.lambda1_override);
  return spectral_radius(eigenvalues(split.m));
}

AsymptoticCoefficients real_abc(const GenChebOperator& op) {
  if (op.lambda1.imag() != 0.0) {
    throw InvalidArgument("the stationary generalized iteration needs a real lambda1");
  }
  return abc_coefficients(alpha_from_lambda1(op.lambda1.real()));
}

IterationTrace run_method(const RunConfig& cfg, const LoadedSystem& sys) {
  const JacobiSplit& split = sys.split;
  const DenseVector x0(split.size());
  const StopRule stop{cfg.tol};
  switch (cfg.method) {
    case Method::jacobi:
      return jacobi_iterate(split, x0, cfg.steps, sys.x_exact, stop);
    case Method::chebyshev:
      return cheb_accelerate(split, rho_for(cfg, split), x0, cfg.steps, sys.x_exact, stop);
    case Method::gencheby:
      return gen_accelerate(build_operator(cfg, sys), x0, cfg.steps, sys.x_exact,
                            cfg.admissibility, stop);
    case Method::stationary_classical: {
      const double rho = rho_for(cfg, split);
      if (!(rho > 0.0 && rho < 1.0)) throw DivergentSpectrum("spectral radius not in (0, 1)");
      return stationary_classical(split, theta_from_rho(rho), x0, cfg.steps, sys.x_exact, stop);
    }
    case Method::stationary_generalized: {
      const GenChebOperator op = build_operator(cfg, sys);
      return stationary_generalized(op, real_abc(op), x0, cfg.steps, sys.x_exact, stop);
    }
  }
  throw InvalidArgument("unknown method");
}

std::string join(std::span<const Scalar> values) {
  std::string s;
  for (const auto& z : values) {
    if (!s.empty()) s += ", ";
    s += io::format_scalar(z, 8);
  }
  return s;
}

}  // namespace

std::optional<Method> parse_method(std::string_view label) {
  for (const auto& [m, name] : kMethods)
    if (name == label) return m;
  return std::nullopt;
}

std::string_view method_label(Method m) {
  for (const auto& [mm, name] : kMethods)
    if (mm == m) return name;
  return "?";
}

void RunConfig::validate() const {
  if (steps < 1) throw InvalidArgument("steps must be at least 1");
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const LoadedSystem sys = load(cfg);
    const IterationTrace trace = run_method(cfg, sys);
    for (const auto& note : trace.notes) err << note << '\n';

    if (cfg.trace_out) {
      std::ofstream f(*cfg.trace_out);
      if (!f) throw Error("cannot write " + cfg.trace_out->string());
      io::write_trace_csv(f, trace);
    }

    const double residual = trace.residual_norms.back();
    out << std::setprecision(6);
    out << "method: " << trace.method << '\n';
    out << "iterations: " << trace.size() - 1 << '\n';
    out << "residual: " << std::scientific << residual << '\n';
    if (trace.has_errors()) out << "error: " << trace.error_norms.back() << '\n';
    out << std::defaultfloat;
    if (residual <= cfg.tol) return kExitOk;
    err << "not converged: residual " << residual << " > tol " << cfg.tol << '\n';
    return kExitNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const LoadedSystem sys = load(cfg);
    const GenChebOperator op = build_operator(cfg, sys);
    ConvergenceReport report = convergence_report(op);

    // Empirical rates need a reference solution; fall back to a direct solve.
    const DenseVector x_ref =
        sys.x_exact ? *sys.x_exact : lu_solve(lu_factor(sys.split.a), sys.split.b);
    const DenseVector x0(sys.split.size());
    const std::size_t steps = std::max<std::size_t>(cfg.steps, 3);
    const StopRule stop{cfg.tol};
    report.empirical_rates.emplace_back(
        "jacobi", empirical_rate(jacobi_iterate(sys.split, x0, steps, x_ref, stop), 1));
    report.empirical_rates.emplace_back(
        "chebyshev",
        empirical_rate(cheb_accelerate(sys.split, report.rho, x0, steps, x_ref, stop), 2));
    if (report.admissibility.admissible || cfg.admissibility == Admissibility::warn) {
      report.empirical_rates.emplace_back(
          "gencheby",
          empirical_rate(gen_accelerate(op, x0, steps, x_ref, Admissibility::warn, stop), 3));
    }

    out << std::setprecision(8);
    out << "eigenvalues: " << join(op.spectrum.values) << '\n';
    out << "rho: " << report.rho << '\n';
    out << "lambda1: " << io::format_scalar(report.lambda1, 8) << '\n';
    out << "admissible: " << (report.admissibility.admissible ? "yes" : "no") << '\n';
    if (!report.admissibility.admissible) {
      out << "offenders: " << join(report.admissibility.offenders) << '\n';
    }
    out << "theta: " << report.theta << '\n';
    out << "mu_max_classical: " << report.mu_max_classical << '\n';
    out << "companion_radius_classical: " << report.companion_radius_classical << '\n';
    if (report.coefficients) {
      const auto& k = *report.coefficients;
      out << "alpha: " << io::format_scalar(k.alpha, 8) << '\n';
      out << "a: " << io::format_scalar(k.a, 8) << '\n';
      out << "b: " << io::format_scalar(k.b, 8) << '\n';
      out << "c: " << io::format_scalar(k.c, 8) << '\n';
      out << "mu_max_generalized: " << *report.mu_max_generalized << '\n';
      out << "companion_radius_generalized: " << *report.companion_radius_generalized << '\n';
      for (const auto& r : report.cubic_roots) {
        out << "cubic_roots[" << io::format_scalar(r.lambda, 6) << "]: " << join(r.roots) << '\n';
      }
    } else {
      out << "mu_max_generalized: n/a (complex lambda1)\n";
    }
    for (const auto& r : report.quadratic_roots) {
      out << "quadratic_roots[" << io::format_scalar(r.lambda, 6) << "]: " << join(r.roots) << '\n';
    }
    for (const auto& [name, rate] : report.empirical_rates) {
      out << "empirical_rate[" << name << "]: " << rate << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_deltoid(std::size_t resolution, const std::filesystem::path& path, std::ostream& out,
                std::ostream& err) {
  try {
    if (resolution < 2) throw InvalidArgument("resolution must be at least 2");
    std::ofstream file;
    std::ostream* sink = &out;
    if (path != "-") {
      file.open(path);
      if (!file) throw Error("cannot write " + path.string());
      sink = &file;
    }
    *sink << "x,y,inside\n" << std::setprecision(10);
    const double span = static_cast<double>(resolution - 1);
    auto coord = [span](std::size_t k) {
      return 1.2 * (2.0 * static_cast<double>(k) - span) / span;
    };
    for (std::size_t i = 0; i < resolution; ++i) {
      const double y = coord(i);
      for (std::size_t j = 0; j < resolution; ++j) {
        const double x = coord(j);
        *sink << x << ',' << y << ',' << (deltoid_contains({x, y}, 0.0) ? 1 : 0) << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_repro(const ReproOptions& opts, std::ostream& out) {
  using namespace reference;
  const auto start = std::chrono::steady_clock::now();

  auto perturbed = [&](System s) {
    if (opts.perturb) s.a(2, 1) *= 1.25;
    return s;
  };
  const System s1 = perturbed(system1());
  const System s2 = perturbed(system2());

  struct Job {
    Table table;
    std::function<IterationTrace()> run;
  };
  const std::vector<Job> jobs{
      {system1_jacobi(),
       [&] { return jacobi_iterate(jacobi_split(s1.a, s1.b), DenseVector(4), 8, s1.solution); }},
      {system1_chebyshev(),
       [&] {
         const JacobiSplit sp = jacobi_split(s1.a, s1.b);
         return cheb_accelerate(sp, spectral_radius(eigenvalues(sp.m)), DenseVector(4), 8,
                                s1.solution);
       }},
      {system2_jacobi(),
       [&] { return jacobi_iterate(jacobi_split(s2.a, s2.b), DenseVector(4), 8, s2.solution); }},
      {system2_gencheby(),
       [&] {
         const JacobiSplit sp = jacobi_split(s2.a, s2.b);
         const GenChebOperator op = make_operator(sp, {std::nullopt, std::nullopt, s2.solution});
         return gen_accelerate(op, DenseVector(4), 8, s2.solution);
       }},
  };

  bool all_pass = true;
  out << std::left << std::setw(24) << "table";
  for (int m = 0; m <= 8; ++m) out << " m=" << m;
  out << '\n';
  for (const auto& job : jobs) {
    out << std::setw(24) << job.table.label;
    std::optional<IterationTrace> trace;
    std::string failure;
    try {
      trace = job.run();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    for (const auto& row : job.table.rows) {
      bool ok = trace && static_cast<std::size_t>(row.m) < trace->size();
      if (ok) {
        const auto& y = trace->iterates[row.m];
        for (std::size_t i = 0; i < 4; ++i)
          ok = ok && std::abs(y[i].real() - row.iterate[i]) <= kTableTolerance;
        ok = ok && std::abs(trace->error_norms[row.m] - row.error_norm) <= kTableTolerance;
      }
      all_pass = all_pass && ok;
      out << (ok ? " ok  " : " FAIL");
    }
    out << '\n';
    if (!failure.empty()) out << "  (" << failure << ")\n";
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << (all_pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2) << ms
      << " ms)\n";
  return all_pass ? kExitOk : kExitError;
}

}  // namespace gencheb::cli
