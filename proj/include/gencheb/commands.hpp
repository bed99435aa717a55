#pragma once

// Batch commands behind the `gencheb` executable. Each returns the process
// exit status: 0 success, 1 hard error, 2 no convergence within the budget.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gencheb/gencheby.hpp"
#include "gencheb/linalg.hpp"
#include "gencheb/trace.hpp"

namespace gencheb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotConverged = 2;

enum class Method { jacobi, chebyshev, gencheby, stationary_classical, stationary_generalized };

std::optional<Method> parse_method(std::string_view label);
std::string_view method_label(Method m);

struct RunConfig {
  std::filesystem::path matrix_path;
  std::filesystem::path rhs_path;
  Method method = Method::gencheby;
  std::size_t steps = kDefaultMaxSteps;
  double tol = kDefaultTolerance;
  std::optional<Scalar> lambda1_override;
  std::optional<std::filesystem::path> g_tilde_path;
  std::optional<std::filesystem::path> x_exact_path;
  Admissibility admissibility = Admissibility::strict;
  std::optional<std::filesystem::path> trace_out;
  // Seed for the randomized property harness; unused by solve/analyze.
  std::uint64_t seed = 0x5eed;

  /// Throws InvalidArgument on steps == 0 or tol <= 0.
  void validate() const;
};

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// resolution x resolution grid over [−1.2, 1.2]², rows `x,y,inside`.
/// Writes to stdout when `path` is "-".
int cmd_deltoid(std::size_t resolution, const std::filesystem::path& path, std::ostream& out,
                std::ostream& err);

struct ReproOptions {
  /// Negative control: perturb the embedded matrices so the tables must fail.
  bool perturb = false;
};

int cmd_repro(const ReproOptions& opts, std::ostream& out);

}  // namespace gencheb::cli
