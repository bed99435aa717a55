#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gencheb/linalg.hpp"

namespace gencheb {

/// Weights used to form one iterate of a semi-iterative method. c1 multiplies
/// the base step M·y + g, c2 the second term (the M̃ step for the generalized
/// method, the plain y^(m-2) for the classical one), c3 the y^(m-3) term.
struct StepCoefficients {
  Scalar c1;
  Scalar c2;
  std::optional<Scalar> c3;

  Scalar sum() const { return c1 + c2 + c3.value_or(Scalar{}); }
};

/// Everything an iteration produced, one entry per index m = 0, 1, ...
///
/// `residual_norms[m]` is ‖b − A·y^(m)‖∞ / ‖b‖∞ (absolute when b = 0).
/// `error_norms[m]` is ‖x − y^(m)‖₂ and is only filled when the exact
/// solution was supplied. `coefficients` is empty for plain Jacobi; for the
/// accelerated methods it runs parallel to `iterates`, with nullopt on the
/// seed steps.
struct IterationTrace {
  std::string method;
  std::vector<DenseVector> iterates;
  std::vector<double> residual_norms;
  std::vector<double> error_norms;
  std::vector<std::optional<StepCoefficients>> coefficients;
  std::vector<std::string> notes;

  std::size_t size() const noexcept { return iterates.size(); }
  bool has_errors() const noexcept { return !error_norms.empty(); }
  const DenseVector& last() const { return iterates.back(); }
};

/// Optional early stop on the relative ∞-norm residual.
struct StopRule {
  std::optional<double> residual_tolerance;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxSteps = 200;

/// Appends iterates to a trace while keeping its columns in step.
class TraceRecorder {
 public:
  TraceRecorder(std::string method, const DenseMatrix& a, const DenseVector& b,
                const std::optional<DenseVector>& x_exact, bool with_coefficients);

  /// Returns true when the stop rule is satisfied by this iterate.
  bool record(const DenseVector& y, std::optional<StepCoefficients> coefficients,
              const StopRule& stop);

  IterationTrace finish() && { return std::move(trace_); }
  IterationTrace& trace() noexcept { return trace_; }

 private:
  const DenseMatrix& a_;
  const DenseVector& b_;
  const std::optional<DenseVector>& x_exact_;
  bool with_coefficients_;
  double b_scale_;
  IterationTrace trace_;
};

}  // namespace gencheb
