#include "gencheb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gencheb {

namespace {

// e^{−α}, with the imaginary part dropped when Im α is exactly 0 or π so a
// real λ1 keeps the stationary iteration in real arithmetic.
Scalar exp_neg(Scalar alpha) {
  const double mag = std::exp(-alpha.real());
  if (alpha.imag() == 0.0) return mag;
  if (alpha.imag() == std::numbers::pi) return -mag;
  return std::polar(mag, -alpha.imag());
}

void require_convergent_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw OutOfRange("rho must lie in (0, 1), got " + std::to_string(rho));
  }
}

}  // namespace

double theta_from_rho(double rho) {
  require_convergent_rho(rho);
  return std::acosh(1.0 / rho);
}

double mu_max_classical(double rho) {
  require_convergent_rho(rho);
  // (1 − √(1−ρ²))/ρ rewritten as ρ/(1 + √(1−ρ²)) to avoid cancellation at small ρ.
  return rho / (1.0 + std::sqrt(1.0 - rho * rho));
}

std::array<Scalar, 2> mu_quadratic(Scalar lambda, double theta) {
  if (!(theta > 0.0)) throw OutOfRange("theta must be positive");
  // With 1 + e^{−2θ} = 2e^{−θ}cosh θ the roots are e^{−θ}(u ± √(u² − 1)),
  // u = λ cosh θ. Factoring u² − 1 keeps the double root at u = ±1 sharp.
  const double q = std::exp(-2.0 * theta);
  const Scalar u = lambda * std::cosh(theta);
  const Scalar disc = std::sqrt((u - 1.0) * (u + 1.0));
  // Larger-magnitude root first, the other from Vieta's product.
  const Scalar big =
      std::exp(-theta) * (std::abs(u + disc) >= std::abs(u - disc) ? u + disc : u - disc);
  if (big == Scalar{}) return {Scalar{}, Scalar{}};
  return {big, q / big};
}

Scalar alpha_from_lambda1(double lambda1) {
  if (!(std::abs(lambda1) > 0.0 && std::abs(lambda1) < 1.0)) {
    throw OutOfRange("lambda1 must satisfy 0 < |lambda1| < 1");
  }
  const double cosh_alpha = (3.0 / lambda1 - 1.0) / 2.0;
  if (cosh_alpha >= 1.0) return std::acosh(cosh_alpha);
  if (cosh_alpha <= -1.0) return {std::acosh(-cosh_alpha), std::numbers::pi};
  throw OutOfRange("no alpha with Re alpha > 0 for lambda1 = " + std::to_string(lambda1));
}

AsymptoticCoefficients abc_coefficients(Scalar alpha) {
  if (!(alpha.real() > 0.0)) throw OutOfRange("alpha must have a positive real part");
  const Scalar e1 = exp_neg(alpha);
  const Scalar e2 = e1 * e1;
  const Scalar e3 = e2 * e1;
  return {alpha, 1.0 + e1 + e2, -(e1 + e2 + e3), e3};
}

std::array<Scalar, 3> mu_cubic(Scalar lambda, const AsymptoticCoefficients& k) {
  DenseMatrix companion(3, 3);
  companion(0, 0) = k.a * lambda;
  companion(0, 1) = k.b * std::conj(lambda);
  companion(0, 2) = k.c;
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  const auto roots = eigenvalues_general(companion);
  return {roots[0], roots[1], roots[2]};
}

double mu_max_generalized(std::span<const Scalar> values, double lambda1) {
  const AsymptoticCoefficients k = abc_coefficients(alpha_from_lambda1(lambda1));
  double best = 0.0;
  for (const auto& lambda : values)
    for (const auto& mu : mu_cubic(lambda, k)) best = std::max(best, std::abs(mu));
  return best;
}

double mu_max_generalized(const Spectrum& s, double lambda1) {
  return mu_max_generalized(s.values, lambda1);
}

DenseMatrix companion_classical(const DenseMatrix& m, double theta) {
  if (!m.is_square()) throw DimensionMismatch("companion_classical needs a square matrix");
  if (!(theta > 0.0)) throw OutOfRange("theta must be positive");
  const std::size_t n = m.rows();
  const double q = std::exp(-2.0 * theta);
  const DenseMatrix id = DenseMatrix::identity(n);
  return block_matrix({{(1.0 + q) * m, -q * id}, {id, DenseMatrix(n, n)}});
}

DenseMatrix companion_generalized(const DenseMatrix& m, const DenseMatrix& m_tilde,
                                  const AsymptoticCoefficients& k) {
  if (!m.is_square() || m.rows() != m_tilde.rows() || m.cols() != m_tilde.cols()) {
    throw DimensionMismatch("companion_generalized: M and M~ must be square and equal in size");
  }
  const std::size_t n = m.rows();
  const DenseMatrix id = DenseMatrix::identity(n);
  const DenseMatrix zero(n, n);
  return block_matrix({{k.a * m, k.b * m_tilde, k.c * id}, {id, zero, zero}, {zero, id, zero}});
}

IterationTrace stationary_classical(const JacobiSplit& s, double theta, const DenseVector& x0,
                                   std::size_t steps, const std::optional<DenseVector>& x_exact,
                                   const StopRule& stop) {
  if (!(theta > 0.0)) throw OutOfRange("theta must be positive");
  if (steps < 2) throw InvalidArgument("stationary_classical needs at least 2 steps");
  if (x0.size() != s.size()) throw DimensionMismatch("initial guess length");

  const double q = std::exp(-2.0 * theta);
  const StepCoefficients w{1.0 + q, -q, std::nullopt};
  TraceRecorder rec("stationary-classical", s.a, s.b, x_exact, true);

  DenseVector older = x0;
  if (rec.record(older, std::nullopt, stop)) return std::move(rec).finish();
  DenseVector old = jacobi_step(s, older);
  if (rec.record(old, std::nullopt, stop)) return std::move(rec).finish();
  for (std::size_t m = 2; m <= steps; ++m) {
    DenseVector next = w.c1 * jacobi_step(s, old) + w.c2 * older;
    const bool done = rec.record(next, w, stop);
    older = std::move(old);
    old = std::move(next);
    if (done) break;
  }
  return std::move(rec).finish();
}

IterationTrace stationary_generalized(const GenChebOperator& op, const AsymptoticCoefficients& k,
                                      const DenseVector& x0, std::size_t steps,
                                      const std::optional<DenseVector>& x_exact,
                                      const StopRule& stop) {
  if (steps < 3) throw InvalidArgument("stationary_generalized needs at least 3 steps");
  const JacobiSplit& s = op.split;
  if (x0.size() != s.size()) throw DimensionMismatch("initial guess length");

  const StepCoefficients w{k.a, k.b, k.c};
  TraceRecorder rec("stationary-generalized", s.a, s.b, x_exact, true);

  DenseVector y0 = x0;
  if (rec.record(y0, std::nullopt, stop)) return std::move(rec).finish();
  DenseVector y1 = jacobi_step(s, y0);
  if (rec.record(y1, std::nullopt, stop)) return std::move(rec).finish();
  DenseVector y2 = jacobi_step(s, y1);
  if (rec.record(y2, std::nullopt, stop)) return std::move(rec).finish();
  for (std::size_t m = 3; m <= steps; ++m) {
    DenseVector next = k.a * jacobi_step(s, y2) + k.b * (mat_vec(op.m_tilde, y1) + op.g_tilde) +
                       k.c * y0;
    const bool done = rec.record(next, w, stop);
    y0 = std::move(y1);
    y1 = std::move(y2);
    y2 = std::move(next);
    if (done) break;
  }
  return std::move(rec).finish();
}

double empirical_rate(const IterationTrace& trace, std::size_t m_start,
                      std::optional<std::size_t> m_end) {
  if (!trace.has_errors()) throw InvalidArgument("empirical_rate needs error norms");
  const auto& e = trace.error_norms;
  const std::size_t last = std::min(m_end.value_or(e.size() - 1), e.size() - 1);
  double log_sum = 0.0;
  std::size_t count = 0;
  for (std::size_t m = m_start; m < last; ++m) {
    if (e[m] < 1e-14 || e[m + 1] <= 0.0) continue;
    log_sum += std::log(e[m + 1] / e[m]);
    ++count;
  }
  if (count == 0) {
    throw EmptyWindow("no usable error ratios in window [" + std::to_string(m_start) + ", " +
                      std::to_string(last) + "]");
  }
  return std::exp(log_sum / static_cast<double>(count));
}

ConvergenceReport convergence_report(const GenChebOperator& op) {
  ConvergenceReport r;
  const auto& values = op.spectrum.values;
  r.rho = spectral_radius(values);
  if (!(r.rho < 1.0)) {
    throw DivergentSpectrum("spectral radius " + std::to_string(r.rho) + " >= 1");
  }
  r.lambda1 = op.lambda1;
  r.admissibility = spectrum_admissible(values, op.lambda1);

  r.theta = theta_from_rho(r.rho);
  r.mu_max_classical = mu_max_classical(r.rho);
  r.companion_radius_classical = spectral_radius(companion_classical(op.split.m, r.theta));
  for (const auto& lambda : values) {
    const auto roots = mu_quadratic(lambda, r.theta);
    r.quadratic_roots.push_back({lambda, {roots.begin(), roots.end()}});
  }

  if (op.lambda1.imag() == 0.0) {
    const AsymptoticCoefficients k = abc_coefficients(alpha_from_lambda1(op.lambda1.real()));
    r.coefficients = k;
    r.mu_max_generalized = mu_max_generalized(values, op.lambda1.real());
    r.companion_radius_generalized =
        spectral_radius(companion_generalized(op.split.m, op.m_tilde, k));
    for (const auto& lambda : values) {
      const auto roots = mu_cubic(lambda, k);
      r.cubic_roots.push_back({lambda, {roots.begin(), roots.end()}});
    }
  }
  return r;
}

}  // namespace gencheb
