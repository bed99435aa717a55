#include "gencheb/gencheby.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace gencheb {

namespace {

Scalar unit(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

std::string format_scalar(Scalar z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

Scalar phi1(double theta1, double theta2) {
  return (unit(theta1) + unit(-theta2) + unit(theta2 - theta1)) / 3.0;
}

Scalar f_eval(std::size_t m, Scalar z) {
  const Scalar zbar = std::conj(z);
  if (m == 0) return 1.0;
  if (m == 1) return z;
  Scalar f0 = 1.0, f1 = z, f2 = 3.0 * z * z - 2.0 * zbar;
  for (std::size_t k = 3; k <= m; ++k) {
    const Scalar next = 3.0 * z * f2 - 3.0 * zbar * f1 + f0;
    f0 = f1;
    f1 = f2;
    f2 = next;
  }
  return f2;
}

double functional_identity_check(std::size_t m, double theta1, double theta2) {
  const double k = static_cast<double>(m);
  return std::abs(f_eval(m, phi1(theta1, theta2)) - phi1(k * theta1, k * theta2));
}

double deltoid_expression(Scalar z) {
  const double x = z.real(), y = z.imag();
  const double r = x * x + y * y + 1.0;
  return 3.0 * r * r + 8.0 * (-x * x * x + 3.0 * x * y * y);
}

bool deltoid_contains(Scalar z, double tol) { return deltoid_expression(z) <= 4.0 + tol; }

AdmissibilityReport spectrum_admissible(std::span<const Scalar> values, Scalar lambda1,
                                        double tol) {
  if (!(std::abs(lambda1) > 0.0)) throw InvalidArgument("lambda1 must be nonzero");
  AdmissibilityReport report;
  for (const auto& lambda : values) {
    if (!deltoid_contains(lambda / lambda1, tol)) {
      report.admissible = false;
      report.offenders.push_back(lambda);
    }
  }
  return report;
}

AdmissibilityReport spectrum_admissible(const Spectrum& s, Scalar lambda1, double tol) {
  return spectrum_admissible(s.values, lambda1, tol);
}

DenseMatrix conjugate_companion(const Spectrum& s) {
  const DenseMatrix& p = s.basis();
  const DenseMatrix p_inv = inverse(p);
  DenseVector conj_values(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) conj_values[j] = std::conj(s.values[j]);
  const DenseMatrix full = p * DenseMatrix::diagonal(conj_values) * p_inv;

  const double imag = frobenius_norm(full.imag_part());
  const double whole = frobenius_norm(full);
  if (imag > 1e-9 * whole) {
    throw NonRealResult("conjugate companion has imaginary part " + std::to_string(imag) +
                        " (Frobenius), eigenvector pairing is broken");
  }
  return full.real_part();
}

DenseVector companion_offset(const DenseMatrix& m_tilde, const JacobiSplit& s,
                             const std::optional<DenseVector>& x_exact) {
  const std::size_t n = s.size();
  if (m_tilde.rows() != n || m_tilde.cols() != n) throw DimensionMismatch("companion_offset");
  const DenseMatrix id = DenseMatrix::identity(n);
  DenseVector x = x_exact ? *x_exact : lu_solve(lu_factor(id - s.m), s.g);
  if (x.size() != n) throw DimensionMismatch("exact solution length");
  return mat_vec(id - m_tilde, x);
}

std::vector<GenCoefficients> f_schedule(std::size_t m_max, Scalar lambda1) {
  const double mag = std::abs(lambda1);
  if (!(mag > 0.0 && mag < 1.0)) {
    throw DivergentSpectrum("generalized acceleration needs 0 < |lambda1| < 1");
  }
  if (m_max < 3) throw InvalidArgument("f_schedule needs m_max >= 3");

  const Scalar t = 1.0 / lambda1;
  const Scalar tbar = std::conj(t);
  const Scalar lambda1_bar = std::conj(lambda1);

  // Window (f_{m−3}, f_{m−2}, f_{m−1}) up to a common positive scale.
  Scalar w0 = 1.0, w1 = t, w2 = 3.0 * t * t - 2.0 * tbar;
  std::vector<GenCoefficients> out;
  out.reserve(m_max - 2);
  for (std::size_t m = 3; m <= m_max; ++m) {
    const Scalar w3 = 3.0 * t * w2 - 3.0 * tbar * w1 + w0;
    if (w3 == Scalar{}) {
      throw DivergentSpectrum("f_m(1/lambda1) vanished at m = " + std::to_string(m));
    }
    out.push_back({m, 3.0 * w2 / (lambda1 * w3), -3.0 * w1 / (lambda1_bar * w3), w0 / w3});
    const double scale = std::max({std::abs(w1), std::abs(w2), std::abs(w3)});
    w0 = w1 / scale;
    w1 = w2 / scale;
    w2 = w3 / scale;
  }
  return out;
}

GenChebOperator make_operator(const JacobiSplit& s, const OperatorOptions& opts) {
  Spectrum spectrum = eigenpairs(s.m);
  const Scalar lambda1 = opts.lambda1 ? *opts.lambda1 : dominant_eigenvalue(spectrum);
  const double mag = std::abs(lambda1);
  if (!(mag > 0.0 && mag < 1.0)) {
    throw DivergentSpectrum("spectral radius " + std::to_string(mag) +
                            " is not in (0, 1); the iteration does not converge");
  }
  DenseMatrix m_tilde = conjugate_companion(spectrum);
  DenseVector g_tilde = opts.g_tilde ? *opts.g_tilde : companion_offset(m_tilde, s, opts.x_exact);
  if (g_tilde.size() != s.size()) throw DimensionMismatch("g_tilde length");
  return {s, std::move(m_tilde), std::move(g_tilde), lambda1, std::move(spectrum)};
}

IterationTrace gen_accelerate(const GenChebOperator& op, const DenseVector& x0, std::size_t steps,
                              const std::optional<DenseVector>& x_exact, Admissibility policy,
                              const StopRule& stop) {
  if (steps < 3) throw InvalidArgument("generalized acceleration needs at least 3 steps");
  const JacobiSplit& s = op.split;
  if (x0.size() != s.size()) throw DimensionMismatch("initial guess length");

  const AdmissibilityReport adm = spectrum_admissible(op.spectrum, op.lambda1);
  std::vector<std::string> notes;
  if (!adm.admissible) {
    std::string msg = "inadmissible spectrum: ratio to lambda1 outside the deltoid for";
    for (const auto& z : adm.offenders) msg += " " + format_scalar(z);
    if (policy == Admissibility::strict) throw InadmissibleSpectrum(msg, adm.offenders);
    notes.push_back("warning: " + msg);
  }

  const auto weights = f_schedule(steps, op.lambda1);
  TraceRecorder rec("gencheby", s.a, s.b, x_exact, true);
  rec.trace().notes = std::move(notes);

  DenseVector y0 = x0;
  if (rec.record(y0, std::nullopt, stop)) return std::move(rec).finish();
  DenseVector y1 = jacobi_step(s, y0);
  if (rec.record(y1, std::nullopt, stop)) return std::move(rec).finish();
  DenseVector y2 = jacobi_step(s, y1);
  if (rec.record(y2, std::nullopt, stop)) return std::move(rec).finish();

  for (const auto& w : weights) {
    DenseVector next = w.c1 * jacobi_step(s, y2) +
                       w.c2 * (mat_vec(op.m_tilde, y1) + op.g_tilde) + w.c3 * y0;
    const bool done = rec.record(next, StepCoefficients{w.c1, w.c2, w.c3}, stop);
    y0 = std::move(y1);
    y1 = std::move(y2);
    y2 = std::move(next);
    if (done) break;
  }
  return std::move(rec).finish();
}

}  // namespace gencheb
