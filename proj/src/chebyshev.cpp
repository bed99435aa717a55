#include "gencheb/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gencheb {

Scalar cheb_eval(std::size_t m, Scalar t) {
  if (m == 0) return 1.0;
  Scalar prev = 1.0, cur = t;
  for (std::size_t k = 2; k <= m; ++k) {
    const Scalar next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_functional_check(std::size_t m, double theta) {
  return std::abs(cheb_eval(m, std::cos(theta)) -
                  std::cos(static_cast<double>(m) * theta));
}

std::vector<ChebCoefficients> cheb_ratios(std::size_t m_max, Scalar t) {
  if (!(std::abs(t) > 1.0)) {
    throw DivergentSpectrum("Chebyshev acceleration needs |t| = 1/rho > 1");
  }
  if (m_max < 2) throw InvalidArgument("cheb_ratios needs m_max >= 2");
  const Scalar rho = 1.0 / t;

  std::vector<ChebCoefficients> out;
  out.reserve(m_max - 1);
  Scalar older = 1.0, old = t;  // C_{m-2}, C_{m-1} up to a common scale
  for (std::size_t m = 2; m <= m_max; ++m) {
    const Scalar cur = 2.0 * t * old - older;
    out.push_back({m, 2.0 * old / (rho * cur), -older / cur});
    const double scale = std::max({std::abs(old), std::abs(cur)});
    older = old / scale;
    old = cur / scale;
  }
  return out;
}

IterationTrace cheb_accelerate(const JacobiSplit& s, double rho, const DenseVector& x0,
                               std::size_t steps, const std::optional<DenseVector>& x_exact,
                               const StopRule& stop) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw DivergentSpectrum("Chebyshev acceleration needs 0 < rho < 1, got " +
                            std::to_string(rho));
  }
  if (steps < 2) throw InvalidArgument("Chebyshev acceleration needs at least 2 steps");
  if (x0.size() != s.size()) throw DimensionMismatch("initial guess length");

  const auto weights = cheb_ratios(steps, 1.0 / rho);
  TraceRecorder rec("chebyshev", s.a, s.b, x_exact, true);

  DenseVector older = x0;
  if (rec.record(older, std::nullopt, stop)) return std::move(rec).finish();
  DenseVector old = jacobi_step(s, x0);
  if (rec.record(old, std::nullopt, stop)) return std::move(rec).finish();

  for (const auto& w : weights) {
    DenseVector next = w.c1 * jacobi_step(s, old) + w.c2 * older;
    const bool done = rec.record(next, StepCoefficients{w.c1, w.c2, std::nullopt}, stop);
    older = std::move(old);
    old = std::move(next);
    if (done) break;
  }
  return std::move(rec).finish();
}

}  // namespace gencheb
