#pragma once

// Classical Chebyshev polynomials and Chebyshev semi-iterative acceleration
// of the Jacobi iteration.

#include <cstddef>
#include <optional>
#include <vector>

#include "gencheb/jacobi.hpp"
#include "gencheb/linalg.hpp"
#include "gencheb/trace.hpp"

namespace gencheb {

/// C_m(t) by the three-term recurrence. Overflows for large m when |t| > 1;
/// the accelerator never calls this directly (see cheb_ratios).
Scalar cheb_eval(std::size_t m, Scalar t);

/// |C_m(cos θ) − cos(mθ)|.
double cheb_functional_check(std::size_t m, double theta);

/// Step-m weights of the accelerator:
///   y^(m) = c1·(M·y^(m−1) + g) + c2·y^(m−2),
///   c1 = 2·C_{m−1}(t)/(ρ·C_m(t)),  c2 = −C_{m−2}(t)/C_m(t),  ρ = 1/t.
struct ChebCoefficients {
  std::size_t m;
  Scalar c1;
  Scalar c2;
};

/// Weights for m = 2..m_max. The (C_{m−2}, C_{m−1}, C_m) window is rescaled
/// every step, so m_max is not limited by overflow.
/// Throws DivergentSpectrum when |t| <= 1.
std::vector<ChebCoefficients> cheb_ratios(std::size_t m_max, Scalar t);

/// Classical Chebyshev acceleration with y^(0) = x0, y^(1) = M·x0 + g.
/// Requires 0 < rho < 1 (DivergentSpectrum otherwise) and steps >= 2.
IterationTrace cheb_accelerate(const JacobiSplit& s, double rho, const DenseVector& x0,
                               std::size_t steps,
                               const std::optional<DenseVector>& x_exact = std::nullopt,
                               const StopRule& stop = {});

}  // namespace gencheb
