#pragma once

// Generalized Chebyshev polynomials of the root system A2 and the
// semi-iterative method built on them.
//
// The polynomials f_m(x, x̄) are evaluated on the slice x̄ = conj(x):
//   f_0 = 1,  f_1 = x,  f_2 = 3x² − 2x̄,
//   f_m = 3x·f_{m−1} − 3x̄·f_{m−2} + f_{m−3}.
// They satisfy f_m(φ1(θ)) = φ1(mθ) and map the deltoid
//   Δ = { x+iy : 3(x²+y²+1)² + 8(−x³+3xy²) <= 4 }
// into itself, which is what lets them play the role C_m plays on [−1, 1].
//
// The accelerated iteration for the Jacobi pair (M, g) is
//   y^(m) = c1·(M·y^(m−1) + g) + c2·(M̃·y^(m−2) + g̃) + c3·y^(m−3),
// with weights from f_m(1/λ1), λ1 a dominant eigenvalue of M and M̃ the
// matrix sharing M's eigenvalues on the conjugated eigenvectors. M̃ is how
// the x̄ term of the recursion acts on an error vector.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gencheb/eigensolver.hpp"
#include "gencheb/jacobi.hpp"
#include "gencheb/linalg.hpp"
#include "gencheb/trace.hpp"

namespace gencheb {

/// Default slack on the deltoid inequality. λ1/λ1 = 1 is always a corner of
/// Δ, so an exact test would reject every spectrum on rounding noise.
inline constexpr double kAdmissibilityTolerance = 1e-9;

/// (1/3)(e^{2πiθ1} + e^{−2πiθ2} + e^{2πi(θ2−θ1)}).
Scalar phi1(double theta1, double theta2);

/// f_m(z, conj z) by the three-term recursion (no rescaling).
Scalar f_eval(std::size_t m, Scalar z);

/// |f_m(φ1(θ1, θ2)) − φ1(mθ1, mθ2)|.
double functional_identity_check(std::size_t m, double theta1, double theta2);

/// 3(x²+y²+1)² + 8(−x³+3xy²) for z = x + iy; Δ is where this is <= 4.
double deltoid_expression(Scalar z);
bool deltoid_contains(Scalar z, double tol);

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<Scalar> offenders;  // eigenvalues λ with λ/λ1 outside Δ
};

AdmissibilityReport spectrum_admissible(std::span<const Scalar> values, Scalar lambda1,
                                        double tol = kAdmissibilityTolerance);
AdmissibilityReport spectrum_admissible(const Spectrum& s, Scalar lambda1,
                                        double tol = kAdmissibilityTolerance);

/// M̃ = P·conj(D)·P⁻¹. The imaginary part must be negligible
/// (Frobenius <= 1e-9·‖M̃‖_F); it is dropped and the result is real.
/// Throws SingularMatrix or NonRealResult.
DenseMatrix conjugate_companion(const Spectrum& s);

/// g̃ = (I − M̃)·x with x the supplied exact solution, or else the direct
/// solution of (I − M)·x = g.
DenseVector companion_offset(const DenseMatrix& m_tilde, const JacobiSplit& s,
                             const std::optional<DenseVector>& x_exact = std::nullopt);

struct GenCoefficients {
  std::size_t m;
  Scalar c1;  // 3 f_{m−1}(t) / (λ1 f_m(t))
  Scalar c2;  // −3 f_{m−2}(t) / (conj(λ1) f_m(t))
  Scalar c3;  // f_{m−3}(t) / f_m(t),  t = 1/λ1
};

/// Weights for m = 3..m_max. The four-value window of f values is divided by
/// its largest magnitude every step; only ratios are used, so this runs to
/// m_max = 10⁴ and beyond without overflow.
/// Throws DivergentSpectrum unless 0 < |λ1| < 1.
std::vector<GenCoefficients> f_schedule(std::size_t m_max, Scalar lambda1);

struct GenChebOperator {
  JacobiSplit split;
  DenseMatrix m_tilde;
  DenseVector g_tilde;
  Scalar lambda1;
  Spectrum spectrum;
};

struct OperatorOptions {
  std::optional<Scalar> lambda1;         // default: dominant eigenvalue of M
  std::optional<DenseVector> g_tilde;    // default: companion_offset
  std::optional<DenseVector> x_exact;    // used by companion_offset
};

/// Builds (M̃, g̃, λ1) for a Jacobi split. Throws DivergentSpectrum unless
/// 0 < |λ1| < 1.
GenChebOperator make_operator(const JacobiSplit& s, const OperatorOptions& opts = {});

enum class Admissibility { strict, warn };

/// Generalized Chebyshev acceleration with y^(0) = x0 and y^(1), y^(2) the
/// Jacobi steps. Under Admissibility::strict an eigenvalue ratio outside Δ
/// throws InadmissibleSpectrum; under ::warn it is recorded in trace.notes.
IterationTrace gen_accelerate(const GenChebOperator& op, const DenseVector& x0,
                              std::size_t steps,
                              const std::optional<DenseVector>& x_exact = std::nullopt,
                              Admissibility policy = Admissibility::strict,
                              const StopRule& stop = {});

}  // namespace gencheb
