#pragma once

// Ultimate-behavior analysis of the two accelerators: the limiting
// stationary recursions, their block companion matrices, the per-eigenvalue
// characteristic equations for μ, and empirical contraction rates.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gencheb/eigensolver.hpp"
#include "gencheb/gencheby.hpp"
#include "gencheb/jacobi.hpp"
#include "gencheb/linalg.hpp"
#include "gencheb/trace.hpp"

namespace gencheb {

/// θ = arccosh(1/ρ). Throws OutOfRange unless 0 < ρ < 1.
double theta_from_rho(double rho);

/// (1 − √(1 − ρ²))/ρ, which equals e^{−θ}.
double mu_max_classical(double rho);

/// Roots of μ² − μ(1+e^{−2θ})λ + e^{−2θ} = 0.
std::array<Scalar, 2> mu_quadratic(Scalar lambda, double theta);

/// α with (1/3)(e^α + e^{−α} + 1) = 1/λ1 and Re α > 0. For λ1 < 0 the
/// imaginary part is π.
Scalar alpha_from_lambda1(double lambda1);

/// Limits of the generalized weights:
///   a = 1 + e^{−α} + e^{−2α},  b = −(e^{−α} + e^{−2α} + e^{−3α}),  c = e^{−3α}.
struct AsymptoticCoefficients {
  Scalar alpha;
  Scalar a;
  Scalar b;
  Scalar c;
};

AsymptoticCoefficients abc_coefficients(Scalar alpha);

/// Roots of μ³ − aλμ² − b·conj(λ)·μ − c = 0, as companion-matrix eigenvalues.
std::array<Scalar, 3> mu_cubic(Scalar lambda, const AsymptoticCoefficients& k);

/// Largest |μ| over every eigenvalue of the spectrum.
double mu_max_generalized(std::span<const Scalar> values, double lambda1);
double mu_max_generalized(const Spectrum& s, double lambda1);

/// [[(1+e^{−2θ})M, −e^{−2θ}I], [I, 0]], the error propagator of the limiting
/// classical recursion.
DenseMatrix companion_classical(const DenseMatrix& m, double theta);

/// [[aM, bM̃, cI], [I, 0, 0], [0, I, 0]].
DenseMatrix companion_generalized(const DenseMatrix& m, const DenseMatrix& m_tilde,
                                  const AsymptoticCoefficients& k);

/// y^(m) = (1+e^{−2θ})(M·y^(m−1) + g) − e^{−2θ}·y^(m−2), seeded with x0 and
/// one Jacobi step.
IterationTrace stationary_classical(const JacobiSplit& s, double theta, const DenseVector& x0,
                                   std::size_t steps,
                                   const std::optional<DenseVector>& x_exact = std::nullopt,
                                   const StopRule& stop = {});

/// y^(m) = a(M·y^(m−1)+g) + b(M̃·y^(m−2)+g̃) + c·y^(m−3), seeded with x0 and
/// two Jacobi steps.
IterationTrace stationary_generalized(const GenChebOperator& op, const AsymptoticCoefficients& k,
                                      const DenseVector& x0, std::size_t steps,
                                      const std::optional<DenseVector>& x_exact = std::nullopt,
                                      const StopRule& stop = {});

/// Geometric mean of ‖η^(m+1)‖/‖η^(m)‖ for m = m_start .. m_end−1, i.e. over
/// the error norms at indices m_start..m_end. m_end is clamped to the last
/// index of the trace. Ratios whose denominator is below 1e-14 (or whose
/// numerator is zero) are skipped; EmptyWindow if none survive.
double empirical_rate(const IterationTrace& trace, std::size_t m_start,
                      std::optional<std::size_t> m_end = std::nullopt);

struct EigenvalueRoots {
  Scalar lambda;
  std::vector<Scalar> roots;
};

struct ConvergenceReport {
  double rho = 0.0;
  Scalar lambda1;
  AdmissibilityReport admissibility;

  double theta = 0.0;
  double mu_max_classical = 0.0;
  double companion_radius_classical = 0.0;
  std::vector<EigenvalueRoots> quadratic_roots;

  // Only when λ1 is real.
  std::optional<AsymptoticCoefficients> coefficients;
  std::optional<double> mu_max_generalized;
  std::optional<double> companion_radius_generalized;
  std::vector<EigenvalueRoots> cubic_roots;

  std::vector<std::pair<std::string, double>> empirical_rates;
};

/// Full report for a Jacobi split. Throws DivergentSpectrum when ρ(M) >= 1.
ConvergenceReport convergence_report(const GenChebOperator& op);

}  // namespace gencheb
