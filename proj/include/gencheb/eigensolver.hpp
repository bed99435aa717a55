#pragma once

// Spectra of small dense unsymmetric matrices: Householder reduction to
// Hessenberg form, Francis double-shift QR for real input, single-shift QR
// for complex input, and eigenvectors by inverse iteration.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gencheb/linalg.hpp"

namespace gencheb {

/// Deflation rule: a subdiagonal entry h is zeroed once
/// |h| <= tolerance * (|diag above| + |diag below|).
inline constexpr double kDeflationTolerance = 1e-14;

/// Sweep budget is this factor times n per deflated eigenvalue.
inline constexpr std::size_t kSweepsPerDimension = 100;

struct HessenbergForm {
  DenseMatrix h;  // upper Hessenberg
  DenseMatrix q;  // orthogonal, with q^T a q = h
};

HessenbergForm hessenberg(const DenseMatrix& a);

/// All eigenvalues of a real square matrix (unordered). Complex ones come
/// out as exact conjugate pairs.
std::vector<Scalar> eigenvalues(const DenseMatrix& a);

/// Eigenvalues of an arbitrary (possibly complex) square matrix. Real input
/// is routed to the Francis solver.
std::vector<Scalar> eigenvalues_general(const DenseMatrix& a);

double spectral_radius(std::span<const Scalar> values);
double spectral_radius(const DenseMatrix& a);

/// Eigen-decomposition M·P = P·D of a real matrix with distinct eigenvalues.
///
/// Column j of `vectors` is a unit-norm eigenvector for `values[j]` whose
/// largest-magnitude component is real and positive. For every complex
/// eigenvalue, `conjugate_of[j]` names its partner k; values[k] and column k
/// are the exact conjugates of values[j] and column j.
struct Spectrum {
  std::vector<Scalar> values;
  DenseMatrix vectors;
  std::vector<std::optional<std::size_t>> conjugate_of;

  std::size_t size() const noexcept { return values.size(); }
  /// P, the eigenvector matrix.
  const DenseMatrix& basis() const noexcept { return vectors; }
};

Spectrum eigenpairs(const DenseMatrix& a);

/// The eigenvalue of largest modulus. Ties (relative 1e-12) prefer a real
/// value, then the larger real part, then the positive imaginary part.
Scalar dominant_eigenvalue(std::span<const Scalar> values);
Scalar dominant_eigenvalue(const Spectrum& s);

/// Expansion coefficients of v in the eigenvector basis.
struct ErrorCoordinates {
  DenseVector alphas;
};

ErrorCoordinates coordinates(const Spectrum& s, const DenseVector& v);

}  // namespace gencheb
