#pragma once

#include <cstddef>
#include <optional>

#include "gencheb/linalg.hpp"
#include "gencheb/trace.hpp"

namespace gencheb {

/// A = L + D + U with the Jacobi iteration matrix M = −D⁻¹(L+U) and offset
/// g = D⁻¹b. M has an exactly zero diagonal.
struct JacobiSplit {
  DenseMatrix a;
  DenseVector b;
  DenseMatrix m;
  DenseVector g;

  std::size_t size() const noexcept { return b.size(); }
};

/// Throws ZeroDiagonal(row) when |a_ii| < 1e-13 · max|a_ij|.
JacobiSplit jacobi_split(const DenseMatrix& a, const DenseVector& b);

/// x^(m) = M·x^(m−1) + g for m = 1..steps.
IterationTrace jacobi_iterate(const JacobiSplit& s, const DenseVector& x0, std::size_t steps,
                              const std::optional<DenseVector>& x_exact = std::nullopt,
                              const StopRule& stop = {});

/// ‖ε^(m) − M^m·e0‖₂ where ε^(m) comes from iterating from x0 = x − e0.
double error_propagation_check(const JacobiSplit& s, const DenseVector& x_exact,
                               const DenseVector& e0, std::size_t m);

/// One base step M·y + g.
DenseVector jacobi_step(const JacobiSplit& s, const DenseVector& y);

}  // namespace gencheb
