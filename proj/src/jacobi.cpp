#include "gencheb/jacobi.hpp"

#include <cmath>

namespace gencheb {

TraceRecorder::TraceRecorder(std::string method, const DenseMatrix& a, const DenseVector& b,
                             const std::optional<DenseVector>& x_exact, bool with_coefficients)
    : a_(a), b_(b), x_exact_(x_exact), with_coefficients_(with_coefficients) {
  const double bn = norm_inf(b);
  b_scale_ = bn > 0.0 ? bn : 1.0;
  trace_.method = std::move(method);
  if (x_exact_ && x_exact_->size() != b.size()) {
    throw DimensionMismatch("exact solution length does not match the system");
  }
}

bool TraceRecorder::record(const DenseVector& y, std::optional<StepCoefficients> coefficients,
                           const StopRule& stop) {
  const double residual = norm_inf(b_ - mat_vec(a_, y)) / b_scale_;
  trace_.iterates.push_back(y);
  trace_.residual_norms.push_back(residual);
  if (x_exact_) trace_.error_norms.push_back(norm2(*x_exact_ - y));
  if (with_coefficients_) trace_.coefficients.push_back(coefficients);
  return stop.residual_tolerance && residual <= *stop.residual_tolerance;
}

JacobiSplit jacobi_split(const DenseMatrix& a, const DenseVector& b) {
  if (!a.is_square()) throw DimensionMismatch("jacobi_split needs a square matrix");
  if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length");
  if (!a.is_real()) throw InvalidArgument("jacobi_split expects a real matrix");

  const std::size_t n = a.rows();
  const double floor = 1e-13 * max_abs(a);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(a(i, i));
    if (d == 0.0 || d < floor) throw ZeroDiagonal(i);
  }

  DenseMatrix m(n, n);
  DenseVector g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = a(i, i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) m(i, j) = -a(i, j) / d;
    g[i] = b[i] / d;
  }
  return {a, b, std::move(m), std::move(g)};
}

DenseVector jacobi_step(const JacobiSplit& s, const DenseVector& y) {
  return mat_vec(s.m, y) + s.g;
}

IterationTrace jacobi_iterate(const JacobiSplit& s, const DenseVector& x0, std::size_t steps,
                              const std::optional<DenseVector>& x_exact, const StopRule& stop) {
  if (x0.size() != s.size()) throw DimensionMismatch("initial guess length");
  TraceRecorder rec("jacobi", s.a, s.b, x_exact, false);
  DenseVector x = x0;
  if (rec.record(x, std::nullopt, stop)) return std::move(rec).finish();
  for (std::size_t m = 1; m <= steps; ++m) {
    x = jacobi_step(s, x);
    if (rec.record(x, std::nullopt, stop)) break;
  }
  return std::move(rec).finish();
}

double error_propagation_check(const JacobiSplit& s, const DenseVector& x_exact,
                               const DenseVector& e0, std::size_t m) {
  if (e0.size() != s.size() || x_exact.size() != s.size()) {
    throw DimensionMismatch("error_propagation_check: vector length");
  }
  DenseVector x = x_exact - e0;
  DenseVector powered = e0;
  for (std::size_t k = 0; k < m; ++k) {
    x = jacobi_step(s, x);
    powered = mat_vec(s.m, powered);
  }
  return norm2((x_exact - x) - powered);
}

}  // namespace gencheb
