#pragma once

// Dense complex-capable matrices and vectors. Real data keeps exact zero
// imaginary parts, so a real computation routed through here gives the same
// bits a real-only implementation would.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gencheb/errors.hpp"

namespace gencheb {

using Scalar = std::complex<double>;

/// Rejects NaN/Inf components.
Scalar checked_scalar(double re, double im = 0.0);

class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n, Scalar fill = 0.0);
  /// Validates that every entry is finite.
  explicit DenseVector(std::vector<Scalar> entries);
  DenseVector(std::initializer_list<double> entries);

  static DenseVector from_real(std::span<const double> values);
  static DenseVector ones(std::size_t n) { return DenseVector(n, 1.0); }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Scalar& operator[](std::size_t i) { return data_[i]; }
  const Scalar& operator[](std::size_t i) const { return data_[i]; }

  std::span<const Scalar> entries() const noexcept { return data_; }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  bool is_real() const noexcept;
  DenseVector conj() const;

  DenseVector& operator+=(const DenseVector& rhs);
  DenseVector& operator-=(const DenseVector& rhs);
  DenseVector& operator*=(Scalar s);

 private:
  std::vector<Scalar> data_;
};

DenseVector operator+(DenseVector lhs, const DenseVector& rhs);
DenseVector operator-(DenseVector lhs, const DenseVector& rhs);
DenseVector operator*(Scalar s, DenseVector v);

class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero-filled rows x cols matrix; both dimensions must be at least 1.
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; validates size and finiteness.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix diagonal(const DenseVector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> entries() const noexcept { return data_; }

  DenseVector column(std::size_t j) const;
  void set_column(std::size_t j, const DenseVector& v);

  bool is_real() const noexcept;
  DenseMatrix conj() const;
  DenseMatrix transpose() const;
  DenseMatrix real_part() const;
  DenseMatrix imag_part() const;

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(Scalar s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator*(Scalar s, DenseMatrix a);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& v);

/// A^k by repeated multiplication (k is small in every caller).
DenseMatrix mat_pow(const DenseMatrix& a, std::size_t k);

/// Assembles a block matrix; every block in a block-row must share a row
/// count and every block in a block-column a column count.
DenseMatrix block_matrix(const std::vector<std::vector<DenseMatrix>>& blocks);

double norm2(const DenseVector& v);
double norm_inf(const DenseVector& v);
double frobenius_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);

/// Partial-pivoted LU, P·A = L·U. `lu` stores L strictly below the diagonal
/// (unit diagonal implied) and U on and above it; `permutation[i]` is the row
/// of A that ended up in row i.
struct LuFactors {
  DenseMatrix lu;
  std::vector<std::size_t> permutation;
  int sign = 1;

  DenseMatrix lower() const;
  DenseMatrix upper() const;
};

/// Relative pivot threshold below which a matrix counts as singular.
inline constexpr double kSingularPivotTolerance = 1e-13;

LuFactors lu_factor(const DenseMatrix& a);
DenseVector lu_solve(const LuFactors& f, const DenseVector& b);
DenseMatrix inverse(const DenseMatrix& a);

}  // namespace gencheb
