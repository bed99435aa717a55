#include "gencheb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gencheb {

namespace {

bool finite(const Scalar& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

Scalar checked_scalar(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InvalidArgument("non-finite scalar component");
  }
  return {re, im};
}

// ---------------------------------------------------------------------------
// DenseVector

DenseVector::DenseVector(std::size_t n, Scalar fill) : data_(n, fill) {}

DenseVector::DenseVector(std::vector<Scalar> entries) : data_(std::move(entries)) {
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw InvalidArgument("vector entries must be finite");
  }
}

DenseVector::DenseVector(std::initializer_list<double> entries) {
  data_.reserve(entries.size());
  for (double x : entries) data_.push_back(checked_scalar(x));
}

DenseVector DenseVector::from_real(std::span<const double> values) {
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (double x : values) out.push_back(checked_scalar(x));
  return DenseVector(std::move(out));
}

bool DenseVector::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& z) { return z.imag() == 0.0; });
}

DenseVector DenseVector::conj() const {
  DenseVector out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

DenseVector& DenseVector::operator+=(const DenseVector& rhs) {
  require_same_size(size(), rhs.size(), "vector addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

DenseVector& DenseVector::operator-=(const DenseVector& rhs) {
  require_same_size(size(), rhs.size(), "vector subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

DenseVector& DenseVector::operator*=(Scalar s) {
  for (auto& z : data_) z *= s;
  return *this;
}

DenseVector operator+(DenseVector lhs, const DenseVector& rhs) { return lhs += rhs; }
DenseVector operator-(DenseVector lhs, const DenseVector& rhs) { return lhs -= rhs; }
DenseVector operator*(Scalar s, DenseVector v) { return v *= s; }

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be >= 1");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be >= 1");
  require_same_size(data_.size(), rows * cols, "matrix entry count");
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw InvalidArgument("matrix entries must be finite");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    require_same_size(row.size(), c, "ragged row");
    for (double x : row) entries.push_back(checked_scalar(x));
  }
  return DenseMatrix(r, c, std::move(entries));
}

DenseMatrix DenseMatrix::diagonal(const DenseVector& d) {
  DenseMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

DenseVector DenseMatrix::column(std::size_t j) const {
  DenseVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void DenseMatrix::set_column(std::size_t j, const DenseVector& v) {
  require_same_size(v.size(), rows_, "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool DenseMatrix::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& z) { return z.imag() == 0.0; });
}

DenseMatrix DenseMatrix::conj() const {
  DenseMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::real_part() const {
  DenseMatrix out(*this);
  for (auto& z : out.data_) z = z.real();
  return out;
}

DenseMatrix DenseMatrix::imag_part() const {
  DenseMatrix out(*this);
  for (auto& z : out.data_) z = z.imag();
  return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Scalar s) {
  for (auto& z : data_) z *= s;
  return *this;
}

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
DenseMatrix operator*(Scalar s, DenseMatrix a) { return a *= s; }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == Scalar{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& v) {
  require_same_size(a.cols(), v.size(), "mat_vec");
  DenseVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

DenseMatrix mat_pow(const DenseMatrix& a, std::size_t k) {
  if (!a.is_square()) throw DimensionMismatch("mat_pow needs a square matrix");
  DenseMatrix out = DenseMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

DenseMatrix block_matrix(const std::vector<std::vector<DenseMatrix>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw InvalidArgument("empty block layout");
  const std::size_t br = blocks.size();
  const std::size_t bc = blocks.front().size();
  std::vector<std::size_t> row_off(br + 1, 0), col_off(bc + 1, 0);
  for (std::size_t i = 0; i < br; ++i) {
    require_same_size(blocks[i].size(), bc, "block row width");
    row_off[i + 1] = row_off[i] + blocks[i][0].rows();
  }
  for (std::size_t j = 0; j < bc; ++j) col_off[j + 1] = col_off[j] + blocks[0][j].cols();

  DenseMatrix out(row_off[br], col_off[bc]);
  for (std::size_t bi = 0; bi < br; ++bi)
    for (std::size_t bj = 0; bj < bc; ++bj) {
      const DenseMatrix& b = blocks[bi][bj];
      require_same_size(b.rows(), row_off[bi + 1] - row_off[bi], "block height");
      require_same_size(b.cols(), col_off[bj + 1] - col_off[bj], "block width");
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(row_off[bi] + i, col_off[bj] + j) = b(i, j);
    }
  return out;
}

double norm2(const DenseVector& v) {
  // Scaled sum of squares so tiny and huge entries neither underflow nor overflow.
  double scale = 0.0;
  for (const auto& z : v) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& z : v) sum += std::norm(z / scale);
  return scale * std::sqrt(sum);
}

double norm_inf(const DenseVector& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double frobenius_norm(const DenseMatrix& a) {
  double scale = max_abs(a);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z / scale);
  return scale * std::sqrt(sum);
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

// ---------------------------------------------------------------------------
// LU

DenseMatrix LuFactors::lower() const {
  const std::size_t n = lu.rows();
  DenseMatrix l = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = lu(i, j);
  return l;
}

DenseMatrix LuFactors::upper() const {
  const std::size_t n = lu.rows();
  DenseMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) u(i, j) = lu(i, j);
  return u;
}

LuFactors lu_factor(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("lu_factor needs a square matrix");
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), 1};
  std::iota(f.permutation.begin(), f.permutation.end(), std::size_t{0});
  DenseMatrix& lu = f.lu;

  const double threshold = kSingularPivotTolerance * max_abs(a);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mag = std::abs(lu(i, k));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (best <= threshold || best == 0.0) {
      throw SingularMatrix("pivot " + std::to_string(k) + " below tolerance");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(f.permutation[k], f.permutation[p]);
      f.sign = -f.sign;
    }
    const Scalar pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar l = lu(i, k) / pivot;
      lu(i, k) = l;
      if (l == Scalar{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return f;
}

DenseVector lu_solve(const LuFactors& f, const DenseVector& b) {
  const std::size_t n = f.lu.rows();
  require_same_size(b.size(), n, "lu_solve");
  DenseVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.permutation[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= f.lu(ii, j) * x[j];
    x[ii] /= f.lu(ii, ii);
  }
  return x;
}

DenseMatrix inverse(const DenseMatrix& a) {
  const LuFactors f = lu_factor(a);
  const std::size_t n = a.rows();
  DenseMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    DenseVector e(n);
    e[j] = 1.0;
    out.set_column(j, lu_solve(f, e));
  }
  return out;
}

}  // namespace gencheb
