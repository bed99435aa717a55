#include "gencheb/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gencheb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Square row-major real work array.
struct RealSquare {
  std::size_t n;
  std::vector<double> a;

  explicit RealSquare(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

RealSquare to_real(const DenseMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("eigen solver needs a square matrix");
  if (!m.is_real()) throw InvalidArgument("eigen solver expects a real matrix");
  RealSquare r(m.rows());
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j) r(i, j) = m(i, j).real();
  return r;
}

DenseMatrix from_real(const RealSquare& r) {
  DenseMatrix m(r.n, r.n);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j) m(i, j) = r(i, j);
  return m;
}

double sign_of(double magnitude, double reference) {
  return reference >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Householder reduction in place; accumulates the orthogonal factor into q
// when given.
void reduce_to_hessenberg(RealSquare& h, RealSquare* q) {
  const std::size_t n = h.n;
  if (q) {
    std::fill(q->a.begin(), q->a.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) (*q)(i, i) = 1.0;
  }
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale = std::max(scale, std::abs(h(i, k)));
    if (scale == 0.0) continue;

    double sigma = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = h(i, k) / scale;
      sigma += v[i] * v[i];
    }
    const double alpha = -sign_of(std::sqrt(sigma), v[k + 1]);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // H <- (I - beta v v^T) H
    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += v[i] * h(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
    }
    // H <- H (I - beta v v^T)
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * v[j];
    }
    if (q) {
      for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) dot += (*q)(i, j) * v[j];
        dot *= beta;
        for (std::size_t j = k + 1; j < n; ++j) (*q)(i, j) -= dot * v[j];
      }
    }
    h(k + 1, k) = alpha * scale;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix (eigenvalues only).
// Follows the classic EISPACK hqr structure, with the deflation rule and
// sweep budget pinned to kDeflationTolerance / kSweepsPerDimension.
std::vector<Scalar> francis_qr(RealSquare a) {
  const int n = static_cast<int>(a.n);
  std::vector<Scalar> wr(a.n);
  const int max_sweeps = static_cast<int>(kSweepsPerDimension * a.n);

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l > 0; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= kDeflationTolerance * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wr[nn--] = x + t;
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
          } else {
            wr[nn] = Scalar(x + p, -z);
            wr[nn - 1] = std::conj(wr[nn]);
          }
          nn -= 2;
        } else {
          if (its >= max_sweeps) {
            throw NoConvergence("Francis QR: no deflation after " + std::to_string(its) +
                                " sweeps");
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift.
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            double s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u <= kEps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            a(i + 2, i) = 0.0;
            if (i != m) a(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k + 1 != nn) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k + 1 != nn) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
  return wr;
}

// Complex Householder reduction to Hessenberg form (no accumulation).
void reduce_to_hessenberg(DenseMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<Scalar> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale = std::max(scale, std::abs(h(i, k)));
    if (scale == 0.0) continue;
    double sigma = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = h(i, k) / scale;
      sigma += std::norm(v[i]);
    }
    const double xnorm = std::sqrt(sigma);
    const Scalar lead = v[k + 1];
    const Scalar phase = std::abs(lead) == 0.0 ? Scalar(1.0) : lead / std::abs(lead);
    const Scalar alpha = -phase * xnorm;
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    for (std::size_t j = k; j < n; ++j) {
      Scalar dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      dot *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      Scalar dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
      dot *= beta;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
    }
    h(k + 1, k) = alpha * scale;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Single-shift QR with Wilkinson shifts on a complex Hessenberg matrix.
std::vector<Scalar> complex_qr(DenseMatrix h) {
  const std::size_t n = h.rows();
  std::vector<Scalar> out(n);
  const std::size_t max_sweeps = kSweepsPerDimension * n;
  double anorm = 0.0;
  for (const auto& z : h.entries()) anorm += std::abs(z);

  std::vector<double> cs(n);
  std::vector<Scalar> sn(n);
  std::size_t its = 0;
  std::size_t hi = n - 1;
  for (;;) {
    if (hi == 0) {
      out[0] = h(0, 0);
      break;
    }
    std::size_t l = hi;
    for (; l > 0; --l) {
      double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (s == 0.0) s = anorm;
      if (std::abs(h(l, l - 1)) <= kDeflationTolerance * s) {
        h(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      out[hi] = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (its >= max_sweeps) {
      throw NoConvergence("complex QR: no deflation after " + std::to_string(its) + " sweeps");
    }
    ++its;

    Scalar shift;
    if (its % 10 == 0) {
      shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      const Scalar a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const Scalar half = 0.5 * (a - d);
      const Scalar disc = std::sqrt(half * half + b * c);
      const Scalar mid = 0.5 * (a + d);
      const Scalar mu1 = mid + disc, mu2 = mid - disc;
      shift = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    }

    for (std::size_t k = l; k <= hi; ++k) h(k, k) -= shift;
    for (std::size_t k = l; k < hi; ++k) {
      const Scalar x = h(k, k), y = h(k + 1, k);
      const double ax = std::abs(x);
      const double r = std::hypot(ax, std::abs(y));
      double c;
      Scalar s;
      if (r == 0.0) {
        c = 1.0;
        s = 0.0;
      } else if (ax == 0.0) {
        c = 0.0;
        s = 1.0;
      } else {
        c = ax / r;
        s = (x / ax) * std::conj(y) / r;
      }
      cs[k] = c;
      sn[k] = s;
      for (std::size_t j = k; j <= hi; ++j) {
        const Scalar top = h(k, j), bot = h(k + 1, j);
        h(k, j) = c * top + s * bot;
        h(k + 1, j) = -std::conj(s) * top + c * bot;
      }
    }
    for (std::size_t k = l; k < hi; ++k) {
      const double c = cs[k];
      const Scalar s = sn[k];
      const std::size_t last = std::min(k + 1, hi);
      for (std::size_t i = l; i <= last; ++i) {
        const Scalar left = h(i, k), right = h(i, k + 1);
        h(i, k) = c * left + std::conj(s) * right;
        h(i, k + 1) = -s * left + c * right;
      }
    }
    for (std::size_t k = l; k <= hi; ++k) h(k, k) += shift;
  }
  return out;
}

// Solves (A - shift I) x = b by partial-pivoted LU, nudging tiny pivots to
// eps * norm so the nearly singular shifted system stays solvable. That is
// what makes inverse iteration work with the eigenvalue itself as shift.
class ShiftedSolver {
 public:
  ShiftedSolver(const DenseMatrix& a, Scalar shift) : lu_(a), perm_(a.rows()) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) lu_(i, i) -= shift;
    const double floor = kEps * std::max(frobenius_norm(a), 1e-300);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(perm_[k], perm_[p]);
      }
      if (std::abs(lu_(k, k)) < floor) lu_(k, k) = floor;
      for (std::size_t i = k + 1; i < n; ++i) {
        const Scalar m = lu_(i, k) / lu_(k, k);
        lu_(i, k) = m;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
      }
    }
  }

  DenseVector solve(const DenseVector& b) const {
    const std::size_t n = perm_.size();
    DenseVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
};

// Unit 2-norm, largest-magnitude component rotated onto the positive real axis.
DenseVector normalize_phase(DenseVector v) {
  std::size_t big = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[big])) big = i;
  const double len = norm2(v);
  const Scalar rotate = std::conj(v[big]) / (std::abs(v[big]) * len);
  v *= rotate;
  v[big] = std::abs(v[big]);
  return v;
}

DenseVector inverse_iteration(const DenseMatrix& a, Scalar lambda, double scale) {
  const std::size_t n = a.rows();
  const ShiftedSolver solver(a, lambda);
  DenseVector v(n);
  // Deterministic start with no special alignment to any eigenvector.
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.3183098861837907 * static_cast<double>(i + 1);
  v *= 1.0 / norm2(v);
  for (int iter = 0; iter < 8; ++iter) {
    v = solver.solve(v);
    v *= 1.0 / norm2(v);
    const DenseVector r = mat_vec(a, v) - lambda * v;
    if (iter >= 1 && norm2(r) <= 1e-12 * scale) break;
  }
  return normalize_phase(std::move(v));
}

}  // namespace

HessenbergForm hessenberg(const DenseMatrix& a) {
  RealSquare h = to_real(a);
  RealSquare q(h.n);
  reduce_to_hessenberg(h, &q);
  return {from_real(h), from_real(q)};
}

std::vector<Scalar> eigenvalues(const DenseMatrix& a) {
  RealSquare h = to_real(a);
  reduce_to_hessenberg(h, nullptr);
  return francis_qr(std::move(h));
}

std::vector<Scalar> eigenvalues_general(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("eigen solver needs a square matrix");
  if (a.is_real()) return eigenvalues(a);
  DenseMatrix h(a);
  reduce_to_hessenberg(h);
  return complex_qr(std::move(h));
}

double spectral_radius(std::span<const Scalar> values) {
  double r = 0.0;
  for (const auto& z : values) r = std::max(r, std::abs(z));
  return r;
}

double spectral_radius(const DenseMatrix& a) {
  const auto values = eigenvalues_general(a);
  return spectral_radius(values);
}

Spectrum eigenpairs(const DenseMatrix& a) {
  std::vector<Scalar> values = eigenvalues(a);
  const std::size_t n = values.size();
  const double scale = frobenius_norm(a);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(std::abs(values[i] - values[j]) > 1e-8 * scale)) {
        throw RepeatedEigenvalue("eigenvalues " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are not distinct");
      }

  std::vector<std::optional<std::size_t>> partner(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (values[j].imag() == 0.0 || partner[j]) continue;
    std::size_t best = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || partner[k] || values[k].imag() == 0.0) continue;
      const Scalar target = std::conj(values[j]);
      if (best == n || std::abs(values[k] - target) < std::abs(values[best] - target)) best = k;
    }
    if (best == n) throw NonRealResult("complex eigenvalue without a conjugate partner");
    partner[j] = best;
    partner[best] = j;
  }

  DenseMatrix vectors(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (partner[j] && values[j].imag() < 0.0) continue;  // filled from its partner
    DenseVector v = inverse_iteration(a, values[j], scale);
    if (!partner[j]) {
      for (std::size_t i = 0; i < n; ++i) v[i] = v[i].real();
      v *= 1.0 / norm2(v);
    }
    const double residual = norm2(mat_vec(a, v) - values[j] * v);
    if (residual > 1e-8 * scale) {
      throw NoConvergence("inverse iteration residual " + std::to_string(residual) +
                          " for eigenvalue " + std::to_string(j));
    }
    vectors.set_column(j, v);
    if (partner[j]) {
      const std::size_t k = *partner[j];
      values[k] = std::conj(values[j]);
      vectors.set_column(k, v.conj());
    }
  }
  return {std::move(values), std::move(vectors), std::move(partner)};
}

Scalar dominant_eigenvalue(std::span<const Scalar> values) {
  const double rho = spectral_radius(values);
  if (values.empty() || rho < 1e-14) throw ZeroSpectrum("spectral radius is zero");
  const double cutoff = rho * (1.0 - 1e-12);
  std::optional<Scalar> best;
  auto better = [](const Scalar& c, const Scalar& b) {
    const bool c_real = c.imag() == 0.0, b_real = b.imag() == 0.0;
    if (c_real != b_real) return c_real;
    if (c.real() != b.real()) return c.real() > b.real();
    return c.imag() > b.imag();
  };
  for (const auto& z : values) {
    if (std::abs(z) < cutoff) continue;
    if (!best || better(z, *best)) best = z;
  }
  return *best;
}

Scalar dominant_eigenvalue(const Spectrum& s) { return dominant_eigenvalue(s.values); }

ErrorCoordinates coordinates(const Spectrum& s, const DenseVector& v) {
  if (v.size() != s.size()) throw DimensionMismatch("coordinates: vector length");
  return {lu_solve(lu_factor(s.vectors), v)};
}

}  // namespace gencheb
