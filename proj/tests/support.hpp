#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gencheb/linalg.hpp"

namespace gencheb::test {

inline double dist(const DenseVector& x, const DenseVector& y) { return norm2(x - y); }

inline double dist(const DenseMatrix& a, const DenseMatrix& b) { return frobenius_norm(a - b); }

// Greedy multiset match: every expected value has a distinct computed partner
// within tol.
inline bool same_multiset(std::span<const Scalar> got, std::span<const Scalar> want, double tol) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const auto& w : want) {
    bool found = false;
    for (std::size_t i = 0; i < got.size() && !found; ++i) {
      if (!used[i] && std::abs(got[i] - w) <= tol) {
        used[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double diag_boost = 0.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng) + (i == j ? diag_boost : 0.0);
  return a;
}

inline DenseVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

// Orthogonal matrix from Gram-Schmidt on a random square matrix.
inline DenseMatrix random_orthogonal(std::mt19937_64& rng, std::size_t n) {
  DenseMatrix a = random_matrix(rng, n);
  DenseMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    DenseVector v = a.column(j);
    for (std::size_t k = 0; k < j; ++k) {
      const DenseVector e = q.column(k);
      Scalar dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(e[i]) * v[i];
      v -= dot * e;
    }
    v *= 1.0 / norm2(v);
    q.set_column(j, v);
  }
  return q;
}

}  // namespace gencheb::test
