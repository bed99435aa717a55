#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "gencheb/eigensolver.hpp"
#include "gencheb/jacobi.hpp"
#include "gencheb/reference_systems.hpp"
#include "support.hpp"

using namespace gencheb;
using gencheb::test::dist;
using gencheb::test::same_multiset;

namespace {

DenseMatrix iteration_matrix(const reference::System& s) { return jacobi_split(s.a, s.b).m; }

const std::vector<Scalar> kSpectrum1{-0.5, 0.25, 1.0 / 6, 1.0 / 12};
const std::vector<Scalar> kSpectrum2{-0.5, 0.1, {0.2, 1.0 / 3}, {0.2, -1.0 / 3}};

bool upper_hessenberg(const DenseMatrix& h) {
  for (std::size_t i = 2; i < h.rows(); ++i)
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (h(i, j) != Scalar(0.0)) return false;
  return true;
}

std::vector<Scalar> eigen_oracle(const DenseMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).real();
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// det(λI − A) = λ^n + c[n−1] λ^{n−1} + ... + c[0].
std::vector<Scalar> char_poly(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1.0;
  DenseMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * DenseMatrix::identity(n);
    Scalar tr = 0.0;
    const DenseMatrix amk = a * mk;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

std::vector<Scalar> poly_from_roots(std::span<const Scalar> roots) {
  std::vector<Scalar> p{1.0};  // ascending powers
  for (const auto& r : roots) {
    std::vector<Scalar> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace

TEST_CASE("hessenberg") {
  SUBCASE("upper triangular input is unchanged") {
    const DenseMatrix a = DenseMatrix::from_rows({{1, 2, 3}, {0, 4, 5}, {0, 0, 6}});
    const HessenbergForm hf = hessenberg(a);
    CHECK(dist(hf.h, a) == 0.0);
    CHECK(dist(hf.q, DenseMatrix::identity(3)) == 0.0);
  }
  SUBCASE("1x1") {
    const DenseMatrix a = DenseMatrix::from_rows({{7}});
    CHECK(hessenberg(a).h(0, 0) == Scalar(7.0));
  }
  SUBCASE("similarity on the first reference iteration matrix") {
    const DenseMatrix m = iteration_matrix(reference::system1());
    const HessenbergForm hf = hessenberg(m);
    CHECK(upper_hessenberg(hf.h));
    CHECK(dist(hf.q.transpose() * hf.q, DenseMatrix::identity(4)) < 1e-13);
    CHECK(dist(hf.q.transpose() * m * hf.q, hf.h) <= 1e-12 * frobenius_norm(m));
    CHECK(same_multiset(eigenvalues(hf.h), kSpectrum1, 1e-9));
  }
  SUBCASE("random 8x8") {
    std::mt19937_64 rng(21);
    const DenseMatrix a = test::random_matrix(rng, 8);
    const HessenbergForm hf = hessenberg(a);
    CHECK(upper_hessenberg(hf.h));
    CHECK(dist(hf.q.transpose() * a * hf.q, hf.h) <= 1e-12 * frobenius_norm(a));
  }
  SUBCASE("non-square") { CHECK_THROWS_AS(hessenberg(DenseMatrix(2, 3)), DimensionMismatch); }
}

TEST_CASE("eigenvalues") {
  CHECK(same_multiset(eigenvalues(iteration_matrix(reference::system1())), kSpectrum1, 1e-9));
  CHECK(same_multiset(eigenvalues(iteration_matrix(reference::system2())), kSpectrum2, 1e-9));
  const std::vector<Scalar> ones(5, 1.0);
  CHECK(same_multiset(eigenvalues(DenseMatrix::identity(5)), ones, 1e-14));
  CHECK_THROWS_AS(eigenvalues(DenseMatrix(3, 2)), DimensionMismatch);
  CHECK_THROWS_AS(eigenvalues(Scalar(0, 1) * DenseMatrix::identity(2)), InvalidArgument);
}

TEST_CASE("eigenvalues agree with an independent solver on random matrices") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 1; n <= 20; ++n) {
    const DenseMatrix a = test::random_matrix(rng, n);
    CHECK(same_multiset(eigenvalues(a), eigen_oracle(a), 1e-8));
  }
}

TEST_CASE("eigenvalues_general on complex input") {
  // Upper triangular complex matrix: eigenvalues are the diagonal.
  DenseMatrix a(3, 3);
  a(0, 0) = {1, 2};
  a(1, 1) = {-0.5, 0.25};
  a(2, 2) = 3.0;
  a(0, 1) = 4.0;
  a(1, 2) = {0, 1};
  std::mt19937_64 rng(23);
  const DenseMatrix q = test::random_orthogonal(rng, 3);
  const DenseMatrix b = q * a * q.transpose();
  const std::vector<Scalar> want{{1, 2}, {-0.5, 0.25}, 3.0};
  CHECK(same_multiset(eigenvalues_general(b), want, 1e-10));
}

TEST_CASE("similarity invariance") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 20; ++k) {
    const DenseMatrix a = test::random_matrix(rng, 6);
    const DenseMatrix q = test::random_orthogonal(rng, 6);
    CHECK(same_multiset(eigenvalues(q.transpose() * a * q), eigenvalues(a), 1e-8));
  }
}

TEST_CASE("conjugate closure of real spectra") {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 20; ++k) {
    const std::vector<Scalar> ev = eigenvalues(test::random_matrix(rng, 7));
    std::vector<Scalar> conj_ev;
    for (const auto& z : ev) conj_ev.push_back(std::conj(z));
    CHECK(same_multiset(ev, conj_ev, 1e-10));
  }
}

TEST_CASE("characteristic polynomial matches the expansion for n <= 4") {
  std::mt19937_64 rng(26);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int k = 0; k < 10; ++k) {
      const DenseMatrix a = test::random_matrix(rng, n);
      const auto want = char_poly(a);
      const auto got = poly_from_roots(eigenvalues(a));
      for (std::size_t i = 0; i <= n; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-8);
    }
  }
}

TEST_CASE("eigenpairs") {
  SUBCASE("diagonal matrix gives the standard basis") {
    const Spectrum s = eigenpairs(DenseMatrix::diagonal(DenseVector{2, 3, 5}));
    for (std::size_t j = 0; j < 3; ++j) {
      const double v = s.values[j].real();
      const std::size_t k = v < 2.5 ? 0 : v < 4.0 ? 1 : 2;
      DenseVector e(3);
      e[k] = 1.0;
      CHECK(dist(s.vectors.column(j), e) < 1e-12);
    }
  }
  SUBCASE("second reference matrix: conjugate eigenvectors") {
    const DenseMatrix m = iteration_matrix(reference::system2());
    const Spectrum s = eigenpairs(m);
    CHECK(same_multiset(s.values, kSpectrum2, 1e-9));
    std::size_t pairs = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!s.conjugate_of[j]) {
        CHECK(s.values[j].imag() == 0.0);
        continue;
      }
      const std::size_t k = *s.conjugate_of[j];
      CHECK(s.conjugate_of[k] == j);
      CHECK(std::abs(s.values[k] - std::conj(s.values[j])) < 1e-12);
      CHECK(dist(s.vectors.column(k), s.vectors.column(j).conj()) <= 1e-10);
      ++pairs;
    }
    CHECK(pairs == 2);
  }
  SUBCASE("first reference matrix: real unit eigenvectors, invertible basis") {
    const DenseMatrix m = iteration_matrix(reference::system1());
    const Spectrum s = eigenpairs(m);
    CHECK(s.vectors.is_real());
    CHECK_NOTHROW(lu_factor(s.basis()));
  }
  SUBCASE("repeated eigenvalues are rejected") {
    CHECK_THROWS_AS(eigenpairs(DenseMatrix::identity(3)), RepeatedEigenvalue);
  }
}

TEST_CASE("eigenpair invariants on random matrices") {
  std::mt19937_64 rng(27);
  for (std::size_t n = 2; n <= 10; ++n) {
    const DenseMatrix a = test::random_matrix(rng, n);
    const Spectrum s = eigenpairs(a);
    for (std::size_t j = 0; j < n; ++j) {
      const DenseVector v = s.vectors.column(j);
      CHECK(norm2(mat_vec(a, v) - s.values[j] * v) <= 1e-8 * frobenius_norm(a));
      CHECK(norm2(v) == doctest::Approx(1.0).epsilon(1e-12));
      std::size_t big = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[big]) + 1e-12) big = i;
      CHECK(v[big].imag() == 0.0);
      CHECK(v[big].real() > 0.0);
      if (s.conjugate_of[j]) {
        CHECK(dist(s.vectors.column(*s.conjugate_of[j]), v.conj()) <= 1e-10);
      }
    }
  }
}

TEST_CASE("dominant_eigenvalue") {
  const Scalar l1 = dominant_eigenvalue(eigenpairs(iteration_matrix(reference::system1())));
  CHECK(std::abs(l1 - Scalar(-0.5)) < 1e-12);
  const Scalar l2 = dominant_eigenvalue(eigenpairs(iteration_matrix(reference::system2())));
  CHECK(std::abs(l2 - Scalar(-0.5)) < 1e-12);
  const std::vector<Scalar> tie{{0.3, -0.4}, {0.3, 0.4}, 0.1};
  CHECK(dominant_eigenvalue(tie) == Scalar(0.3, 0.4));
  const std::vector<Scalar> real_wins{{0.3, 0.4}, {0.3, -0.4}, -0.5};
  CHECK(dominant_eigenvalue(real_wins) == Scalar(-0.5));
  const std::vector<Scalar> larger_re{-0.5, 0.5};
  CHECK(dominant_eigenvalue(larger_re) == Scalar(0.5));
  const std::vector<Scalar> zeros{0.0, 1e-16};
  CHECK_THROWS_AS(dominant_eigenvalue(zeros), ZeroSpectrum);
}

TEST_CASE("coordinates") {
  const DenseMatrix m = iteration_matrix(reference::system1());
  const Spectrum s = eigenpairs(m);
  SUBCASE("basis column") {
    for (std::size_t j = 0; j < 4; ++j) {
      DenseVector e(4);
      e[j] = 1.0;
      CHECK(dist(coordinates(s, s.vectors.column(j)).alphas, e) < 1e-12);
    }
  }
  SUBCASE("zero") { CHECK(norm2(coordinates(s, DenseVector(4)).alphas) == 0.0); }
  SUBCASE("modal expansion matches direct powering") {
    const DenseVector e0 = DenseVector::ones(4);
    const DenseVector alphas = coordinates(s, e0).alphas;
    CHECK(dist(mat_vec(s.basis(), alphas), e0) < 1e-9);
    for (std::size_t p = 1; p <= 5; ++p) {
      DenseVector modal(4);
      for (std::size_t j = 0; j < 4; ++j)
        modal += (alphas[j] * std::pow(s.values[j], static_cast<int>(p))) * s.vectors.column(j);
      CHECK(dist(modal, mat_vec(mat_pow(m, p), e0)) < 1e-9);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(coordinates(s, DenseVector(3)), DimensionMismatch);
  }
}
