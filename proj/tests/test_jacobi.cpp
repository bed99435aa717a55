#include <doctest.h>

#include <cmath>
#include <random>

#include "gencheb/analysis.hpp"
#include "gencheb/jacobi.hpp"
#include "gencheb/reference_systems.hpp"
#include "support.hpp"

using namespace gencheb;
constexpr double kTable = reference::kTableTolerance;
using gencheb::test::dist;

TEST_CASE("jacobi_split on the reference systems") {
  SUBCASE("first system") {
    const auto sys = reference::system1();
    const JacobiSplit s = jacobi_split(sys.a, sys.b);
    CHECK(s.m(1, 0) == Scalar(-1.0));
    CHECK(std::abs(s.m(0, 3) - Scalar(-1.0 / 576)) < 1e-17);
    CHECK(dist(s.g, DenseVector{577.0 / 576, 293.0 / 144, 313.0 / 144, 2.0}) < 1e-15);
  }
  SUBCASE("second system") {
    const auto sys = reference::system2();
    const JacobiSplit s = jacobi_split(sys.a, sys.b);
    CHECK(dist(s.g, DenseVector{2267.0 / 2250, 4681.0 / 2250, 1853.0 / 900, 2.0}) < 1e-15);
  }
  SUBCASE("identity") {
    const DenseVector b{1, -2, 3};
    const JacobiSplit s = jacobi_split(DenseMatrix::identity(3), b);
    CHECK(frobenius_norm(s.m) == 0.0);
    CHECK(dist(s.g, b) == 0.0);
  }
}

TEST_CASE("jacobi_split reconstructs the splitting") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 8; ++n) {
    const DenseMatrix a = test::random_matrix(rng, n, 3.0);
    const DenseVector b = test::random_vector(rng, n);
    const JacobiSplit s = jacobi_split(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.m(i, i) == Scalar(0.0));
      CHECK(std::abs(a(i, i) * s.g[i] - b[i]) <= 1e-12);
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(std::abs(-a(i, i) * s.m(i, j) - a(i, j)) <= 1e-12);
    }
  }
}

TEST_CASE("jacobi_split errors") {
  const DenseMatrix a = DenseMatrix::from_rows({{1, 2, 0}, {3, 0, 1}, {0, 1, 4}});
  try {
    jacobi_split(a, DenseVector{1, 1, 1});
    FAIL("expected ZeroDiagonal");
  } catch (const ZeroDiagonal& e) {
    CHECK(e.row() == 1);
  }
  CHECK_THROWS_AS(jacobi_split(DenseMatrix(2, 3), DenseVector{1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(jacobi_split(DenseMatrix::identity(3), DenseVector{1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(jacobi_split(Scalar(0, 1) * DenseMatrix::identity(2), DenseVector{1, 1}),
                  InvalidArgument);
}

TEST_CASE("jacobi_iterate reproduces the reference traces") {
  SUBCASE("first system") {
    const auto sys = reference::system1();
    const IterationTrace t =
        jacobi_iterate(jacobi_split(sys.a, sys.b), DenseVector(4), 8, sys.solution);
    REQUIRE(t.size() == 9);
    const DenseVector x1{1.001, 2.034, 2.173, 2.000};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(t.iterates[1][i] - x1[i]) <= kTable);
    CHECK(std::abs(t.error_norms[4] - 0.351) <= kTable);
    CHECK(t.coefficients.empty());
  }
  SUBCASE("second system error sequence") {
    const auto sys = reference::system2();
    const IterationTrace t =
        jacobi_iterate(jacobi_split(sys.a, sys.b), DenseVector(4), 8, sys.solution);
    const double want[] = {2.000, 1.813, 1.557, 1.152, 0.241, 0.194, 0.113, 0.037, 0.023};
    for (std::size_t m = 0; m <= 8; ++m) CHECK(std::abs(t.error_norms[m] - want[m]) <= kTable);
  }
}

TEST_CASE("jacobi_iterate trace invariants") {
  const auto sys = reference::system1();
  const JacobiSplit s = jacobi_split(sys.a, sys.b);
  const IterationTrace t = jacobi_iterate(s, DenseVector{0.5, -1, 2, 0}, 12, sys.solution);
  CHECK(t.residual_norms.size() == t.size());
  CHECK(t.error_norms.size() == t.size());
  for (std::size_t m = 1; m < t.size(); ++m) {
    CHECK(dist(t.iterates[m], mat_vec(s.m, t.iterates[m - 1]) + s.g) < 1e-14);
    CHECK(t.error_norms[m] == doctest::Approx(norm2(sys.solution - t.iterates[m])));
    const DenseVector r = sys.b - mat_vec(sys.a, t.iterates[m]);
    CHECK(t.residual_norms[m] == doctest::Approx(norm_inf(r) / norm_inf(sys.b)));
  }
  const IterationTrace no_exact = jacobi_iterate(s, DenseVector(4), 3);
  CHECK_FALSE(no_exact.has_errors());
  CHECK_THROWS_AS(jacobi_iterate(s, DenseVector(3), 3), DimensionMismatch);
}

TEST_CASE("fixed point is preserved") {
  for (const auto& sys : {reference::system1(), reference::system2()}) {
    const IterationTrace t =
        jacobi_iterate(jacobi_split(sys.a, sys.b), sys.solution, 30, sys.solution);
    for (const auto& e : t.error_norms) CHECK(e <= 1e-12);
  }
}

TEST_CASE("stop rule ends the run at the residual tolerance") {
  const auto sys = reference::system2();
  const IterationTrace t =
      jacobi_iterate(jacobi_split(sys.a, sys.b), DenseVector(4), 500, std::nullopt, {1e-10});
  CHECK(t.size() < 501);
  CHECK(t.residual_norms.back() <= 1e-10);
  CHECK(t.residual_norms[t.size() - 2] > 1e-10);
}

TEST_CASE("error_propagation_check") {
  const auto sys = reference::system1();
  const JacobiSplit s = jacobi_split(sys.a, sys.b);
  CHECK(error_propagation_check(s, sys.solution, DenseVector(4), 7) == 0.0);
  CHECK(error_propagation_check(s, sys.solution, DenseVector::ones(4), 8) <= 1e-10);
  std::mt19937_64 rng(32);
  for (int k = 0; k < 20; ++k) {
    DenseVector e0 = test::random_vector(rng, 4);
    e0 *= 1.0 / norm2(e0);
    CHECK(error_propagation_check(s, sys.solution, e0, 1) <= 1e-14);
    CHECK(error_propagation_check(s, sys.solution, e0, 30) <= 1e-10);
  }
}

TEST_CASE("error is linear in the initial error") {
  const auto sys = reference::system2();
  const JacobiSplit s = jacobi_split(sys.a, sys.b);
  const DenseVector e0{0.3, -0.2, 0.7, 0.1};
  const double c = 2.5;
  const IterationTrace t1 = jacobi_iterate(s, sys.solution - e0, 15, sys.solution);
  const IterationTrace t2 = jacobi_iterate(s, sys.solution - c * e0, 15, sys.solution);
  for (std::size_t m = 0; m < t1.size(); ++m) {
    const DenseVector d1 = sys.solution - t1.iterates[m];
    const DenseVector d2 = sys.solution - t2.iterates[m];
    CHECK(dist(d2, c * d1) <= 1e-12);
  }
}

TEST_CASE("asymptotic Jacobi rate approaches the spectral radius") {
  const auto sys = reference::system1();
  const IterationTrace t =
      jacobi_iterate(jacobi_split(sys.a, sys.b), DenseVector(4), 20, sys.solution);
  CHECK(std::abs(empirical_rate(t, 4, 20) - 0.5) <= 0.05);
}
