#include <doctest.h>

#include <cmath>
#include <random>

#include "gencheb/linalg.hpp"
#include "gencheb/reference_systems.hpp"
#include "support.hpp"

using namespace gencheb;
using gencheb::test::dist;

namespace {

// Jacobi iteration matrix of the first reference system, written out by hand.
DenseMatrix example1_m() {
  return DenseMatrix::from_rows({{0, 0, 0, -1.0 / 576},
                                 {-1, 0, 0, -5.0 / 144},
                                 {0, -1, 0, -25.0 / 144},
                                 {0, 0, -1, 0}});
}

}  // namespace

TEST_CASE("constructors reject non-finite entries and empty shapes") {
  CHECK_THROWS_AS(checked_scalar(std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(checked_scalar(1.0, INFINITY), InvalidArgument);
  CHECK_THROWS_AS(DenseVector({1.0, std::nan("")}), InvalidArgument);
  CHECK_THROWS_AS(DenseMatrix(0, 3), InvalidArgument);
  CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST_CASE("mat_vec") {
  SUBCASE("identity") {
    CHECK(dist(mat_vec(DenseMatrix::identity(3), DenseVector{1, 2, 3}), DenseVector{1, 2, 3}) ==
          0.0);
  }
  SUBCASE("first reference iteration matrix times ones") {
    const DenseVector want{-1.0 / 576, -1.0 - 5.0 / 144, -1.0 - 25.0 / 144, -1.0};
    CHECK(dist(mat_vec(example1_m(), DenseVector::ones(4)), want) < 1e-15);
  }
  SUBCASE("zero matrix") {
    CHECK(norm2(mat_vec(DenseMatrix(3, 3), DenseVector{4, -5, 6})) == 0.0);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(mat_vec(DenseMatrix(3, 2), DenseVector{1, 2, 3}), DimensionMismatch);
  }
}

TEST_CASE("lu_factor") {
  SUBCASE("identity") {
    const LuFactors f = lu_factor(DenseMatrix::identity(4));
    CHECK(dist(f.lower(), DenseMatrix::identity(4)) == 0.0);
    CHECK(dist(f.upper(), DenseMatrix::identity(4)) == 0.0);
    CHECK(f.permutation == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(f.sign == 1);
  }
  SUBCASE("pure permutation") {
    const LuFactors f = lu_factor(DenseMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(f.permutation == std::vector<std::size_t>{1, 0});
    CHECK(f.sign == -1);
  }
  SUBCASE("rank deficient") {
    CHECK_THROWS_AS(lu_factor(DenseMatrix::from_rows({{1, 1}, {1, 1}})), SingularMatrix);
  }
  SUBCASE("non-square") { CHECK_THROWS_AS(lu_factor(DenseMatrix(2, 3)), DimensionMismatch); }
  SUBCASE("P A = L U on a pivoting example") {
    const DenseMatrix a = DenseMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    const LuFactors f = lu_factor(a);
    DenseMatrix pa(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) pa(i, j) = a(f.permutation[i], j);
    CHECK(dist(pa, f.lower() * f.upper()) <= 1e-10 * frobenius_norm(a));
    CHECK(f.permutation[0] == 2);  // largest first-column pivot
  }
}

TEST_CASE("lu_solve") {
  SUBCASE("reference systems have solution (1,1,1,1)") {
    for (const auto& sys : {reference::system1(), reference::system2()}) {
      const DenseVector x = lu_solve(lu_factor(sys.a), sys.b);
      CHECK(dist(x, DenseVector::ones(4)) < 1e-12);
    }
  }
  SUBCASE("identity returns b") {
    const DenseVector b{3, -1, 2};
    CHECK(dist(lu_solve(lu_factor(DenseMatrix::identity(3)), b), b) == 0.0);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(lu_solve(lu_factor(DenseMatrix::identity(3)), DenseVector{1, 2}),
                    DimensionMismatch);
  }
}

TEST_CASE("norm2") {
  CHECK(norm2(DenseVector::ones(4)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(norm2(DenseVector(5)) == 0.0);
  CHECK(std::abs(norm2(DenseVector{-0.001, -1.034, -1.173, -1.000}) - 1.856) < 5e-4);
  // Scaled accumulation must not overflow.
  CHECK(norm2(DenseVector{3e200, 4e200}) == doctest::Approx(5e200));
}

TEST_CASE("lu round trip on random well-conditioned systems") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 16; ++n) {
    const DenseMatrix a = test::random_matrix(rng, n, static_cast<double>(n));
    const DenseVector x = test::random_vector(rng, n);
    const DenseVector back = lu_solve(lu_factor(a), mat_vec(a, x));
    CHECK(dist(back, x) <= 1e-9 * norm2(x));
  }
}

TEST_CASE("norm2 homogeneity and triangle inequality") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const DenseVector x = test::random_vector(rng, 7);
    const DenseVector y = test::random_vector(rng, 7);
    const Scalar s(u(rng), u(rng));
    CHECK(norm2(s * x) == doctest::Approx(std::abs(s) * norm2(x)).epsilon(1e-13));
    CHECK(norm2(x + y) <= norm2(x) + norm2(y) + 1e-14);
  }
}

TEST_CASE("mat_vec distributes over addition") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const DenseMatrix a = test::random_matrix(rng, 6);
    const DenseVector x = test::random_vector(rng, 6);
    const DenseVector y = test::random_vector(rng, 6);
    const DenseVector lhs = mat_vec(a, x + y);
    const DenseVector rhs = mat_vec(a, x) + mat_vec(a, y);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(lhs[i] - rhs[i]) <= 1e-14 * 6.0);
  }
}

TEST_CASE("real inputs keep exactly zero imaginary parts") {
  const DenseMatrix m = example1_m();
  const DenseVector v = mat_vec(mat_pow(m, 5), DenseVector{1, 2, 3, 4});
  CHECK(v.is_real());
  CHECK(lu_solve(lu_factor(reference::system2().a), reference::system2().b).is_real());
}

TEST_CASE("mat_pow and block_matrix") {
  const DenseMatrix m = example1_m();
  CHECK(dist(mat_pow(m, 0), DenseMatrix::identity(4)) == 0.0);
  CHECK(dist(mat_pow(m, 3), m * m * m) < 1e-15);
  const DenseMatrix i2 = DenseMatrix::identity(2);
  const DenseMatrix z2(2, 2);
  const DenseMatrix blk = block_matrix({{i2, 2.0 * i2}, {z2, i2}});
  CHECK(blk.rows() == 4);
  CHECK(blk(0, 2) == Scalar(2.0));
  CHECK(blk(3, 3) == Scalar(1.0));
  CHECK(blk(2, 0) == Scalar(0.0));
  CHECK_THROWS_AS(block_matrix({{i2, DenseMatrix(3, 3)}}), DimensionMismatch);
}

TEST_CASE("inverse") {
  const DenseMatrix a = reference::system1().a;
  CHECK(dist(a * inverse(a), DenseMatrix::identity(4)) < 1e-12);
}
