#include <catch_amalgamated.hpp>

#include <random>

#include "hopfrec/matrix.hpp"

using namespace hopfrec;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

}  // namespace

TEST_CASE("canonical kernel basis") {
  const Matrix k = mat_kernel(Matrix{{1, 1}, {1, 1}});
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix{{1}, {-1}});

  // x + 2y + 3z = 0: reduced column echelon basis (1,0,-1/3), (0,1,-2/3).
  const Matrix k2 = mat_kernel(Matrix{{1, 2, 3}});
  CHECK(k2 == Matrix{{1, 0}, {0, 1}, {Scalar(-1, 3), Scalar(-2, 3)}});

  CHECK(mat_kernel(Matrix::identity(3)).cols() == 0);
  CHECK(mat_kernel(Matrix(2, 3)) == Matrix::identity(3));
}

TEST_CASE("kernel is a basis of the null space on random input") {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const Matrix a = random_matrix(rng, r, c, -1, 1);
    const Matrix k = mat_kernel(a);
    CHECK((a * k).is_zero());
    CHECK(rank(a) + k.cols() == c);
    CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("solve and inverse") {
  const Matrix a{{2, 1}, {1, 1}};
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv == Matrix{{1, -1}, {-1, 2}});
  CHECK(!inverse(Matrix{{1, 2}, {2, 4}}));

  const auto x = mat_solve(a, Matrix{{3}, {2}});
  REQUIRE(x);
  CHECK(*x == Matrix{{1}, {1}});
  CHECK(!mat_solve(Matrix{{1, 1}, {1, 1}}, Matrix{{1}, {2}}));

  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(rng, 4, 4);
    if (auto mi = inverse(m)) {
      CHECK((m * *mi).is_identity());
      CHECK((*mi * m).is_identity());
    } else {
      CHECK(rank(m) < 4);
    }
  }
}

TEST_CASE("cyclotomic matrices") {
  const Scalar i = Scalar::zeta(4);
  const Matrix r{{0, -1}, {1, 0}};
  const Matrix d{{i, 0}, {0, -i}};
  CHECK(d * d == Matrix::scalar(2, Scalar(-1)));
  CHECK((r * r) == Matrix::scalar(2, Scalar(-1)));
  const auto di = inverse(d);
  REQUIRE(di);
  CHECK(*di == Matrix{{-i, 0}, {0, i}});
  CHECK(d.conductor() == 4);
}

TEST_CASE("Kronecker product index convention and laws") {
  std::mt19937 rng(3);
  for (int t = 0; t < 15; ++t) {
    const Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
    const Matrix c = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 2);
    const Matrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == a(i, j) * b(p, q));
    // mixed product
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(a, b).transpose() == kron(a.transpose(), b.transpose()));
    CHECK(kron(kron(a, b), d) == kron(a, kron(b, d)));
    CHECK(kron(a + a, b) == kron(a, b) + kron(a, b));
  }
}

TEST_CASE("direct sum and blocks") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{5}};
  const Matrix s = direct_sum({a, b});
  CHECK(s == Matrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}});
  CHECK(s.block(0, 0, 2, 2) == a);
  CHECK(s.block(2, 2, 1, 1) == b);
  Matrix t(3, 3);
  t.set_block(1, 1, a);
  CHECK(t(2, 2) == Scalar(4));
  CHECK(direct_sum({}).rows() == 0);
}

TEST_CASE("row reduction") {
  const Echelon e = row_reduce(Matrix{{0, 2, 4}, {1, 1, 1}, {1, 2, 3}});
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == Matrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}});
}
