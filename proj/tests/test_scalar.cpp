#include <catch_amalgamated.hpp>

#include <complex>
#include <numbers>
#include <random>

#include "hopfrec/errors.hpp"
#include "hopfrec/scalar.hpp"

using namespace hopfrec;

namespace {

// Complex embedding zeta_n -> exp(2 pi i / n), used as an independent check.
std::complex<double> embed(const Scalar& s) {
  const double theta = 2 * std::numbers::pi / s.conductor();
  std::complex<double> z(0, 0);
  for (std::size_t k = 0; k < s.coeffs().size(); ++k)
    z += s.coeffs()[k].get_d() * std::polar(1.0, theta * static_cast<double>(k));
  return z;
}

Scalar random_scalar(std::mt19937& rng, int conductor) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<Rational> c(static_cast<std::size_t>(cyclotomic_degree(conductor)));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Scalar(conductor, c);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(-3, 9).to_string() == "-1/3");
  CHECK(Scalar(6, 3).to_string() == "2");
  CHECK((Scalar(3, 7) * Scalar(7, 3)).is_one());
  CHECK_THROWS_AS(Scalar(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(5) / Scalar(0), DivisionByZero);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n : {1, 2, 3, 5, 7, 8, 9, 12, 15}) {
    int phi = 0;
    for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    CHECK(cyclotomic_degree(n) == phi);
  }
}

TEST_CASE("roots of unity satisfy their relations") {
  const Scalar i = Scalar::zeta(4);
  CHECK(i * i == Scalar(-1));
  const Scalar w = Scalar::zeta(3);
  CHECK((w * w + w + Scalar(1)).is_zero());
  Scalar p(1);
  for (int k = 0; k < 5; ++k) p = p * Scalar::zeta(5);
  CHECK(p.is_one());
  CHECK(Scalar::zeta(4).to_string() == "z4");
}

TEST_CASE("mixed conductors promote to the lcm") {
  const Scalar s = Scalar::zeta(4) + Scalar::zeta(3);
  CHECK(s.conductor() == 12);
  CHECK(std::abs(embed(s) - (embed(Scalar::zeta(4)) + embed(Scalar::zeta(3)))) < 1e-12);
  CHECK(Scalar(1) == Scalar::zeta(4).promoted(8) * Scalar::zeta(4).promoted(8) * Scalar(-1));
  CHECK(Scalar(7).promoted(6) == Scalar(7));
  CHECK_THROWS_AS(Scalar::zeta(4).promoted(6), ConductorMismatch);
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(20240611);
  for (int conductor : {1, 3, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Scalar a = random_scalar(rng, conductor);
      const Scalar b = random_scalar(rng, conductor);
      const Scalar c = random_scalar(rng, conductor);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      CHECK(field_arith(FieldOp::add, a, b) == a + b);
      CHECK(field_arith(FieldOp::neg, a) == -a);
      CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-9);
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(field_arith(FieldOp::inv, a) * a == Scalar(1));
        CHECK(std::abs(embed(a.inverse()) * embed(a) - 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("rational text round trip") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+2/6") == Rational(1, 3));
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/"), Error);
  CHECK_THROWS_AS(parse_rational("a"), Error);
}
