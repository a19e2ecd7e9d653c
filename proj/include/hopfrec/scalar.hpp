#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hopfrec {

using Rational = mpq_class;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first. Results are cached; the returned reference stays valid.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Degree of the n-th cyclotomic polynomial (Euler's totient).
int cyclotomic_degree(int n);

/// An exact element of Q(zeta_n), stored as a residue modulo Phi_n in the
/// power basis 1, zeta, zeta^2, ... . Conductor 1 encodes plain rationals.
///
/// Binary operations between different conductors promote both sides to
/// the least common multiple; the result never demotes, but equality is
/// decided after promotion, so 1 in Q equals 1 in Q(zeta_4).
class Scalar {
 public:
  Scalar() : conductor_(1), coeffs_(1) {}
  Scalar(long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT
  Scalar(Rational v) : conductor_(1), coeffs_{std::move(v)} {  // NOLINT
    coeffs_[0].canonicalize();
  }
  Scalar(long num, long den);

  /// Element with the given power-basis coefficients. Sequences longer than
  /// deg(Phi_n) are reduced; shorter ones are zero-padded.
  Scalar(int conductor, std::vector<Rational> coeffs);

  /// The primitive root zeta_n itself.
  static Scalar zeta(int conductor);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  /// The constant coefficient; meaningful as "the value" when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// The same value expressed in Q(zeta_m); m must be a multiple of the
  /// current conductor.
  Scalar promoted(int m) const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Rationals print as "p" or "p/q"; cyclotomic values as a sum of
  /// monomials in z<n>, e.g. "1/2 + 3*z4".
  std::string to_string() const;

 private:
  void reduce();

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parse "p", "-p" or "p/q". Throws hopfrec::Error on malformed text or a
/// zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text of a rational: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

enum class FieldOp { add, mul, neg, inv };

/// Single entry point for the four field operations; y is ignored for the
/// unary ones.
Scalar field_arith(FieldOp op, const Scalar& x, const Scalar& y = Scalar());

}  // namespace hopfrec
