#include "hopfrec/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quot(poly.size() - dd, 0);
    for (std::size_t k = poly.size() - 1; k + 1 > dd; --k) {
      const long c = poly[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * div[j];
      if (k == dd) break;
    }
    poly = std::move(quot);
  }
  return poly;
}

// Solve the dense square system A x = b over Q; A is assumed invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a,
                                     std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DivisionByZero();
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

int cyclotomic_degree(int n) {
  return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

Scalar::Scalar(long num, long den) : conductor_(1) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  coeffs_ = {q};
}

Scalar::Scalar(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw Error("cyclotomic conductor must be positive");
  for (auto& c : coeffs_) c.canonicalize();
  reduce();
}

Scalar Scalar::zeta(int conductor) {
  std::vector<Rational> c(2);
  c[1] = 1;
  return Scalar(conductor, std::move(c));
}

void Scalar::reduce() {
  const std::vector<long>& phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  if (coeffs_.size() > deg) {
    for (std::size_t k = coeffs_.size() - 1; k >= deg; --k) {
      if (coeffs_[k] != 0) {
        const Rational c = coeffs_[k];
        for (std::size_t j = 0; j <= deg; ++j) {
          if (phi[j] != 0) coeffs_[k - deg + j] -= c * phi[j];
        }
      }
      if (k == deg) break;
    }
  }
  coeffs_.resize(deg);
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Scalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

Scalar Scalar::promoted(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw ConductorMismatch("cannot embed Q(zeta_" + std::to_string(conductor_) +
                            ") into Q(zeta_" + std::to_string(m) + ")");
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  Scalar out;
  out.conductor_ = m;
  out.coeffs_ = std::move(c);
  out.reduce();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  const int m = std::lcm(conductor_, o.conductor_);
  *this = promoted(m);
  const Scalar p = o.promoted(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += p.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const int m = std::lcm(conductor_, o.conductor_);
  const Scalar a = promoted(m);
  const Scalar b = o.promoted(m);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  conductor_ = m;
  coeffs_ = std::move(prod);
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (conductor_ == 1) return Scalar(Rational(1 / coeffs_[0]));
  // Column j of the multiplication-by-this matrix is this * zeta^j.
  const std::size_t deg = coeffs_.size();
  std::vector<std::vector<Rational>> a(deg, std::vector<Rational>(deg));
  Scalar col = *this;
  const Scalar z = zeta(conductor_);
  for (std::size_t j = 0; j < deg; ++j) {
    for (std::size_t i = 0; i < deg; ++i) a[i][j] = col.coeffs_[i];
    col *= z;
  }
  std::vector<Rational> e(deg);
  e[0] = 1;
  return Scalar(conductor_, solve_rational(std::move(a), std::move(e)));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int m = std::lcm(a.conductor_, b.conductor_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::string rational_to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw Error("malformed rational '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational_to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    const Rational mag = first ? c : abs(c);
    if (i == 0) {
      os << rational_to_string(mag);
    } else {
      if (mag == -1) {
        os << "-";
      } else if (mag != 1) {
        os << rational_to_string(mag) << "*";
      }
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

Scalar field_arith(FieldOp op, const Scalar& x, const Scalar& y) {
  switch (op) {
    case FieldOp::add:
      return x + y;
    case FieldOp::mul:
      return x * y;
    case FieldOp::neg:
      return -x;
    case FieldOp::inv:
      return x.inverse();
  }
  throw Error("unknown field operation");
}

}  // namespace hopfrec
