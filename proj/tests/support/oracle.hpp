#pragma once
// Independent reference checks on plain rational arrays. Nothing here calls
// the library's checkers or its Scalar/Matrix arithmetic.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfrec/hopf.hpp"

namespace oracle {

struct Tensors {
  std::size_t n = 0;
  std::vector<mpq_class> m, d, u, e, s;  // m,d: n^3; u,e: n; s: n^2 row-major
};

inline mpq_class rat(const hopfrec::Scalar& x) {
  if (!x.is_rational()) throw std::runtime_error("oracle needs rational data");
  return x.rational_part();
}

inline Tensors from(const hopfrec::HopfPresentation& h) {
  Tensors t;
  t.n = h.dim();
  for (const auto& x : h.alg.mult) t.m.push_back(rat(x));
  for (const auto& x : h.comult) t.d.push_back(rat(x));
  for (const auto& x : h.alg.unit) t.u.push_back(rat(x));
  for (const auto& x : h.counit) t.e.push_back(rat(x));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) t.s.push_back(rat(h.antipode(i, j)));
  return t;
}

inline std::optional<std::string> snake_violation(const Tensors& t);

// Returns a description of the first violated axiom, or nullopt.
inline std::optional<std::string> hopf_violation(const Tensors& t) {
  const std::size_t n = t.n;
  auto M = [&](std::size_t i, std::size_t j, std::size_t k) { return t.m[(i * n + j) * n + k]; };
  auto D = [&](std::size_t i, std::size_t j, std::size_t k) { return t.d[(i * n + j) * n + k]; };
  // Sparse term lists: dt[a] holds Delta(e_a), mt[a*n+b] holds e_a e_b.
  struct Term {
    std::size_t i, j;
    mpq_class v;
  };
  std::vector<std::vector<Term>> dt(n), mt(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (D(a, i, j) != 0) dt[a].push_back({i, j, D(a, i, j)});
        if (M(a, i, j) != 0) mt[a * n + i].push_back({j, 0, M(a, i, j)});
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<mpq_class> l(n), r(n);
        for (const Term& y : mt[a * n + b])
          for (const Term& z : mt[y.i * n + c]) l[z.i] += y.v * z.v;
        for (const Term& y : mt[b * n + c])
          for (const Term& z : mt[a * n + y.i]) r[z.i] += y.v * z.v;
        if (l != r) return "associativity";
      }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<mpq_class> l(n * n * n), r(n * n * n);
    for (const Term& x : dt[a]) {
      for (const Term& y : dt[x.i]) l[(y.i * n + y.j) * n + x.j] += x.v * y.v;
      for (const Term& y : dt[x.j]) r[(x.i * n + y.i) * n + y.j] += x.v * y.v;
    }
    if (l != r) return "coassociativity";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t z = 0; z < n; ++z) {
      mpq_class l = 0, r = 0, cl = 0, cr = 0;
      for (std::size_t y = 0; y < n; ++y) {
        l += t.u[y] * M(y, a, z);
        r += t.u[y] * M(a, y, z);
        cl += t.e[y] * D(a, y, z);
        cr += t.e[y] * D(a, z, y);
      }
      const mpq_class id = a == z ? 1 : 0;
      if (l != id || r != id) return "unit";
      if (cl != id || cr != id) return "counit";
    }
  // Delta(e_a e_b) = Delta(e_a) Delta(e_b), compared as dense n x n arrays.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<mpq_class> l(n * n), r(n * n);
      for (const Term& y : mt[a * n + b])
        for (const Term& x : dt[y.i]) l[x.i * n + x.j] += y.v * x.v;
      for (const Term& x : dt[a])
        for (const Term& y : dt[b])
          for (const Term& p : mt[x.i * n + y.i])
            for (const Term& q : mt[x.j * n + y.j]) r[p.i * n + q.i] += x.v * y.v * p.v * q.v;
      if (l != r) return "comultiplication multiplicative";
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      mpq_class l = 0;
      for (std::size_t y = 0; y < n; ++y) l += M(a, b, y) * t.e[y];
      if (l != t.e[a] * t.e[b]) return "counit multiplicative";
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      mpq_class l = 0;
      for (std::size_t y = 0; y < n; ++y) l += t.u[y] * D(y, p, q);
      if (l != t.u[p] * t.u[q]) return "comultiplication unital";
    }
  {
    mpq_class l = 0;
    for (std::size_t y = 0; y < n; ++y) l += t.u[y] * t.e[y];
    if (l != 1) return "counit unital";
  }
  if (auto s = snake_violation(t)) return s;
  return std::nullopt;
}

// m (S (x) id) Delta = u e = m (id (x) S) Delta, evaluated on each e_a.
inline std::optional<std::string> snake_violation(const Tensors& t) {
  const std::size_t n = t.n;
  auto M = [&](std::size_t i, std::size_t j, std::size_t k) { return t.m[(i * n + j) * n + k]; };
  auto D = [&](std::size_t i, std::size_t j, std::size_t k) { return t.d[(i * n + j) * n + k]; };
  auto S = [&](std::size_t i, std::size_t j) { return t.s[i * n + j]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t z = 0; z < n; ++z) {
      mpq_class l = 0, r = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (D(a, i, j) == 0) continue;
          for (std::size_t x = 0; x < n; ++x) {
            l += D(a, i, j) * S(x, i) * M(x, j, z);
            r += D(a, i, j) * S(x, j) * M(i, x, z);
          }
        }
      const mpq_class want = t.e[a] * t.u[z];
      if (l != want) return "left snake";
      if (r != want) return "right snake";
    }
  return std::nullopt;
}

}  // namespace oracle
