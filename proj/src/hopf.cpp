#include "hopfrec/hopf.hpp"

#include <string>
#include <utility>

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

using Terms = std::vector<std::pair<std::size_t, Scalar>>;
using SparseVec = std::map<std::size_t, Scalar>;

void accumulate(SparseVec& acc, std::size_t key, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) it->second += c;
}

// Nonzero entries of a dim^3 tensor grouped by the leading index pair
// (for mult) or by the leading index (for comult, keyed j*dim + k).
std::vector<Terms> mult_terms(const AlgebraPresentation& a) {
  const std::size_t n = a.dim;
  std::vector<Terms> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.m(i, j, k).is_zero()) out[i * n + j].emplace_back(k, a.m(i, j, k));
  return out;
}

std::vector<Terms> comult_terms(const HopfPresentation& h) {
  const std::size_t n = h.dim();
  std::vector<Terms> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jk = 0; jk < n * n; ++jk)
      if (!h.comult[i * n * n + jk].is_zero()) out[i].emplace_back(jk, h.comult[i * n * n + jk]);
  return out;
}

Terms nonzero(const Vec& v) {
  Terms t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.emplace_back(i, v[i]);
  return t;
}

Terms antipode_terms(const Matrix& s, std::size_t i) {
  Terms t;
  for (std::size_t j = 0; j < s.rows(); ++j)
    if (!s(j, i).is_zero()) t.emplace_back(j, s(j, i));
  return t;
}

const Scalar& lookup(const SparseVec& v, std::size_t key) {
  static const Scalar zero;
  auto it = v.find(key);
  return it == v.end() ? zero : it->second;
}

// Records one failure per coordinate where lhs and rhs differ. `decode`
// turns a coordinate key into trailing failure indices.
template <typename Decode>
void compare(CheckRecord& rec, const std::vector<long>& prefix, const SparseVec& lhs,
             const SparseVec& rhs, Decode decode) {
  auto emit = [&](std::size_t key) {
    const Scalar& l = lookup(lhs, key);
    const Scalar& r = lookup(rhs, key);
    if (l == r) return;
    std::vector<long> idx = prefix;
    for (long x : decode(key)) idx.push_back(x);
    rec.fail(std::move(idx), l.to_string(), r.to_string());
  };
  for (const auto& [k, v] : lhs) emit(k);
  for (const auto& [k, v] : rhs)
    if (!lhs.count(k)) emit(k);
}

std::vector<long> one(std::size_t k) { return {static_cast<long>(k)}; }

auto pair_decoder(std::size_t n) {
  return [n](std::size_t k) {
    return std::vector<long>{static_cast<long>(k / n), static_cast<long>(k % n)};
  };
}

auto triple_decoder(std::size_t n) {
  return [n](std::size_t k) {
    return std::vector<long>{static_cast<long>(k / (n * n)),
                             static_cast<long>((k / n) % n), static_cast<long>(k % n)};
  };
}

SparseVec basis_vector(std::size_t i) {
  SparseVec v;
  v.emplace(i, Scalar(1));
  return v;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace(i, v[i]);
  return s;
}

// Product of sparse elements under the given multiplication table.
SparseVec product(const std::vector<Terms>& mt, std::size_t n, const Terms& x,
                  const Terms& y) {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : mt[i * n + j]) accumulate(out, k, a * b * c);
  return out;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

AlgebraPresentation AlgebraPresentation::zeros(std::size_t n) {
  AlgebraPresentation a;
  a.dim = n;
  a.mult.assign(n * n * n, Scalar());
  a.unit.assign(n, Scalar());
  return a;
}

Vec AlgebraPresentation::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!m(i, j, k).is_zero()) out[k] += c * m(i, j, k);
    }
  }
  return out;
}

HopfPresentation HopfPresentation::zeros(std::size_t n) {
  HopfPresentation h;
  h.alg = AlgebraPresentation::zeros(n);
  h.comult.assign(n * n * n, Scalar());
  h.counit.assign(n, Scalar());
  h.antipode = Matrix(n, n);
  return h;
}

Vec HopfPresentation::comultiply(const Vec& x) const {
  const std::size_t n = dim();
  Vec out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t jk = 0; jk < n * n; ++jk)
      if (!comult[i * n * n + jk].is_zero()) out[jk] += x[i] * comult[i * n * n + jk];
  }
  return out;
}

void validate_shapes(const AlgebraPresentation& a) {
  const std::size_t n = a.dim;
  if (n == 0) throw ShapeError("algebra dimension must be positive");
  if (a.mult.size() != n * n * n)
    throw ShapeError("mult has " + std::to_string(a.mult.size()) +
                     " entries, expected " + std::to_string(n * n * n));
  if (a.unit.size() != n)
    throw ShapeError("unit has " + std::to_string(a.unit.size()) +
                     " entries, expected " + std::to_string(n));
}

void validate_shapes(const HopfPresentation& h) {
  validate_shapes(h.alg);
  const std::size_t n = h.dim();
  if (h.comult.size() != n * n * n)
    throw ShapeError("comult has " + std::to_string(h.comult.size()) +
                     " entries, expected " + std::to_string(n * n * n));
  if (h.counit.size() != n)
    throw ShapeError("counit has " + std::to_string(h.counit.size()) +
                     " entries, expected " + std::to_string(n));
  if (h.antipode.rows() != n || h.antipode.cols() != n)
    throw ShapeError("antipode must be " + std::to_string(n) + "x" + std::to_string(n));
}

Report check_algebra(const AlgebraPresentation& a) {
  validate_shapes(a);
  const std::size_t n = a.dim;
  const auto mt = mult_terms(a);
  Report report("check_algebra");

  CheckRecord assoc{"algebra.associativity"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        SparseVec lhs, rhs;
        for (const auto& [k, c] : mt[i * n + j])
          for (const auto& [p, d] : mt[k * n + l]) accumulate(lhs, p, c * d);
        for (const auto& [k, c] : mt[j * n + l])
          for (const auto& [p, d] : mt[i * n + k]) accumulate(rhs, p, c * d);
        compare(assoc, {long(i), long(j), long(l)}, lhs, rhs, one);
      }
  report.add(std::move(assoc));

  const Terms u = nonzero(a.unit);
  CheckRecord left{"algebra.left_unit"}, right{"algebra.right_unit"};
  for (std::size_t i = 0; i < n; ++i) {
    const Terms ei{{i, Scalar(1)}};
    compare(left, {long(i)}, product(mt, n, u, ei), basis_vector(i), one);
    compare(right, {long(i)}, product(mt, n, ei, u), basis_vector(i), one);
  }
  report.add(std::move(left));
  report.add(std::move(right));
  return report;
}

Report check_bialgebra(const HopfPresentation& h) {
  validate_shapes(h);
  const std::size_t n = h.dim();
  const auto mt = mult_terms(h.alg);
  const auto dt = comult_terms(h);
  Report report("check_bialgebra");

  CheckRecord coassoc{"bialgebra.coassociativity"};
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec lhs, rhs;
    for (const auto& [jk, c] : dt[i]) {
      const std::size_t j = jk / n, k = jk % n;
      for (const auto& [ab, d] : dt[j]) accumulate(lhs, ab * n + k, c * d);
      for (const auto& [ab, d] : dt[k]) accumulate(rhs, j * n * n + ab, c * d);
    }
    compare(coassoc, {long(i)}, lhs, rhs, triple_decoder(n));
  }
  report.add(std::move(coassoc));

  CheckRecord lcounit{"bialgebra.left_counit"}, rcounit{"bialgebra.right_counit"};
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec lhs, rhs;
    for (const auto& [jk, c] : dt[i]) {
      const std::size_t j = jk / n, k = jk % n;
      if (!h.counit[j].is_zero()) accumulate(lhs, k, h.counit[j] * c);
      if (!h.counit[k].is_zero()) accumulate(rhs, j, h.counit[k] * c);
    }
    compare(lcounit, {long(i)}, lhs, basis_vector(i), one);
    compare(rcounit, {long(i)}, rhs, basis_vector(i), one);
  }
  report.add(std::move(lcounit));
  report.add(std::move(rcounit));

  // Delta(e_x e_y) = Delta(e_x) Delta(e_y) in H (x) H.
  CheckRecord mult{"bialgebra.comult_multiplicative"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec lhs, rhs;
      for (const auto& [k, c] : mt[x * n + y])
        for (const auto& [jk, d] : dt[k]) accumulate(lhs, jk, c * d);
      for (const auto& [ab, c] : dt[x])
        for (const auto& [cd, d] : dt[y]) {
          const auto& left = mt[(ab / n) * n + cd / n];
          const auto& right = mt[(ab % n) * n + cd % n];
          for (const auto& [p, e] : left)
            for (const auto& [q, f] : right) accumulate(rhs, p * n + q, c * d * e * f);
        }
      compare(mult, {long(x), long(y)}, lhs, rhs, pair_decoder(n));
    }
  report.add(std::move(mult));

  const Terms u = nonzero(h.alg.unit);
  CheckRecord unit{"bialgebra.comult_unit"};
  {
    SparseVec lhs, rhs;
    for (const auto& [i, c] : u)
      for (const auto& [jk, d] : dt[i]) accumulate(lhs, jk, c * d);
    for (const auto& [i, c] : u)
      for (const auto& [j, d] : u) accumulate(rhs, i * n + j, c * d);
    compare(unit, {}, lhs, rhs, pair_decoder(n));
  }
  report.add(std::move(unit));

  CheckRecord cmult{"bialgebra.counit_multiplicative"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Scalar lhs;
      for (const auto& [k, c] : mt[x * n + y]) lhs += c * h.counit[k];
      const Scalar rhs = h.counit[x] * h.counit[y];
      if (lhs != rhs) cmult.fail({long(x), long(y)}, lhs.to_string(), rhs.to_string());
    }
  report.add(std::move(cmult));

  CheckRecord cunit{"bialgebra.counit_unit"};
  {
    Scalar lhs;
    for (const auto& [i, c] : u) lhs += c * h.counit[i];
    if (!lhs.is_one()) cunit.fail({}, lhs.to_string(), "1");
  }
  report.add(std::move(cunit));
  return report;
}

Report check_antipode(const HopfPresentation& h) {
  validate_shapes(h);
  const std::size_t n = h.dim();
  const auto mt = mult_terms(h.alg);
  const auto dt = comult_terms(h);
  std::vector<Terms> st(n);
  for (std::size_t i = 0; i < n; ++i) st[i] = antipode_terms(h.antipode, i);
  Report report("check_antipode");

  CheckRecord left{"antipode.left_snake"}, right{"antipode.right_snake"};
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec expect;
    if (!h.counit[i].is_zero())
      for (std::size_t k = 0; k < n; ++k)
        if (!h.alg.unit[k].is_zero()) expect.emplace(k, h.counit[i] * h.alg.unit[k]);
    SparseVec lhs, rhs;
    for (const auto& [jk, c] : dt[i]) {
      const std::size_t j = jk / n, k = jk % n;
      // m(S (x) id): S(e_j) e_k
      for (const auto& [p, s] : st[j])
        for (const auto& [q, m] : mt[p * n + k]) accumulate(lhs, q, c * s * m);
      // m(id (x) S): e_j S(e_k)
      for (const auto& [p, s] : st[k])
        for (const auto& [q, m] : mt[j * n + p]) accumulate(rhs, q, c * s * m);
    }
    compare(left, {long(i)}, lhs, expect, one);
    compare(right, {long(i)}, rhs, expect, one);
  }
  report.add(std::move(left));
  report.add(std::move(right));

  // Informational: S(xy) = S(y)S(x).
  CheckRecord anti{"antipode.anti_multiplicative"};
  anti.informational = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec lhs;
      for (const auto& [k, c] : mt[x * n + y])
        for (const auto& [p, s] : st[k]) accumulate(lhs, p, c * s);
      compare(anti, {long(x), long(y)}, lhs, product(mt, n, st[y], st[x]), one);
    }
  anti.note = anti.failure_count == 0 ? "holds" : "fails";
  report.add(std::move(anti));

  // Informational: Delta(S(x)) = (S (x) S)(flip Delta(x)).
  CheckRecord coanti{"antipode.anti_comultiplicative"};
  coanti.informational = true;
  for (std::size_t x = 0; x < n; ++x) {
    SparseVec lhs, rhs;
    for (const auto& [p, s] : st[x])
      for (const auto& [jk, d] : dt[p]) accumulate(lhs, jk, s * d);
    for (const auto& [jk, d] : dt[x]) {
      const std::size_t j = jk / n, k = jk % n;
      for (const auto& [a, sa] : st[k])
        for (const auto& [b, sb] : st[j]) accumulate(rhs, a * n + b, d * sa * sb);
    }
    compare(coanti, {long(x)}, lhs, rhs, pair_decoder(n));
  }
  coanti.note = coanti.failure_count == 0 ? "holds" : "fails";
  report.add(std::move(coanti));

  CheckRecord invol{"antipode.involutive"};
  invol.informational = true;
  const Matrix s2 = h.antipode * h.antipode;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar expect = i == j ? Scalar(1) : Scalar(0);
      if (s2(i, j) != expect)
        invol.fail({long(i), long(j)}, s2(i, j).to_string(), expect.to_string());
    }
  invol.note = invol.failure_count == 0 ? "holds" : "fails";
  report.add(std::move(invol));
  return report;
}

Report check_hopf(const HopfPresentation& h) {
  Report report("check_hopf");
  report.append(check_algebra(h.alg));
  report.append(check_bialgebra(h));
  report.append(check_antipode(h));
  return report;
}

HopfPresentation tensor_hopf(const HopfPresentation& h1, const HopfPresentation& h2) {
  validate_shapes(h1);
  validate_shapes(h2);
  const std::size_t n1 = h1.dim(), n2 = h2.dim(), n = n1 * n2;
  HopfPresentation h = HopfPresentation::zeros(n);
  const auto mt1 = mult_terms(h1.alg), mt2 = mult_terms(h2.alg);
  const auto dt1 = comult_terms(h1), dt2 = comult_terms(h2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n1; ++k)
      for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t l = 0; l < n2; ++l)
          for (const auto& [p, a] : mt1[i * n1 + k])
            for (const auto& [q, b] : mt2[j * n2 + l])
              h.alg.m(i * n2 + j, k * n2 + l, p * n2 + q) = a * b;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      h.alg.unit[i * n2 + j] = h1.alg.unit[i] * h2.alg.unit[j];
      h.counit[i * n2 + j] = h1.counit[i] * h2.counit[j];
      for (const auto& [ab, c] : dt1[i])
        for (const auto& [cd, d] : dt2[j]) {
          const std::size_t left = (ab / n1) * n2 + cd / n2;
          const std::size_t right = (ab % n1) * n2 + cd % n2;
          h.delta(i * n2 + j, left, right) += c * d;
        }
    }
  h.antipode = kron(h1.antipode, h2.antipode);
  return h;
}

Report check_hopf_morphism(const HopfPresentation& src, const HopfPresentation& tgt,
                           const Matrix& phi) {
  validate_shapes(src);
  validate_shapes(tgt);
  const std::size_t n = src.dim(), m = tgt.dim();
  if (phi.rows() != m || phi.cols() != n)
    throw ShapeError("morphism matrix must be " + std::to_string(m) + "x" +
                     std::to_string(n));
  Report report("hopf_morphism");
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = phi.col(i);
  auto apply = [&](const Vec& x) {
    Vec y(m);
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero())
        for (std::size_t r = 0; r < m; ++r) y[r] += x[i] * img[i][r];
    return y;
  };
  auto mismatch = [](CheckRecord& rec, std::vector<long> prefix, const Vec& l, const Vec& r,
                     auto decode) { compare(rec, prefix, to_sparse(l), to_sparse(r), decode); };

  CheckRecord bij{"morphism.bijective"};
  if (n != m || !inverse(phi))
    bij.fail({}, "rank " + std::to_string(rank(phi)) + " of " + std::to_string(m) + "x" +
                     std::to_string(n),
             "invertible");
  report.add(std::move(bij));

  CheckRecord alg{"morphism.algebra"};
  const auto mt_src = mult_terms(src.alg);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec xy(n);
      for (const auto& [k, c] : mt_src[x * n + y]) xy[k] += c;
      mismatch(alg, {long(x), long(y)}, apply(xy), tgt.alg.multiply(img[x], img[y]), one);
    }
  mismatch(alg, {-1}, apply(src.alg.unit), tgt.alg.unit, one);
  report.add(std::move(alg));

  CheckRecord coalg{"morphism.coalgebra"};
  for (std::size_t x = 0; x < n; ++x) {
    const Vec lhs = tgt.comultiply(img[x]);
    Vec rhs(m * m);
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      const Scalar& c = src.comult[x * n * n + jk];
      if (c.is_zero()) continue;
      const Vec& a = img[jk / n];
      const Vec& b = img[jk % n];
      for (std::size_t p = 0; p < m; ++p) {
        if (a[p].is_zero()) continue;
        for (std::size_t q = 0; q < m; ++q)
          if (!b[q].is_zero()) rhs[p * m + q] += c * a[p] * b[q];
      }
    }
    mismatch(coalg, {long(x)}, lhs, rhs, pair_decoder(m));
  }
  report.add(std::move(coalg));

  CheckRecord counit{"morphism.counit"};
  for (std::size_t x = 0; x < n; ++x) {
    Scalar lhs;
    for (std::size_t p = 0; p < m; ++p) lhs += tgt.counit[p] * img[x][p];
    if (lhs != src.counit[x]) counit.fail({long(x)}, lhs.to_string(), src.counit[x].to_string());
  }
  report.add(std::move(counit));

  CheckRecord anti{"morphism.antipode"};
  for (std::size_t x = 0; x < n; ++x) {
    Vec lhs(m);
    for (std::size_t p = 0; p < m; ++p)
      if (!img[x][p].is_zero())
        for (std::size_t q = 0; q < m; ++q) lhs[q] += tgt.antipode(q, p) * img[x][p];
    const Vec rhs = apply(src.antipode.col(x));
    if (lhs != rhs) anti.fail({long(x)}, vec_to_string(lhs), vec_to_string(rhs));
  }
  report.add(std::move(anti));
  return report;
}

HopfPresentation permute_basis(const HopfPresentation& h,
                               const std::vector<std::size_t>& perm) {
  const std::size_t n = h.dim();
  if (perm.size() != n) throw ShapeError("permutation length must equal dim");
  HopfPresentation out = HopfPresentation::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.alg.unit[i] = h.alg.unit[perm[i]];
    out.counit[i] = h.counit[perm[i]];
    for (std::size_t j = 0; j < n; ++j) {
      out.antipode(i, j) = h.antipode(perm[i], perm[j]);
      for (std::size_t k = 0; k < n; ++k) {
        out.alg.m(i, j, k) = h.alg.m(perm[i], perm[j], perm[k]);
        out.delta(i, j, k) = h.delta(perm[i], perm[j], perm[k]);
      }
    }
  }
  return out;
}

}  // namespace hopfrec
