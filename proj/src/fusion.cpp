#include "hopfrec/fusion.hpp"

#include <array>
#include <map>

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

std::string tuple_name(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

// Position of a basis vector of the (ab)c -> d space inside F(a,b,c,d).
std::size_t left_index(const FusionSkeleton& k, std::size_t a, std::size_t b,
                       std::size_t c, std::size_t d, std::size_t e, std::size_t mu,
                       std::size_t nu) {
  std::size_t off = 0;
  for (std::size_t x = 0; x < e; ++x) off += std::size_t(k.N(a, b, x) * k.N(x, c, d));
  return off + mu * std::size_t(k.N(e, c, d)) + nu;
}

// Position of a basis vector of the a(bc) -> d space inside F(a,b,c,d).
std::size_t right_index(const FusionSkeleton& k, std::size_t a, std::size_t b,
                        std::size_t c, std::size_t d, std::size_t f, std::size_t mu,
                        std::size_t nu) {
  std::size_t off = 0;
  for (std::size_t x = 0; x < f; ++x) off += std::size_t(k.N(b, c, x) * k.N(a, x, d));
  return off + mu * std::size_t(k.N(a, f, d)) + nu;
}

void copy_row(Matrix& dst, std::size_t i, const Matrix& src, std::size_t j) {
  for (std::size_t c = 0; c < src.cols(); ++c) dst(i, c) = src(j, c);
}

// Labelled basis of one fusion-tree space in the pentagon.
using Label = std::array<std::size_t, 5>;

struct TreeSpace {
  std::vector<Label> elems;
  std::map<Label, std::size_t> index;

  void add(const Label& l) {
    index.emplace(l, elems.size());
    elems.push_back(l);
  }
  std::size_t size() const { return elems.size(); }
};

void record_matrix_diff(CheckRecord& rec, std::vector<long> prefix, const Matrix& lhs,
                        const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rec.fail(std::move(prefix), std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()),
             std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        auto idx = prefix;
        idx.push_back(long(i));
        idx.push_back(long(j));
        rec.fail(std::move(idx), lhs(i, j).to_string(), rhs(i, j).to_string());
      }
}

}  // namespace

std::size_t FusionSkeleton::left_multiplicity(std::size_t a, std::size_t b, std::size_t c,
                                              std::size_t d) const {
  std::size_t s = 0;
  for (std::size_t e = 0; e < rank(); ++e) s += std::size_t(N(a, b, e) * N(e, c, d));
  return s;
}

std::size_t FusionSkeleton::right_multiplicity(std::size_t a, std::size_t b, std::size_t c,
                                               std::size_t d) const {
  std::size_t s = 0;
  for (std::size_t f = 0; f < rank(); ++f) s += std::size_t(N(b, c, f) * N(a, f, d));
  return s;
}

FusionSkeleton FusionSkeleton::with_rank(std::size_t r) {
  FusionSkeleton k;
  k.simples.resize(r);
  for (std::size_t i = 0; i < r; ++i) k.simples[i] = std::to_string(i);
  k.fusion.assign(r * r * r, 0);
  k.assoc.assign(r * r * r * r, Matrix());
  k.dual.resize(r);
  for (std::size_t i = 0; i < r; ++i) k.dual[i] = i;
  return k;
}

void validate_shapes(const FusionSkeleton& k) {
  const std::size_t r = k.rank();
  if (r == 0) throw ShapeError("skeleton has no simples");
  if (k.fusion.size() != r * r * r) throw ShapeError("fusion must have r^3 entries");
  if (k.assoc.size() != r * r * r * r) throw ShapeError("assoc must have r^4 entries");
  if (k.dual.size() != r) throw ShapeError("dual must have r entries");
  if (k.unit >= r) throw ShapeError("unit index out of range");
  for (int n : k.fusion)
    if (n < 0) throw ShapeError("negative fusion multiplicity");
  for (std::size_t a = 0; a < r; ++a) {
    if (k.dual[a] >= r) throw ShapeError("dual index out of range");
    for (std::size_t b = 0; b < r; ++b) {
      const int delta = a == b ? 1 : 0;
      if (k.N(k.unit, a, b) != delta || k.N(a, k.unit, b) != delta)
        throw ShapeError("fusion with the unit must be trivial at " + tuple_name({a, b}));
    }
    if (k.N(k.dual[a], a, k.unit) < 1)
      throw ShapeError("no evaluation candidate for simple " + std::to_string(a));
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) {
          const std::size_t lm = k.left_multiplicity(a, b, c, d);
          const std::size_t rm = k.right_multiplicity(a, b, c, d);
          const Matrix& f = k.F(a, b, c, d);
          if (lm != rm)
            throw ShapeError("fusion rules not associative at " + tuple_name({a, b, c, d}));
          if (f.rows() != rm || f.cols() != lm)
            throw ShapeError("F-symbol " + tuple_name({a, b, c, d}) + " must be " +
                             std::to_string(rm) + "x" + std::to_string(lm));
        }
}

void validate_shapes(const FusionSkeleton& k, const FiberData& fiber) {
  validate_shapes(k);
  const std::size_t r = k.rank();
  if (fiber.dims.size() != r) throw ShapeError("dims must have one entry per simple");
  for (auto d : fiber.dims)
    if (d < 1) throw ShapeError("fiber dimensions must be positive");
  if (fiber.dims[k.unit] != 1) throw ShapeError("the unit must have fiber dimension 1");
  if (fiber.iota.is_zero()) throw ShapeError("iota must be nonzero");
  if (fiber.tensorator.size() != r * r) throw ShapeError("tensorator must have r^2 entries");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      std::size_t target = 0;
      for (std::size_t c = 0; c < r; ++c) target += std::size_t(k.N(a, b, c)) * fiber.dims[c];
      const std::size_t source = fiber.dims[a] * fiber.dims[b];
      if (target != source)
        throw ShapeError("fusion dimensions disagree with fiber dims at " + tuple_name({a, b}));
      const Matrix& j = fiber.J(a, b);
      if (j.rows() != source || j.cols() != source)
        throw ShapeError("J" + tuple_name({a, b}) + " must be " + std::to_string(source) +
                         "x" + std::to_string(source));
    }
  if (fiber.ev_coeff.size() != r || fiber.coev_coeff.size() != r)
    throw ShapeError("ev/coev coefficients must have one entry per simple");
  for (std::size_t a = 0; a < r; ++a) {
    if (fiber.ev_coeff[a].size() != std::size_t(k.N(k.dual[a], a, k.unit)))
      throw ShapeError("ev coefficient length for simple " + std::to_string(a));
    if (fiber.coev_coeff[a].size() != std::size_t(k.N(a, k.dual[a], k.unit)))
      throw ShapeError("coev coefficient length for simple " + std::to_string(a));
  }
}

std::vector<std::size_t> block_offsets(const FusionSkeleton& k,
                                       const std::vector<std::size_t>& dims, std::size_t a,
                                       std::size_t b) {
  std::vector<std::size_t> off(k.rank() + 1, 0);
  for (std::size_t c = 0; c < k.rank(); ++c)
    off[c + 1] = off[c] + std::size_t(k.N(a, b, c)) * dims[c];
  return off;
}

Matrix left_composite(const FusionSkeleton& k, const FiberData& fiber, std::size_t a,
                      std::size_t b, std::size_t c) {
  const auto& dims = fiber.dims;
  const std::size_t r = k.rank();
  const std::size_t dc = dims[c];
  const std::size_t total = dims[a] * dims[b] * dc;
  const Matrix step = kron(fiber.J(a, b), Matrix::identity(dc));
  const auto off_ab = block_offsets(k, dims, a, b);
  std::vector<std::size_t> out_off(r + 1, 0);
  for (std::size_t d = 0; d < r; ++d)
    out_off[d + 1] = out_off[d] + k.left_multiplicity(a, b, c, d) * dims[d];

  Matrix out(total, total);
  for (std::size_t e = 0; e < r; ++e) {
    const auto off_ec = block_offsets(k, dims, e, c);
    for (std::size_t mu = 0; mu < std::size_t(k.N(a, b, e)); ++mu) {
      const std::size_t base = (off_ab[e] + mu * dims[e]) * dc;
      const Matrix t = fiber.J(e, c) * step.block(base, 0, dims[e] * dc, total);
      for (std::size_t d = 0; d < r; ++d)
        for (std::size_t nu = 0; nu < std::size_t(k.N(e, c, d)); ++nu) {
          const std::size_t pos = left_index(k, a, b, c, d, e, mu, nu);
          for (std::size_t y = 0; y < dims[d]; ++y)
            copy_row(out, out_off[d] + pos * dims[d] + y, t, off_ec[d] + nu * dims[d] + y);
        }
    }
  }
  return out;
}

Matrix right_composite(const FusionSkeleton& k, const FiberData& fiber, std::size_t a,
                       std::size_t b, std::size_t c) {
  const auto& dims = fiber.dims;
  const std::size_t r = k.rank();
  const std::size_t da = dims[a];
  const std::size_t dbc = dims[b] * dims[c];
  const std::size_t total = da * dbc;
  const Matrix step = kron(Matrix::identity(da), fiber.J(b, c));
  const auto off_bc = block_offsets(k, dims, b, c);
  std::vector<std::size_t> out_off(r + 1, 0);
  for (std::size_t d = 0; d < r; ++d)
    out_off[d + 1] = out_off[d] + k.right_multiplicity(a, b, c, d) * dims[d];

  Matrix out(total, total);
  for (std::size_t f = 0; f < r; ++f) {
    const std::size_t df = dims[f];
    const auto off_af = block_offsets(k, dims, a, f);
    for (std::size_t mu = 0; mu < std::size_t(k.N(b, c, f)); ++mu) {
      // Rows of F(a) (x) [mu-th copy of F(f)], reordered as F(a) (x) F(f).
      Matrix gathered(da * df, total);
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t z = 0; z < df; ++z)
          copy_row(gathered, i * df + z, step, i * dbc + off_bc[f] + mu * df + z);
      const Matrix t = fiber.J(a, f) * gathered;
      for (std::size_t d = 0; d < r; ++d)
        for (std::size_t nu = 0; nu < std::size_t(k.N(a, f, d)); ++nu) {
          const std::size_t pos = right_index(k, a, b, c, d, f, mu, nu);
          for (std::size_t y = 0; y < dims[d]; ++y)
            copy_row(out, out_off[d] + pos * dims[d] + y, t, off_af[d] + nu * dims[d] + y);
        }
    }
  }
  return out;
}

Report verify_pentagon(const FusionSkeleton& k) {
  validate_shapes(k);
  const std::size_t r = k.rank();
  Report report("verify_pentagon");

  CheckRecord unit{"fusion.unit_strict"};
  CheckRecord invertible{"fusion.assoc_invertible"};
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) {
          const Matrix& f = k.F(a, b, c, d);
          if (f.empty()) continue;
          if ((a == k.unit || b == k.unit || c == k.unit) && !f.is_identity())
            record_matrix_diff(unit, {long(a), long(b), long(c), long(d)}, f,
                               Matrix::identity(f.rows()));
          if (!inverse(f))
            invertible.fail({long(a), long(b), long(c), long(d)}, f.to_string(), "invertible");
        }
  report.add(std::move(unit));
  report.add(std::move(invertible));

  CheckRecord pent{"pentagon"};
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d)
          for (std::size_t t = 0; t < r; ++t) {
            // ((ab)c)d
            TreeSpace s1;
            for (std::size_t x = 0; x < r; ++x)
              for (std::size_t y = 0; y < r; ++y)
                for (std::size_t m1 = 0; m1 < std::size_t(k.N(a, b, x)); ++m1)
                  for (std::size_t m2 = 0; m2 < std::size_t(k.N(x, c, y)); ++m2)
                    for (std::size_t m3 = 0; m3 < std::size_t(k.N(y, d, t)); ++m3)
                      s1.add({x, y, m1, m2, m3});
            if (s1.size() == 0) continue;
            // (a(bc))d
            TreeSpace s2;
            for (std::size_t z = 0; z < r; ++z)
              for (std::size_t y = 0; y < r; ++y)
                for (std::size_t n1 = 0; n1 < std::size_t(k.N(b, c, z)); ++n1)
                  for (std::size_t n2 = 0; n2 < std::size_t(k.N(a, z, y)); ++n2)
                    for (std::size_t m3 = 0; m3 < std::size_t(k.N(y, d, t)); ++m3)
                      s2.add({z, y, n1, n2, m3});
            // a((bc)d)
            TreeSpace s3;
            for (std::size_t z = 0; z < r; ++z)
              for (std::size_t w = 0; w < r; ++w)
                for (std::size_t n1 = 0; n1 < std::size_t(k.N(b, c, z)); ++n1)
                  for (std::size_t rho = 0; rho < std::size_t(k.N(z, d, w)); ++rho)
                    for (std::size_t sg = 0; sg < std::size_t(k.N(a, w, t)); ++sg)
                      s3.add({z, w, n1, rho, sg});
            // a(b(cd))
            TreeSpace s4;
            for (std::size_t v = 0; v < r; ++v)
              for (std::size_t w = 0; w < r; ++w)
                for (std::size_t kap = 0; kap < std::size_t(k.N(c, d, v)); ++kap)
                  for (std::size_t lam = 0; lam < std::size_t(k.N(b, v, w)); ++lam)
                    for (std::size_t sg = 0; sg < std::size_t(k.N(a, w, t)); ++sg)
                      s4.add({v, w, kap, lam, sg});
            // (ab)(cd)
            TreeSpace s5;
            for (std::size_t x = 0; x < r; ++x)
              for (std::size_t v = 0; v < r; ++v)
                for (std::size_t m1 = 0; m1 < std::size_t(k.N(a, b, x)); ++m1)
                  for (std::size_t kap = 0; kap < std::size_t(k.N(c, d, v)); ++kap)
                    for (std::size_t pi = 0; pi < std::size_t(k.N(x, v, t)); ++pi)
                      s5.add({x, v, m1, kap, pi});

            const std::vector<long> where{long(a), long(b), long(c), long(d), long(t)};
            if (s2.size() != s1.size() || s3.size() != s1.size() || s4.size() != s1.size() ||
                s5.size() != s1.size()) {
              pent.fail(where, "tree space sizes differ", "equal sizes");
              continue;
            }

            Matrix m12(s2.size(), s1.size());
            for (const auto& [src, j] : s1.index)
              for (const auto& [dst, i] : s2.index)
                if (dst[1] == src[1] && dst[4] == src[4])
                  m12(i, j) = k.F(a, b, c, src[1])(
                      right_index(k, a, b, c, src[1], dst[0], dst[2], dst[3]),
                      left_index(k, a, b, c, src[1], src[0], src[2], src[3]));
            Matrix m23(s3.size(), s2.size());
            for (const auto& [src, j] : s2.index)
              for (const auto& [dst, i] : s3.index)
                if (dst[0] == src[0] && dst[2] == src[2])
                  m23(i, j) = k.F(a, src[0], d, t)(
                      right_index(k, a, src[0], d, t, dst[1], dst[3], dst[4]),
                      left_index(k, a, src[0], d, t, src[1], src[3], src[4]));
            Matrix m34(s4.size(), s3.size());
            for (const auto& [src, j] : s3.index)
              for (const auto& [dst, i] : s4.index)
                if (dst[1] == src[1] && dst[4] == src[4])
                  m34(i, j) = k.F(b, c, d, src[1])(
                      right_index(k, b, c, d, src[1], dst[0], dst[2], dst[3]),
                      left_index(k, b, c, d, src[1], src[0], src[2], src[3]));
            Matrix m15(s5.size(), s1.size());
            for (const auto& [src, j] : s1.index)
              for (const auto& [dst, i] : s5.index)
                if (dst[0] == src[0] && dst[2] == src[2])
                  m15(i, j) = k.F(src[0], c, d, t)(
                      right_index(k, src[0], c, d, t, dst[1], dst[3], dst[4]),
                      left_index(k, src[0], c, d, t, src[1], src[3], src[4]));
            Matrix m54(s4.size(), s5.size());
            for (const auto& [src, j] : s5.index)
              for (const auto& [dst, i] : s4.index)
                if (dst[0] == src[1] && dst[2] == src[3])
                  m54(i, j) = k.F(a, b, src[1], t)(
                      right_index(k, a, b, src[1], t, dst[1], dst[3], dst[4]),
                      left_index(k, a, b, src[1], t, src[0], src[2], src[4]));

            record_matrix_diff(pent, where, m34 * m23 * m12, m54 * m15);
          }
  report.add(std::move(pent));
  return report;
}

Report verify_tensorator(const FusionSkeleton& k, const FiberData& fiber) {
  validate_shapes(k, fiber);
  const std::size_t r = k.rank();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (!inverse(fiber.J(a, b)))
        throw NonInvertibleJ("J" + tuple_name({a, b}) + " is singular");
  Report report("verify_tensorator");

  CheckRecord unit{"tensorator.unit"};
  const Scalar inv_iota = fiber.iota.inverse();
  for (std::size_t a = 0; a < r; ++a) {
    const Matrix expect = Matrix::scalar(fiber.dims[a], inv_iota);
    record_matrix_diff(unit, {long(k.unit), long(a)}, fiber.J(k.unit, a), expect);
    record_matrix_diff(unit, {long(a), long(k.unit)}, fiber.J(a, k.unit), expect);
  }
  report.add(std::move(unit));

  CheckRecord hex{"tensorator.hexagon"};
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        std::vector<Matrix> blocks;
        for (std::size_t d = 0; d < r; ++d) {
          if (k.left_multiplicity(a, b, c, d) == 0) continue;
          blocks.push_back(kron(k.F(a, b, c, d), Matrix::identity(fiber.dims[d])));
        }
        const Matrix lhs = direct_sum(blocks) * left_composite(k, fiber, a, b, c);
        const Matrix rhs = right_composite(k, fiber, a, b, c);
        record_matrix_diff(hex, {long(a), long(b), long(c)}, lhs, rhs);
      }
  report.add(std::move(hex));
  return report;
}

Matrix pairing_matrix(const FusionSkeleton& k, const FiberData& fiber, std::size_t a) {
  const std::size_t ad = k.dual[a];
  const std::size_t da = fiber.dims[a], dd = fiber.dims[ad];
  const Matrix& j = fiber.J(ad, a);
  const std::size_t off = block_offsets(k, fiber.dims, ad, a)[k.unit];
  const Scalar inv_iota = fiber.iota.inverse();
  Matrix p(dd, da);
  for (std::size_t mu = 0; mu < fiber.ev_coeff[a].size(); ++mu) {
    const Scalar w = fiber.ev_coeff[a][mu] * inv_iota;
    if (w.is_zero()) continue;
    for (std::size_t i = 0; i < dd; ++i)
      for (std::size_t l = 0; l < da; ++l) p(i, l) += w * j(off + mu, i * da + l);
  }
  return p;
}

Matrix copairing_matrix(const FusionSkeleton& k, const FiberData& fiber, std::size_t a) {
  const std::size_t ad = k.dual[a];
  const std::size_t da = fiber.dims[a], dd = fiber.dims[ad];
  const Matrix& j = fiber.J(a, ad);
  const std::size_t off = block_offsets(k, fiber.dims, a, ad)[k.unit];
  Matrix x(da * dd, 1);
  for (std::size_t mu = 0; mu < fiber.coev_coeff[a].size(); ++mu)
    x(off + mu, 0) = fiber.coev_coeff[a][mu] * fiber.iota;
  const auto q = mat_solve(j, x);
  if (!q) throw NonInvertibleJ("J" + tuple_name({a, ad}) + " is singular");
  Matrix out(da, dd);
  for (std::size_t l = 0; l < da; ++l)
    for (std::size_t i = 0; i < dd; ++i) out(l, i) = (*q)(l * dd + i, 0);
  return out;
}

std::vector<Matrix> compute_delta(const FusionSkeleton& k, const FiberData& fiber) {
  validate_shapes(k, fiber);
  std::vector<Matrix> deltas;
  for (std::size_t a = 0; a < k.rank(); ++a) {
    const Matrix p = pairing_matrix(k, fiber, a);
    if (!p.is_square() || rank(p) != p.rows())
      throw NonRigid("evaluation pairing for simple " + std::to_string(a) + " (" +
                     k.simples[a] + ") is degenerate");
    deltas.push_back(p.transpose());
  }
  return deltas;
}

Report verify_duality(const FusionSkeleton& k, const FiberData& fiber) {
  compute_delta(k, fiber);
  Report report("verify_duality");
  CheckRecord left{"duality.snake_left"}, right{"duality.snake_right"};
  for (std::size_t a = 0; a < k.rank(); ++a) {
    const Matrix p = pairing_matrix(k, fiber, a);
    const Matrix q = copairing_matrix(k, fiber, a);
    record_matrix_diff(left, {long(a)}, q * p, Matrix::identity(fiber.dims[a]));
    record_matrix_diff(right, {long(a)}, p * q, Matrix::identity(fiber.dims[k.dual[a]]));
  }
  report.add(std::move(left));
  report.add(std::move(right));
  return report;
}

Report verify_category(const FusionSkeleton& k, const FiberData* fiber) {
  Report report("check-category");
  report.append(verify_pentagon(k));
  if (fiber == nullptr) return report;
  try {
    report.append(verify_tensorator(k, *fiber));
  } catch (const NonInvertibleJ& e) {
    report.add("tensorator.invertible").fail({}, e.what(), "invertible");
    return report;
  }
  try {
    report.append(verify_duality(k, *fiber));
  } catch (const NonRigid& e) {
    report.add("duality.rigid").fail({}, e.what(), "nondegenerate pairing");
  }
  return report;
}

}  // namespace hopfrec
