#include "hopfrec/reconstruct.hpp"

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

std::vector<Matrix> tensorator_inverses(const FusionSkeleton& k, const FiberData& fiber) {
  std::vector<Matrix> inv;
  inv.reserve(fiber.tensorator.size());
  for (std::size_t a = 0; a < k.rank(); ++a)
    for (std::size_t b = 0; b < k.rank(); ++b) {
      auto m = inverse(fiber.J(a, b));
      if (!m)
        throw NonInvertibleJ("J(" + std::to_string(a) + "," + std::to_string(b) +
                             ") is singular");
      inv.push_back(std::move(*m));
    }
  return inv;
}

// sum_c I_{N(a,b,c)} (x) eta_c, the action of eta on F(a (x) b).
Matrix realized_action(const FusionSkeleton& k, const EndFElement& eta, std::size_t a,
                       std::size_t b) {
  std::vector<Matrix> blocks;
  for (std::size_t c = 0; c < k.rank(); ++c)
    for (int mu = 0; mu < k.N(a, b, c); ++mu) blocks.push_back(eta.blocks[c]);
  return direct_sum(blocks);
}

void check_blocks(const FiberData& fiber, const EndFElement& eta) {
  if (eta.blocks.size() != fiber.dims.size())
    throw ShapeError("element has " + std::to_string(eta.blocks.size()) +
                     " blocks, expected " + std::to_string(fiber.dims.size()));
  for (std::size_t a = 0; a < fiber.dims.size(); ++a)
    if (eta.blocks[a].rows() != fiber.dims[a] || eta.blocks[a].cols() != fiber.dims[a])
      throw ShapeError("block " + std::to_string(a) + " must be " +
                       std::to_string(fiber.dims[a]) + "x" + std::to_string(fiber.dims[a]));
}

}  // namespace

EndFElement EndFElement::identity(const std::vector<std::size_t>& dims) {
  EndFElement x;
  for (auto d : dims) x.blocks.push_back(Matrix::identity(d));
  return x;
}

EndFElement EndFElement::zero(const std::vector<std::size_t>& dims) {
  EndFElement x;
  for (auto d : dims) x.blocks.emplace_back(d, d);
  return x;
}

EndFElement EndFElement::unit(const std::vector<std::size_t>& dims, std::size_t a,
                              std::size_t i, std::size_t j) {
  EndFElement x = zero(dims);
  x.blocks.at(a)(i, j) = Scalar(1);
  return x;
}

EndFElement operator*(const EndFElement& x, const EndFElement& y) {
  if (x.blocks.size() != y.blocks.size()) throw ShapeError("block count mismatch");
  EndFElement z;
  for (std::size_t a = 0; a < x.blocks.size(); ++a) z.blocks.push_back(x.blocks[a] * y.blocks[a]);
  return z;
}

EndFElement operator+(const EndFElement& x, const EndFElement& y) {
  if (x.blocks.size() != y.blocks.size()) throw ShapeError("block count mismatch");
  EndFElement z;
  for (std::size_t a = 0; a < x.blocks.size(); ++a) z.blocks.push_back(x.blocks[a] + y.blocks[a]);
  return z;
}

EndFElement operator*(const Scalar& s, const EndFElement& x) {
  EndFElement z;
  for (const auto& b : x.blocks) z.blocks.push_back(s * b);
  return z;
}

MatrixUnitBasis::MatrixUnitBasis(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  offsets_.assign(dims_.size() + 1, 0);
  for (std::size_t a = 0; a < dims_.size(); ++a)
    offsets_[a + 1] = offsets_[a] + dims_[a] * dims_[a];
}

std::array<std::size_t, 3> MatrixUnitBasis::label(std::size_t p) const {
  std::size_t a = 0;
  while (offsets_[a + 1] <= p) ++a;
  const std::size_t r = p - offsets_[a];
  return {a, r / dims_[a], r % dims_[a]};
}

Vec MatrixUnitBasis::coords(const EndFElement& x) const {
  if (x.blocks.size() != dims_.size()) throw ShapeError("block count mismatch");
  Vec v(size());
  for (std::size_t a = 0; a < dims_.size(); ++a)
    for (std::size_t i = 0; i < dims_[a]; ++i)
      for (std::size_t j = 0; j < dims_[a]; ++j) v[index(a, i, j)] = x.blocks[a](i, j);
  return v;
}

EndFElement MatrixUnitBasis::element(const Vec& coords) const {
  if (coords.size() != size()) throw ShapeError("coordinate length mismatch");
  EndFElement x = EndFElement::zero(dims_);
  for (std::size_t a = 0; a < dims_.size(); ++a)
    for (std::size_t i = 0; i < dims_[a]; ++i)
      for (std::size_t j = 0; j < dims_[a]; ++j) x.blocks[a](i, j) = coords[index(a, i, j)];
  return x;
}

Matrix sweedler_split(const Matrix& m, std::size_t da, std::size_t db) {
  if (m.rows() != da * db || m.cols() != da * db) throw ShapeError("sweedler_split shape");
  Matrix c(da * da, db * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          c(i * da + j, k * db + l) = m(i * db + k, j * db + l);
  return c;
}

Matrix sweedler_merge(const Matrix& c, std::size_t da, std::size_t db) {
  if (c.rows() != da * da || c.cols() != db * db) throw ShapeError("sweedler_merge shape");
  Matrix m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          m(i * db + k, j * db + l) = c(i * da + j, k * db + l);
  return m;
}

AlgebraPresentation endf_algebra(const FusionSkeleton& k, const FiberData& fiber) {
  validate_shapes(k, fiber);
  const MatrixUnitBasis basis(fiber.dims);
  AlgebraPresentation alg = AlgebraPresentation::zeros(basis.size());
  for (std::size_t a = 0; a < fiber.dims.size(); ++a) {
    const std::size_t d = fiber.dims[a];
    for (std::size_t i = 0; i < d; ++i) {
      alg.unit[basis.index(a, i, i)] = Scalar(1);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l)
          alg.m(basis.index(a, i, j), basis.index(a, j, l), basis.index(a, i, l)) = Scalar(1);
    }
  }
  return alg;
}

Matrix comultiplication_block(const FusionSkeleton& k, const FiberData& fiber,
                              const EndFElement& eta, std::size_t a, std::size_t b) {
  validate_shapes(k, fiber);
  check_blocks(fiber, eta);
  const Matrix& j = fiber.J(a, b);
  const auto jinv = inverse(j);
  if (!jinv) throw NonInvertibleJ("J is singular");
  return *jinv * realized_action(k, eta, a, b) * j;
}

Vec comultiplication(const FusionSkeleton& k, const FiberData& fiber, const EndFElement& eta) {
  const MatrixUnitBasis basis(fiber.dims);
  const std::size_t n = basis.size();
  Vec out(n * n);
  for (std::size_t a = 0; a < k.rank(); ++a)
    for (std::size_t b = 0; b < k.rank(); ++b) {
      const Matrix c = sweedler_split(comultiplication_block(k, fiber, eta, a, b),
                                      fiber.dims[a], fiber.dims[b]);
      const std::size_t da = fiber.dims[a], db = fiber.dims[b];
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t jj = 0; jj < da; ++jj)
          for (std::size_t kk = 0; kk < db; ++kk)
            for (std::size_t l = 0; l < db; ++l)
              out[basis.index(a, i, jj) * n + basis.index(b, kk, l)] =
                  c(i * da + jj, kk * db + l);
    }
  return out;
}

Scalar counit(const FusionSkeleton& k, const FiberData& fiber, const EndFElement& eta) {
  check_blocks(fiber, eta);
  if (fiber.dims[k.unit] != 1) throw ShapeError("the unit must have fiber dimension 1");
  return eta.blocks[k.unit](0, 0);
}

EndFElement antipode(const FusionSkeleton& k, const FiberData& fiber, const EndFElement& eta) {
  check_blocks(fiber, eta);
  const auto deltas = compute_delta(k, fiber);
  EndFElement out;
  for (std::size_t a = 0; a < k.rank(); ++a) {
    const Matrix& d = deltas[a];
    out.blocks.push_back((d * eta.blocks[k.dual[a]] * *inverse(d)).transpose());
  }
  return out;
}

HopfPresentation reconstruct_hopf(const FusionSkeleton& k, const FiberData& fiber) {
  validate_shapes(k, fiber);
  const auto& dims = fiber.dims;
  const std::size_t r = k.rank();
  const MatrixUnitBasis basis(dims);
  const std::size_t n = basis.size();
  const auto jinv = tensorator_inverses(k, fiber);
  const auto deltas = compute_delta(k, fiber);

  HopfPresentation h;
  h.alg = endf_algebra(k, fiber);
  h.comult.assign(n * n * n, Scalar());
  h.counit.assign(n, Scalar());
  h.antipode = Matrix(n, n);

  // Delta(E^{(c)}_{pq}) on the (a,b) component is
  // J^{-1} [sum_mu E_pq in copy mu of F(c)] J, then split into E^a (x) E^b.
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Matrix& j = fiber.J(a, b);
      const Matrix& ji = jinv[a * r + b];
      const auto off = block_offsets(k, dims, a, b);
      const std::size_t da = dims[a], db = dims[b], dab = da * db;
      for (std::size_t c = 0; c < r; ++c) {
        const std::size_t dc = dims[c];
        for (std::size_t p = 0; p < dc; ++p)
          for (std::size_t q = 0; q < dc; ++q) {
            Matrix m(dab, dab);
            for (int mu = 0; mu < k.N(a, b, c); ++mu) {
              const std::size_t row = off[c] + std::size_t(mu) * dc + p;
              const std::size_t col = off[c] + std::size_t(mu) * dc + q;
              for (std::size_t x = 0; x < dab; ++x) {
                if (ji(x, row).is_zero()) continue;
                for (std::size_t y = 0; y < dab; ++y)
                  if (!j(col, y).is_zero()) m(x, y) += ji(x, row) * j(col, y);
              }
            }
            const std::size_t src = basis.index(c, p, q);
            for (std::size_t i = 0; i < da; ++i)
              for (std::size_t jj = 0; jj < da; ++jj)
                for (std::size_t kk = 0; kk < db; ++kk)
                  for (std::size_t l = 0; l < db; ++l) {
                    const Scalar& v = m(i * db + kk, jj * db + l);
                    if (!v.is_zero())
                      h.delta(src, basis.index(a, i, jj), basis.index(b, kk, l)) = v;
                  }
          }
      }
    }

  h.counit[basis.index(k.unit, 0, 0)] = Scalar(1);

  // S(E^{(c)}_{pq})_a = transpose(delta_a E_pq delta_a^{-1}) for every a with a* = c.
  for (std::size_t a = 0; a < r; ++a) {
    const std::size_t c = k.dual[a];
    const Matrix& d = deltas[a];
    const Matrix di = *inverse(d);
    const std::size_t da = dims[a];
    for (std::size_t p = 0; p < dims[c]; ++p)
      for (std::size_t q = 0; q < dims[c]; ++q) {
        const std::size_t src = basis.index(c, p, q);
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t jj = 0; jj < da; ++jj)
            h.antipode(basis.index(a, i, jj), src) += d(jj, p) * di(q, i);
      }
  }

  Report report = check_hopf(h);
  CheckRecord inv{"antipode.invertible"};
  if (!inverse(h.antipode)) inv.fail({}, "singular", "invertible");
  report.add(std::move(inv));
  if (!report.passed()) throw ReconstructionAxiomFailure(std::move(report));
  return h;
}

std::vector<std::size_t> SliceMorphismData::source_dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : tau) d.push_back(t.rows());
  return d;
}

EndFElement transport_along(const SliceMorphismData& t, const EndFElement& target_eta) {
  if (target_eta.blocks.size() != t.target_dims.size())
    throw ShapeError("target element has the wrong number of blocks");
  for (std::size_t c = 0; c < t.target_dims.size(); ++c)
    if (target_eta.blocks[c].rows() != t.target_dims[c])
      throw ShapeError("target block " + std::to_string(c) + " has the wrong size");
  if (t.multiplicity.size() != t.tau.size())
    throw ShapeError("multiplicity and tau must list the same source simples");
  EndFElement out;
  for (std::size_t a = 0; a < t.tau.size(); ++a) {
    std::vector<Matrix> blocks;
    std::size_t size = 0;
    if (t.multiplicity[a].size() != t.target_dims.size())
      throw ShapeError("multiplicity row " + std::to_string(a) + " has the wrong length");
    for (std::size_t c = 0; c < t.target_dims.size(); ++c)
      for (std::size_t mu = 0; mu < t.multiplicity[a][c]; ++mu) {
        blocks.push_back(target_eta.blocks[c]);
        size += t.target_dims[c];
      }
    const Matrix& tau = t.tau[a];
    if (!tau.is_square() || tau.rows() != size)
      throw ShapeError("tau_" + std::to_string(a) + " must be " + std::to_string(size) + "x" +
                       std::to_string(size));
    const auto tau_inv = inverse(tau);
    if (!tau_inv) throw ShapeError("tau_" + std::to_string(a) + " is not invertible");
    out.blocks.push_back(*tau_inv * direct_sum(blocks) * tau);
  }
  return out;
}

SliceMorphismData identity_slice_morphism(const std::vector<std::size_t>& dims) {
  SliceMorphismData t;
  t.target_dims = dims;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    std::vector<std::size_t> row(dims.size(), 0);
    row[a] = 1;
    t.multiplicity.push_back(std::move(row));
    t.tau.push_back(Matrix::identity(dims[a]));
  }
  return t;
}

SliceMorphismData compose(const SliceMorphismData& t1, const SliceMorphismData& t2) {
  const auto& mid = t1.target_dims;
  const auto& fin = t2.target_dims;
  if (t2.tau.size() != mid.size())
    throw ShapeError("composite: source of the second morphism is not the target of the first");
  SliceMorphismData out;
  out.target_dims = fin;
  for (std::size_t a = 0; a < t1.tau.size(); ++a) {
    std::vector<std::size_t> mult(fin.size(), 0);
    for (std::size_t c = 0; c < mid.size(); ++c)
      for (std::size_t d = 0; d < fin.size(); ++d)
        mult[d] += t1.multiplicity[a][c] * t2.multiplicity[c][d];

    // After sum_c I (x) tau2_c the rows run over (c, mu1, d, mu2, y);
    // regroup them as (d, c, mu1, mu2, y).
    std::vector<Matrix> blocks;
    for (std::size_t c = 0; c < mid.size(); ++c)
      for (std::size_t mu = 0; mu < t1.multiplicity[a][c]; ++mu) blocks.push_back(t2.tau[c]);
    const Matrix stacked = direct_sum(blocks) * t1.tau[a];

    std::vector<std::size_t> out_off(fin.size() + 1, 0);
    for (std::size_t d = 0; d < fin.size(); ++d) out_off[d + 1] = out_off[d] + mult[d] * fin[d];
    Matrix tau(stacked.rows(), stacked.cols());
    std::size_t src_row = 0;
    std::vector<std::size_t> copies_before(fin.size(), 0);
    for (std::size_t c = 0; c < mid.size(); ++c) {
      for (std::size_t mu1 = 0; mu1 < t1.multiplicity[a][c]; ++mu1) {
        for (std::size_t d = 0; d < fin.size(); ++d) {
          const std::size_t m2 = t2.multiplicity[c][d];
          for (std::size_t mu2 = 0; mu2 < m2; ++mu2) {
            const std::size_t copy = copies_before[d] + mu1 * m2 + mu2;
            for (std::size_t y = 0; y < fin[d]; ++y) {
              const std::size_t dst = out_off[d] + copy * fin[d] + y;
              for (std::size_t col = 0; col < stacked.cols(); ++col)
                tau(dst, col) = stacked(src_row, col);
              ++src_row;
            }
          }
        }
      }
      for (std::size_t d = 0; d < fin.size(); ++d)
        copies_before[d] += t1.multiplicity[a][c] * t2.multiplicity[c][d];
    }
    out.multiplicity.push_back(std::move(mult));
    out.tau.push_back(std::move(tau));
  }
  return out;
}

Matrix transport_matrix(const SliceMorphismData& t) {
  const MatrixUnitBasis src(t.source_dims());
  const MatrixUnitBasis tgt(t.target_dims);
  Matrix m(src.size(), tgt.size());
  for (std::size_t p = 0; p < tgt.size(); ++p) {
    const auto [c, i, j] = tgt.label(p);
    const Vec v = src.coords(transport_along(t, EndFElement::unit(t.target_dims, c, i, j)));
    for (std::size_t r = 0; r < v.size(); ++r) m(r, p) = v[r];
  }
  return m;
}

Report check_transport_homomorphism(const SliceMorphismData& t) {
  const auto src_dims = t.source_dims();
  const MatrixUnitBasis tgt(t.target_dims);
  Report report("transport");
  CheckRecord unital{"transport.unital"};
  const EndFElement one = transport_along(t, EndFElement::identity(t.target_dims));
  if (one != EndFElement::identity(src_dims)) unital.fail({}, "image of 1", "1");
  report.add(std::move(unital));

  CheckRecord mult{"transport.multiplicative"};
  std::vector<EndFElement> images;
  for (std::size_t p = 0; p < tgt.size(); ++p) {
    const auto [c, i, j] = tgt.label(p);
    images.push_back(transport_along(t, EndFElement::unit(t.target_dims, c, i, j)));
  }
  for (std::size_t p = 0; p < tgt.size(); ++p)
    for (std::size_t q = 0; q < tgt.size(); ++q) {
      const auto [c1, i1, j1] = tgt.label(p);
      const auto [c2, i2, j2] = tgt.label(q);
      EndFElement prod = EndFElement::zero(t.target_dims);
      if (c1 == c2 && j1 == i2) prod = EndFElement::unit(t.target_dims, c1, i1, j2);
      if (transport_along(t, prod) != images[p] * images[q])
        mult.fail({long(p), long(q)}, "T(xy)", "T(x)T(y)");
    }
  report.add(std::move(mult));
  return report;
}

std::vector<ModuleRep> zeta_modules(const FusionSkeleton& k, const FiberData& fiber,
                                    const HopfPresentation& h) {
  const MatrixUnitBasis basis(fiber.dims);
  if (h.dim() != basis.size())
    throw ShapeError("Hopf algebra is not End(F) of this fiber functor");
  std::vector<ModuleRep> mods;
  for (std::size_t a = 0; a < k.rank(); ++a) {
    ModuleRep v;
    v.dim = fiber.dims[a];
    v.label = k.simples[a];
    for (std::size_t p = 0; p < basis.size(); ++p) {
      const auto [b, i, j] = basis.label(p);
      Matrix m(v.dim, v.dim);
      if (b == a) m(i, j) = Scalar(1);
      v.action.push_back(std::move(m));
    }
    mods.push_back(std::move(v));
  }
  const Report report = verify_irreps(h, mods);
  if (!report.passed())
    throw Error("zeta modules failed " + report.first_failure()->name);
  return mods;
}

}  // namespace hopfrec
