#include "hopfrec/repcat.hpp"

#include "hopfrec/reconstruct.hpp"

namespace hopfrec {

namespace {

void check_action_shapes(const HopfPresentation& h, const ModuleRep& v) {
  if (v.dim == 0) throw ShapeError("module dimension must be positive");
  if (v.action.size() != h.dim())
    throw ShapeError("module '" + v.label + "' has " + std::to_string(v.action.size()) +
                     " action matrices, expected " + std::to_string(h.dim()));
  for (const auto& m : v.action)
    if (m.rows() != v.dim || m.cols() != v.dim)
      throw ShapeError("module '" + v.label + "' action matrices must be " +
                       std::to_string(v.dim) + "x" + std::to_string(v.dim));
}

std::string module_name(const ModuleRep& v, std::size_t index) {
  return v.label.empty() ? "V" + std::to_string(index) : v.label;
}

}  // namespace

Matrix act(const ModuleRep& v, const Vec& coeff) {
  Matrix out(v.dim, v.dim);
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (!coeff[i].is_zero()) out = out + coeff[i] * v.action[i];
  return out;
}

Report check_module(const AlgebraPresentation& a, const ModuleRep& v, const std::string& name) {
  Report report("check_module");
  CheckRecord rec{"module.representation"};
  if (v.action.size() != a.dim) {
    rec.fail({}, name + ": " + std::to_string(v.action.size()) + " action matrices",
             std::to_string(a.dim));
    report.add(std::move(rec));
    return report;
  }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod(a.dim);
      for (std::size_t k = 0; k < a.dim; ++k) prod[k] = a.m(i, j, k);
      const Matrix lhs = v.action[i] * v.action[j];
      const Matrix rhs = act(v, prod);
      if (lhs != rhs) rec.fail({long(i), long(j)}, lhs.to_string(), rhs.to_string());
    }
  const Matrix one = act(v, a.unit);
  if (!one.is_identity()) rec.fail({-1}, one.to_string(), "identity");
  report.add(std::move(rec));
  return report;
}

ModuleRep tensor_module(const HopfPresentation& h, const ModuleRep& v, const ModuleRep& w) {
  check_action_shapes(h, v);
  check_action_shapes(h, w);
  const std::size_t n = h.dim();
  ModuleRep out;
  out.dim = v.dim * w.dim;
  out.label = v.label + "*" + w.label;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(out.dim, out.dim);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = h.delta(i, j, k);
        if (!c.is_zero()) m = m + c * kron(v.action[j], w.action[k]);
      }
    out.action.push_back(std::move(m));
  }
  return out;
}

ModuleRep trivial_module(const HopfPresentation& h) {
  ModuleRep out;
  out.dim = 1;
  out.label = "1";
  for (std::size_t i = 0; i < h.dim(); ++i) out.action.push_back(Matrix{{h.counit[i]}});
  return out;
}

ModuleRep dual_module(const HopfPresentation& h, const ModuleRep& v) {
  check_action_shapes(h, v);
  ModuleRep out;
  out.dim = v.dim;
  out.label = v.label + "^*";
  for (std::size_t i = 0; i < h.dim(); ++i)
    out.action.push_back(act(v, h.antipode.col(i)).transpose());
  return out;
}

std::vector<Matrix> hom_space(const HopfPresentation& h, const ModuleRep& v,
                              const ModuleRep& w) {
  check_action_shapes(h, v);
  check_action_shapes(h, w);
  const std::size_t dv = v.dim, dw = w.dim, unknowns = dv * dw;
  // rho_W(e_i) X - X rho_V(e_i) = 0 with X row-major, X[r][c] at r*dv + c.
  Matrix system(h.dim() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Matrix& rw = w.action[i];
    const Matrix& rv = v.action[i];
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c, ++row) {
        for (std::size_t k = 0; k < dw; ++k)
          if (!rw(r, k).is_zero()) system(row, k * dv + c) += rw(r, k);
        for (std::size_t k = 0; k < dv; ++k)
          if (!rv(k, c).is_zero()) system(row, r * dv + k) -= rv(k, c);
      }
  }
  const Matrix kernel = mat_kernel(system);
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    Matrix x(dw, dv);
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) x(r, c) = kernel(r * dv + c, j);
    basis.push_back(std::move(x));
  }
  return basis;
}

Report verify_irreps(const HopfPresentation& h, const std::vector<ModuleRep>& mods) {
  validate_shapes(h);
  for (const auto& v : mods) check_action_shapes(h, v);
  Report report("verify_irreps");

  CheckRecord rep{"irreps.representation"};
  for (std::size_t a = 0; a < mods.size(); ++a) {
    const Report r = check_module(h.alg, mods[a], module_name(mods[a], a));
    for (const auto& f : r.records().front().failures) {
      std::vector<long> idx{long(a)};
      idx.insert(idx.end(), f.indices.begin(), f.indices.end());
      rep.fail(std::move(idx), f.lhs, f.rhs);
    }
  }
  const bool representations_ok = rep.passed();
  report.add(std::move(rep));

  CheckRecord schur{"irreps.schur"};
  CheckRecord pairwise{"irreps.pairwise"};
  if (representations_ok) {
    for (std::size_t a = 0; a < mods.size(); ++a) {
      const std::size_t d = hom_space(h, mods[a], mods[a]).size();
      if (d != 1)
        schur.fail({long(a)}, "dim End(" + module_name(mods[a], a) + ") = " + std::to_string(d),
                   "1");
      for (std::size_t b = a + 1; b < mods.size(); ++b) {
        const std::size_t e = hom_space(h, mods[a], mods[b]).size();
        if (e != 0)
          pairwise.fail({long(a), long(b)},
                        "dim Hom(" + module_name(mods[a], a) + ", " + module_name(mods[b], b) +
                            ") = " + std::to_string(e),
                        "0");
      }
    }
  } else {
    schur.fail({}, "skipped", "valid representations");
  }
  report.add(std::move(schur));
  report.add(std::move(pairwise));

  CheckRecord complete{"irreps.complete"};
  std::size_t total = 0;
  for (const auto& v : mods) total += v.dim * v.dim;
  if (total != h.dim()) complete.fail({}, "sum d^2 = " + std::to_string(total),
                                      "dim H = " + std::to_string(h.dim()));
  report.add(std::move(complete));
  return report;
}

void require_irreps(const HopfPresentation& h, const std::vector<ModuleRep>& mods) {
  const Report r = verify_irreps(h, mods);
  if (const auto* f = r.find("irreps.representation"); f && !f->passed())
    throw Error("module list fails the representation equations");
  if (const auto* f = r.find("irreps.schur"); f && !f->passed())
    throw NotSplitOrNotSemisimple("a listed module has commutant of dimension > 1");
  if (const auto* f = r.find("irreps.pairwise"); f && !f->passed())
    throw Incomplete("listed simples are not pairwise non-isomorphic");
  if (const auto* f = r.find("irreps.complete"); f && !f->passed())
    throw Incomplete("sum of squared dimensions differs from dim H");
}

std::vector<std::size_t> decompose(const HopfPresentation& h,
                                   const std::vector<ModuleRep>& mods, const ModuleRep& v) {
  std::vector<std::size_t> mult;
  std::size_t total = 0;
  for (const auto& c : mods) {
    mult.push_back(hom_space(h, c, v).size());
    total += mult.back() * c.dim;
  }
  if (total != v.dim)
    throw DecompositionGap("multiplicities account for " + std::to_string(total) + " of " +
                           std::to_string(v.dim) + " dimensions");
  return mult;
}

std::pair<FusionSkeleton, FiberData> skeletalize(const HopfPresentation& h,
                                                 const std::vector<ModuleRep>& mods) {
  require_irreps(h, mods);
  if (const Report anti = check_antipode(h); !anti.passed())
    throw SkeletalizationFailure("antipode axioms fail", anti);
  const std::size_t r = mods.size();

  FusionSkeleton k = FusionSkeleton::with_rank(r);
  bool found_unit = false;
  for (std::size_t a = 0; a < r && !found_unit; ++a) {
    if (mods[a].dim != 1) continue;
    bool trivial = true;
    for (std::size_t i = 0; i < h.dim() && trivial; ++i)
      trivial = mods[a].action[i](0, 0) == h.counit[i];
    if (trivial) {
      k.unit = a;
      found_unit = true;
    }
  }
  if (!found_unit)
    throw SkeletalizationFailure("no listed simple is the trivial module", Report());
  for (std::size_t a = 0; a < r; ++a) k.simples[a] = module_name(mods[a], a);

  FiberData fiber;
  for (const auto& v : mods) fiber.dims.push_back(v.dim);
  fiber.iota = Scalar(1);
  fiber.tensorator.resize(r * r);

  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const ModuleRep w = tensor_module(h, mods[a], mods[b]);
      Matrix j(w.dim, w.dim);
      std::size_t row = 0;
      for (std::size_t c = 0; c < r; ++c) {
        const auto basis = hom_space(h, w, mods[c]);
        k.N(a, b, c) = int(basis.size());
        for (const auto& x : basis)
          for (std::size_t y = 0; y < x.rows(); ++y, ++row) {
            if (row >= w.dim)
              throw SkeletalizationFailure("intertwiners overfill V_a (x) V_b", Report());
            for (std::size_t col = 0; col < w.dim; ++col) j(row, col) = x(y, col);
          }
      }
      if (row != w.dim || !inverse(j))
        throw SkeletalizationFailure("intertwiners into simples do not decompose " +
                                         w.label,
                                     Report());
      fiber.J(a, b) = std::move(j);
    }

  // F-symbols: the right composite equals (sum_d F(a,b,c,d) (x) I) times the left.
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        const Matrix left = left_composite(k, fiber, a, b, c);
        const Matrix right = right_composite(k, fiber, a, b, c);
        const auto big = mat_solve(left.transpose(), right.transpose());
        if (!big)
          throw SkeletalizationFailure("cannot solve for F-symbols", Report());
        const Matrix f_all = big->transpose();
        std::size_t off = 0;
        for (std::size_t d = 0; d < r; ++d) {
          const std::size_t m = k.left_multiplicity(a, b, c, d);
          Matrix f(m, m);
          for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
              f(p, q) = f_all(off + p * fiber.dims[d], off + q * fiber.dims[d]);
          k.F(a, b, c, d) = std::move(f);
          off += m * fiber.dims[d];
        }
      }

  for (std::size_t a = 0; a < r; ++a) {
    const ModuleRep dual = dual_module(h, mods[a]);
    bool matched = false;
    for (std::size_t c = 0; c < r && !matched; ++c) {
      if (mods[c].dim != dual.dim) continue;
      if (!hom_space(h, dual, mods[c]).empty()) {
        k.dual[a] = c;
        matched = true;
      }
    }
    if (!matched)
      throw SkeletalizationFailure("dual of " + k.simples[a] + " is not listed", Report());
  }

  fiber.ev_coeff.resize(r);
  fiber.coev_coeff.resize(r);
  for (std::size_t a = 0; a < r; ++a) {
    const std::size_t ad = k.dual[a];
    fiber.ev_coeff[a].assign(std::size_t(k.N(ad, a, k.unit)), Scalar());
    fiber.coev_coeff[a].assign(std::size_t(k.N(a, ad, k.unit)), Scalar());
    if (fiber.ev_coeff[a].empty() || fiber.coev_coeff[a].empty())
      throw SkeletalizationFailure("no evaluation for " + k.simples[a], Report());
    fiber.ev_coeff[a][0] = Scalar(1);
  }
  for (std::size_t a = 0; a < r; ++a) {
    const std::size_t ad = k.dual[a];
    const auto q = inverse(pairing_matrix(k, fiber, a));
    if (!q) throw SkeletalizationFailure("degenerate pairing for " + k.simples[a], Report());
    const std::size_t da = fiber.dims[a], dd = fiber.dims[ad];
    Matrix vec_q(da * dd, 1);
    for (std::size_t l = 0; l < da; ++l)
      for (std::size_t i = 0; i < dd; ++i) vec_q(l * dd + i, 0) = (*q)(l, i);
    const Matrix x = fiber.J(a, ad) * vec_q;
    const auto off = block_offsets(k, fiber.dims, a, ad);
    for (std::size_t row = 0; row < x.rows(); ++row) {
      const bool in_unit = row >= off[k.unit] && row < off[k.unit + 1];
      if (in_unit) {
        fiber.coev_coeff[a][row - off[k.unit]] = x(row, 0) / fiber.iota;
      } else if (!x(row, 0).is_zero()) {
        throw SkeletalizationFailure("copairing for " + k.simples[a] + " is not invariant",
                                     Report());
      }
    }
  }

  const Report check = verify_category(k, &fiber);
  if (!check.passed())
    throw SkeletalizationFailure("output fails " + check.first_failure()->name, check);
  return {std::move(k), std::move(fiber)};
}

Matrix gamma_matrix(const std::vector<ModuleRep>& mods, std::size_t algebra_dim) {
  std::vector<std::size_t> dims;
  for (const auto& v : mods) dims.push_back(v.dim);
  const MatrixUnitBasis basis(dims);
  Matrix g(basis.size(), algebra_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i)
    for (std::size_t a = 0; a < mods.size(); ++a)
      for (std::size_t p = 0; p < dims[a]; ++p)
        for (std::size_t q = 0; q < dims[a]; ++q)
          g(basis.index(a, p, q), i) = mods[a].action[i](p, q);
  return g;
}

void RoundTrip::require() const {
  if (const auto* f = report.first_failure()) throw RoundTripFailure(f->name, report);
}

RoundTrip gamma_roundtrip(const HopfPresentation& h, const std::vector<ModuleRep>& mods) {
  require_irreps(h, mods);
  RoundTrip out;
  out.gamma = gamma_matrix(mods, h.dim());
  auto [k, fiber] = skeletalize(h, mods);
  out.skeleton = std::move(k);
  out.fiber = std::move(fiber);
  out.reconstructed = reconstruct_hopf(out.skeleton, out.fiber);

  const Report morph = check_hopf_morphism(h, out.reconstructed, out.gamma);
  out.report = Report("roundtrip");
  const std::pair<const char*, const char*> names[] = {
      {"morphism.bijective", "gamma.bijective"},
      {"morphism.algebra", "gamma.algebra_hom"},
      {"morphism.coalgebra", "gamma.coalgebra_hom"},
      {"morphism.counit", "gamma.counit"},
      {"morphism.antipode", "gamma.antipode"}};
  for (const auto& [from, to] : names) {
    CheckRecord rec = *morph.find(from);
    rec.name = to;
    out.report.add(std::move(rec));
  }
  return out;
}

}  // namespace hopfrec
