#include <catch_amalgamated.hpp>

#include <random>

#include "hopfrec/errors.hpp"
#include "hopfrec/examples.hpp"
#include "hopfrec/reconstruct.hpp"
#include "hopfrec/repcat.hpp"
#include "oracle.hpp"

using namespace hopfrec;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(-4, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

SliceMorphismData forget(const std::vector<std::size_t>& dims) {
  SliceMorphismData t;
  t.target_dims = {1};
  for (std::size_t d : dims) {
    t.multiplicity.push_back({d});
    t.tau.push_back(Matrix::identity(d));
  }
  return t;
}

SliceMorphismData unit_inclusion(const std::vector<std::size_t>& dims, std::size_t unit) {
  SliceMorphismData t;
  t.target_dims = dims;
  std::vector<std::size_t> row(dims.size(), 0);
  row[unit] = 1;
  t.multiplicity.push_back(row);
  t.tau.push_back(Matrix::identity(1));
  return t;
}

}  // namespace

TEST_CASE("End(F) of strict Vec_G is Fun(G)") {
  for (const GroupTable& g : {cyclic_group(2), cyclic_group(3), direct_product(cyclic_group(2), cyclic_group(2))}) {
    const std::size_t n = g.order();
    const PointedCategory pc = gen_pointed_category(g, ThreeCochain(n * n * n, 1));
    const HopfPresentation h = reconstruct_hopf(pc.skeleton, *pc.fiber);
    CHECK(h == gen_function_algebra(g));
    CHECK(!oracle::hopf_violation(oracle::from(h)));
  }
}

TEST_CASE("Sweedler identification is a bijection") {
  std::mt19937 rng(5);
  for (auto [da, db] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {3, 2}, {2, 2}}) {
    const Matrix m = random_matrix(rng, da * db, da * db);
    const Matrix c = sweedler_split(m, da, db);
    CHECK(sweedler_merge(c, da, db) == m);
    // E_ij (x) E_kl corresponds to the Kronecker product of the units.
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k)
          for (std::size_t l = 0; l < db; ++l) CHECK(c(i * da + j, k * db + l) == m(i * db + k, j * db + l));
  }
}

TEST_CASE("EndF element algebra") {
  const std::vector<std::size_t> dims{1, 2};
  const EndFElement e = EndFElement::unit(dims, 1, 0, 1);
  const EndFElement f = EndFElement::unit(dims, 1, 1, 0);
  CHECK(e * f == EndFElement::unit(dims, 1, 0, 0));
  CHECK(e * e == EndFElement::zero(dims));
  CHECK(EndFElement::identity(dims) * e == e);
  const MatrixUnitBasis basis(dims);
  CHECK(basis.size() == 5);
  CHECK(basis.index(1, 1, 0) == 3);
  CHECK(basis.label(3) == std::array<std::size_t, 3>{1, 1, 0});
  CHECK(basis.element(basis.coords(e + Scalar(3) * f)) == e + Scalar(3) * f);
}

TEST_CASE("reconstruction from K[S3] data") {
  const HopfPresentation k = gen_group_algebra(symmetric_group(3));
  const auto mods = *group_algebra_irreps(symmetric_group(3));
  const auto [skel, fiber] = skeletalize(k, mods);
  const HopfPresentation h = reconstruct_hopf(skel, fiber);
  CHECK(h.dim() == 6);
  CHECK(check_hopf(h).passed());
  CHECK(!oracle::hopf_violation(oracle::from(h)));
  // Delta of the identity element is 1 (x) 1 on every (a,b) block.
  const EndFElement one = EndFElement::identity(fiber.dims);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(comultiplication_block(skel, fiber, one, a, b).is_identity());
  CHECK(counit(skel, fiber, one) == Scalar(1));
  CHECK(antipode(skel, fiber, one) == one);

  const auto z = zeta_modules(skel, fiber, h);
  CHECK(z.size() == 3);
  CHECK(verify_irreps(h, z).passed());
}

TEST_CASE("a tensorator failing the hexagon does not reconstruct") {
  const auto mods = *group_algebra_irreps(symmetric_group(3));
  auto [k, f] = skeletalize(gen_group_algebra(symmetric_group(3)), mods);
  // Shear J(std, std): still invertible, no longer an intertwiner.
  f.J(2, 2) = f.J(2, 2) * (Matrix::identity(4) + Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(!verify_tensorator(k, f).passed());
  CHECK_THROWS_AS(reconstruct_hopf(k, f), ReconstructionAxiomFailure);
  try {
    reconstruct_hopf(k, f);
  } catch (const ReconstructionAxiomFailure& e) {
    CHECK(!e.report().find("bialgebra.coassociativity")->passed());
  }
}

TEST_CASE("transport along identities and composites") {
  const auto mods = *group_algebra_irreps(symmetric_group(3));
  const auto [skel, fiber] = skeletalize(gen_group_algebra(symmetric_group(3)), mods);
  const auto& dims = fiber.dims;

  const SliceMorphismData id = identity_slice_morphism(dims);
  CHECK(transport_matrix(id).is_identity());
  CHECK(check_transport_homomorphism(id).passed());

  // Rep(S3) -> Vec -> Rep(S3): std goes to two copies of the unit.
  const SliceMorphismData f = forget(dims);
  const SliceMorphismData u = unit_inclusion(dims, skel.unit);
  const SliceMorphismData fu = compose(f, u);
  CHECK(fu.multiplicity[2][skel.unit] == 2);
  CHECK(transport_matrix(fu) == transport_matrix(f) * transport_matrix(u));
  CHECK(check_transport_homomorphism(fu).passed());

  const SliceMorphismData uf = compose(u, f);
  CHECK(transport_matrix(uf) == transport_matrix(u) * transport_matrix(f));
  CHECK(transport_matrix(uf).is_identity());

  // A non-identity tau on the same functor.
  SliceMorphismData twisted = id;
  twisted.tau[2] = Matrix{{1, 1}, {0, 1}};
  CHECK(check_transport_homomorphism(twisted).passed());
  CHECK(transport_matrix(compose(twisted, f)) == transport_matrix(twisted) * transport_matrix(f));
  CHECK(transport_matrix(compose(id, twisted)) == transport_matrix(twisted));
}

TEST_CASE("transport rejects malformed data") {
  SliceMorphismData t = identity_slice_morphism({1, 2});
  t.tau[1] = Matrix{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(transport_matrix(t), ShapeError);
}
