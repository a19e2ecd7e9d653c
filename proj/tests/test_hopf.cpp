#include <catch_amalgamated.hpp>

#include "hopfrec/errors.hpp"
#include "hopfrec/examples.hpp"
#include "hopfrec/hopf.hpp"
#include "oracle.hpp"

using namespace hopfrec;

namespace {

// K[Z/2] written out by hand: basis 1, g.
HopfPresentation hand_kz2() {
  HopfPresentation h = HopfPresentation::zeros(2);
  h.alg.m(0, 0, 0) = 1;
  h.alg.m(0, 1, 1) = 1;
  h.alg.m(1, 0, 1) = 1;
  h.alg.m(1, 1, 0) = 1;
  h.alg.unit = {1, 0};
  h.delta(0, 0, 0) = 1;
  h.delta(1, 1, 1) = 1;
  h.counit = {1, 1};
  h.antipode = Matrix::identity(2);
  return h;
}

bool all_pass(const HopfPresentation& h) { return check_hopf(h).passed(); }

}  // namespace

TEST_CASE("K[Z/2] matches the hand expansion and passes") {
  const HopfPresentation h = gen_group_algebra(cyclic_group(2));
  CHECK(h == hand_kz2());
  const Report r = check_hopf(h);
  CHECK(r.passed());
  for (const char* name :
       {"algebra.associativity", "algebra.left_unit", "algebra.right_unit",
        "bialgebra.coassociativity", "bialgebra.left_counit", "bialgebra.right_counit",
        "bialgebra.comult_multiplicative", "bialgebra.comult_unit",
        "bialgebra.counit_multiplicative", "bialgebra.counit_unit", "antipode.left_snake",
        "antipode.right_snake"}) {
    const CheckRecord* rec = r.find(name);
    REQUIRE(rec);
    CHECK(rec->failures.empty());
  }
}

TEST_CASE("trivial group algebra has dimension 1") {
  const HopfPresentation h = gen_group_algebra(trivial_group());
  CHECK(h.dim() == 1);
  CHECK(all_pass(h));
}

TEST_CASE("generated Hopf algebras agree with the oracle") {
  const GroupTable z2 = cyclic_group(2), s3 = symmetric_group(3);
  for (const HopfPresentation& h :
       {gen_group_algebra(z2), gen_group_algebra(direct_product(z2, z2)),
        gen_group_algebra(s3), gen_group_algebra(cyclic_group(5)), gen_function_algebra(z2),
        gen_function_algebra(s3), gen_drinfeld_double(z2), gen_drinfeld_double(s3)}) {
    CHECK(all_pass(h));
    CHECK(!oracle::hopf_violation(oracle::from(h)));
  }
}

TEST_CASE("function algebra coproduct") {
  const HopfPresentation f = gen_function_algebra(cyclic_group(2));
  // Delta(delta_0) = delta_0 (x) delta_0 + delta_1 (x) delta_1
  CHECK(f.comultiply({1, 0}) == Vec{1, 0, 0, 1});
  Scalar e_of_unit = 0;
  for (std::size_t i = 0; i < 2; ++i) e_of_unit += f.counit[i] * f.alg.unit[i];
  CHECK(e_of_unit == Scalar(1));
}

TEST_CASE("Fun(S3) is not cocommutative") {
  const GroupTable s3 = symmetric_group(3);
  const HopfPresentation f = gen_function_algebra(s3);
  const std::size_t n = s3.order();
  // Pick a, b with ab != ba; delta_{ab} has a (x) b in its coproduct but the
  // flipped term b (x) a is absent.
  std::size_t a = 0, b = 0;
  for (std::size_t x = 0; x < n && a == b; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s3.mul(x, y) != s3.mul(y, x)) {
        a = x;
        b = y;
        break;
      }
  REQUIRE(a != b);
  const std::size_t ab = s3.mul(a, b);
  CHECK(f.delta(ab, a, b) == Scalar(1));
  CHECK(f.delta(ab, b, a) == Scalar(0));
}

TEST_CASE("D(Z/2) is Fun(Z/2) (x) K[Z/2] entrywise") {
  const GroupTable z2 = cyclic_group(2);
  const HopfPresentation d = gen_drinfeld_double(z2);
  CHECK(d.dim() == 4);
  CHECK(d == tensor_hopf(gen_function_algebra(z2), gen_group_algebra(z2)));
  CHECK(gen_drinfeld_double(trivial_group()).dim() == 1);
  CHECK(gen_drinfeld_double(symmetric_group(3)).dim() == 36);
}

TEST_CASE("K[G] and Fun(G) are dual under <g, delta_h> = [g = h]") {
  for (const GroupTable& g : {cyclic_group(2), symmetric_group(3)}) {
    const HopfPresentation k = gen_group_algebra(g), f = gen_function_algebra(g);
    const std::size_t n = g.order();
    // With the pairing the identity matrix, duality means the structure
    // tensors transpose into each other.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          CHECK(k.alg.m(i, j, l) == f.delta(l, i, j));
          CHECK(f.alg.m(i, j, l) == k.delta(l, i, j));
        }
    CHECK(k.alg.unit == f.counit);
    CHECK(f.alg.unit == k.counit);
    CHECK(k.antipode.transpose() == f.antipode);
  }
}

TEST_CASE("every +1 mutation of K[Z/2] is caught") {
  const HopfPresentation base = gen_group_algebra(cyclic_group(2));
  int caught = 0, total = 0;
  auto probe = [&](HopfPresentation h) {
    ++total;
    const bool ours = !check_hopf(h).passed();
    const bool theirs = oracle::hopf_violation(oracle::from(h)).has_value();
    CHECK(ours == theirs);
    caught += ours;
  };
  for (std::size_t i = 0; i < 8; ++i) {
    HopfPresentation h = base;
    h.alg.mult[i] += 1;
    probe(h);
    h = base;
    h.comult[i] += 1;
    probe(h);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    HopfPresentation h = base;
    h.counit[i] += 1;
    probe(h);
    h = base;
    h.alg.unit[i] += 1;
    probe(h);
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      HopfPresentation h = base;
      h.antipode(i, j) += 1;
      probe(h);
    }
  CHECK(caught == total);
}

TEST_CASE("failure records name tuples and both sides") {
  HopfPresentation h = gen_group_algebra(cyclic_group(2));
  // g * 1 = g + 1: (g 1) 1 = g + 2 but g (1 1) = g + 1.
  h.alg.m(1, 0, 0) = 1;
  const Report r = check_hopf(h);
  const CheckRecord* assoc = r.find("algebra.associativity");
  REQUIRE(assoc);
  REQUIRE(!assoc->failures.empty());
  CHECK(assoc->failures.front().lhs != assoc->failures.front().rhs);
  CHECK(assoc->failures.front().indices.size() == 4);
}

TEST_CASE("antipode side properties are informational") {
  const Report r = check_antipode(gen_drinfeld_double(symmetric_group(3)));
  for (const char* name : {"antipode.anti_multiplicative", "antipode.anti_comultiplicative",
                           "antipode.involutive"}) {
    const CheckRecord* rec = r.find(name);
    REQUIRE(rec);
    CHECK(rec->informational);
    CHECK(rec->note == "holds");
  }
}

TEST_CASE("Hopf morphisms") {
  const HopfPresentation k = gen_group_algebra(symmetric_group(3));
  CHECK(check_hopf_morphism(k, k, Matrix::identity(6)).passed());
  // A basis permutation is an isomorphism onto the permuted presentation.
  const std::vector<std::size_t> perm{5, 3, 1, 0, 2, 4};
  const HopfPresentation p = permute_basis(k, perm);
  CHECK(check_hopf(p).passed());
  Matrix phi(6, 6);
  for (std::size_t q = 0; q < 6; ++q) phi(q, perm[q]) = 1;
  CHECK(check_hopf_morphism(k, p, phi).passed());
  // Collapsing everything onto the unit is not bijective.
  Matrix collapse(6, 6);
  for (std::size_t i = 0; i < 6; ++i) collapse(0, i) = 1;
  const Report bad = check_hopf_morphism(k, k, collapse);
  CHECK(!bad.passed());
  CHECK(!bad.find("morphism.bijective")->passed());
}

TEST_CASE("shape validation") {
  HopfPresentation h = gen_group_algebra(cyclic_group(2));
  h.comult.pop_back();
  CHECK_THROWS_AS(validate_shapes(h), ShapeError);
}
