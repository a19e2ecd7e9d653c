#include <catch_amalgamated.hpp>

#include <algorithm>

#include "hopfrec/errors.hpp"
#include "hopfrec/examples.hpp"
#include "hopfrec/repcat.hpp"

using namespace hopfrec;

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(GroupTable({}), Error);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(GroupTable({{0, 2}, {1, 0}}), Error);
  // A Latin square with identity that is not associative.
  CHECK_THROWS_AS(GroupTable({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 4, 0, 1, 3},
                              {3, 2, 4, 0, 1},
                              {4, 3, 1, 2, 0}}),
                  Error);
  const GroupTable z4 = cyclic_group(4);
  CHECK(z4.identity() == 0);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.is_abelian());
}

TEST_CASE("symmetric groups") {
  const GroupTable s3 = symmetric_group(3);
  const auto perms = permutations(3);
  CHECK(perms.front() == std::vector<std::size_t>{0, 1, 2});
  CHECK(perms[1] == std::vector<std::size_t>{0, 2, 1});
  CHECK(s3.names()[1] == "021");
  CHECK(!s3.is_abelian());
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t i = 0; i < 3; ++i)
        CHECK(perms[s3.mul(a, b)][i] == perms[a][perms[b][i]]);
  CHECK(symmetric_group(4).order() == 24);
}

TEST_CASE("direct product") {
  const GroupTable v = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(v.order() == 4);
  for (std::size_t a = 0; a < 4; ++a) CHECK(v.mul(a, a) == 0);
}

TEST_CASE("shipped irreps") {
  const GroupTable z2 = cyclic_group(2);
  for (const GroupTable& g : {z2, direct_product(z2, z2), symmetric_group(3), symmetric_group(4)}) {
    const auto mods = group_algebra_irreps(g);
    REQUIRE(mods);
    std::size_t sum = 0;
    for (const ModuleRep& v : *mods) {
      sum += v.dim * v.dim;
      for (const Matrix& m : v.action)
        for (const Scalar& s : m.entries()) CHECK(s.is_rational());
    }
    CHECK(sum == g.order());
    CHECK(verify_irreps(gen_group_algebra(g), *mods).passed());
  }
  const auto s4 = *group_algebra_irreps(symmetric_group(4));
  std::vector<std::size_t> dims;
  for (const auto& v : s4) dims.push_back(v.dim);
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 3});
}

TEST_CASE("characters of cyclic groups use roots of unity") {
  const GroupTable z4 = cyclic_group(4);
  const auto chars = abelian_characters(z4);
  REQUIRE(chars.size() == 4);
  bool has_i = false;
  for (const auto& c : chars) {
    CHECK(c[0] == Scalar(1));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) CHECK(c[z4.mul(a, b)] == c[a] * c[b]);
    has_i = has_i || c[1] == Scalar::zeta(4);
  }
  CHECK(has_i);
  CHECK(verify_irreps(gen_group_algebra(z4), *group_algebra_irreps(z4)).passed());
  CHECK_THROWS_AS(abelian_characters(symmetric_group(3)), Error);
  CHECK(!group_algebra_irreps(direct_product(symmetric_group(3), cyclic_group(2))));
}

TEST_CASE("function algebra and double irreps") {
  const GroupTable s3 = symmetric_group(3), z2 = cyclic_group(2);
  CHECK(verify_irreps(gen_function_algebra(s3), function_algebra_irreps(s3)).passed());
  const auto d = drinfeld_double_irreps(z2);
  CHECK(d.size() == 4);
  CHECK(verify_irreps(gen_drinfeld_double(z2), d).passed());
  CHECK_THROWS_AS(drinfeld_double_irreps(s3), Error);
}

TEST_CASE("pointed category structure") {
  const GroupTable z3 = cyclic_group(3);
  const PointedCategory pc = gen_pointed_category(z3, ThreeCochain(27, 1));
  const FusionSkeleton& k = pc.skeleton;
  CHECK(k.rank() == 3);
  CHECK(k.dual == std::vector<std::size_t>{0, 2, 1});
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        CHECK(k.N(a, b, c) == ((a + b) % 3 == c ? 1 : 0));
        for (std::size_t d = 0; d < 3; ++d)
          CHECK(k.F(a, b, c, d).rows() == ((a + b + c) % 3 == d ? 1u : 0u));
      }
  CHECK_THROWS_AS(gen_pointed_category(z3, ThreeCochain(8, 1)), ShapeError);
  ThreeCochain bad(27, 1);
  bad[0] = 2;
  CHECK_THROWS_AS(gen_pointed_category(z3, bad), NotACocycle);
}

TEST_CASE("example names are listed") {
  const auto& names = example_names();
  CHECK(std::find(names.begin(), names.end(), "ks3") != names.end());
  CHECK(std::find(names.begin(), names.end(), "vecz2-omega") != names.end());
}
