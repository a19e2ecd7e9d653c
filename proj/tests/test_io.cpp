#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "hopfrec/errors.hpp"
#include "hopfrec/examples.hpp"
#include "hopfrec/io.hpp"

using namespace hopfrec;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTinyHopf = R"({
  "kind": "hopf",
  "dim": 1,
  "mult": [[["1"]]],
  "unit": ["1"],
  "comult": [[["1"]]],
  "counit": ["1"],
  "antipode": [["1"]]
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("parse of serialize is the identity on every shipped example") {
  for (const std::string& name : example_names()) {
    INFO(name);
    const Document d = named_example(name);
    CHECK(parse_document(serialize(d)) == d);
  }
}

TEST_CASE("golden files are bit exact") {
  for (const std::string& name : example_names()) {
    INFO(name);
    const std::string golden = read_file(std::string(HOPFREC_GOLDEN_DIR) + "/" + name + ".json");
    CHECK(serialize(named_example(name)) == golden);
    CHECK(parse_document(golden) == named_example(name));
  }
}

TEST_CASE("K[Z/2] serializes to the documented layout") {
  const std::string text = serialize(named_example("kz2"));
  CHECK(text.find("\"kind\": \"hopf\"") != std::string::npos);
  CHECK(text.find("\"unit\": [\"1\", \"0\"]") != std::string::npos);
  CHECK(text.find("\"counit\": [\"1\", \"1\"]") != std::string::npos);
  const HopfDocument d = parse_as<HopfDocument>(text);
  CHECK(d.hopf == gen_group_algebra(cyclic_group(2)));
}

TEST_CASE("cyclotomic scalars round trip") {
  const GroupTable z3 = cyclic_group(3);
  ModulesDocument m{3, *group_algebra_irreps(z3)};
  const std::string text = serialize(m);
  CHECK(text.find("\"conductor\":3") != std::string::npos);
  CHECK(parse_as<ModulesDocument>(text) == m);

  HopfDocument h{gen_group_algebra(z3), {}};
  h.basis = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  CHECK(parse_as<HopfDocument>(serialize(h)) == h);
}

TEST_CASE("the tiny document parses") {
  const HopfDocument d = parse_as<HopfDocument>(kTinyHopf);
  CHECK(d.hopf == gen_group_algebra(trivial_group()));
  CHECK(d.basis.empty());
}

TEST_CASE("scalar with zero denominator is a parse error with position") {
  const std::string text = replace(kTinyHopf, R"("counit": ["1"])", R"("counit": ["1/0"])");
  try {
    parse_document(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 14);
  }
  CHECK_THROWS_AS(parse_document(replace(kTinyHopf, R"(["1"]])", R"(["x"]])")), ParseError);
}

TEST_CASE("malformed JSON is a parse error with position") {
  try {
    parse_document("{\n  \"kind\": \"hopf\",\n  \"dim\": }");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 9);
  }
  CHECK_THROWS_AS(parse_document(""), ParseError);
}

TEST_CASE("schema errors name the field") {
  auto field_of = [](const std::string& text) -> std::string {
    try {
      parse_document(text);
    } catch (const SchemaError& e) {
      return e.field();
    }
    return "<none>";
  };
  CHECK(field_of(replace(kTinyHopf, R"("mult": [[["1"]]])", R"("mult": [[["1", "0"]]])")) ==
        "mult[0][0]");
  CHECK(field_of(replace(kTinyHopf, R"("dim": 1)", R"("dim": 1, "extra": 3)")) == "extra");
  CHECK(field_of(replace(kTinyHopf, R"("kind": "hopf")", R"("kind": "ring")")) == "kind");
  CHECK(field_of(replace(kTinyHopf, R"("unit": ["1"],)", "")) == "unit");
  CHECK(field_of(replace(kTinyHopf, R"("dim": 1)", R"("dim": -1)")) == "dim");
  CHECK(field_of(R"({"kind": "group", "table": [[0, 1], [1, 1]]})") == "table");
  CHECK(field_of("[1, 2]") == "");
}

TEST_CASE("documents of the wrong kind are rejected") {
  CHECK_THROWS_AS(parse_as<FusionSkeleton>(kTinyHopf), SchemaError);
}

TEST_CASE("load and save") {
  const std::string path = std::string(HOPFREC_TMP_DIR) + "/io_roundtrip.json";
  save_document(path, named_example("vecz2-fiber"));
  CHECK(load_as<FiberData>(path) == std::get<FiberData>(named_example("vecz2-fiber")));
  CHECK_THROWS_AS(load_document(path + ".missing"), Error);
  CHECK_THROWS_AS(named_example("no-such-example"), Error);
}
