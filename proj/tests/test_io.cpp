#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "lk/io.hpp"

using namespace lk;

TEST_CASE("polynomial serialization") {
  const LaurentPoly p = LaurentPoly::monomial(-3, 2, 1) + LaurentPoly::monomial(7, 5, -1) + LaurentPoly::monomial(1, -4, 1);
  const json j = to_json(p);
  CHECK(j.dump() == R"([["7",5,-1],["1",-4,1],["-3",2,1]])");
  CHECK(poly_from_json(j) == p);
  CHECK(to_json(LaurentPoly()).dump() == "[]");
  CHECK_THROWS(poly_from_json(json::parse(R"([[1,2,3]])")));
}

TEST_CASE("round trip through text is exact") {
  testing::Gen gen(99);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = gen.poly(8, 6, 1000);
    const std::string text = to_json(p).dump();
    CHECK(poly_from_json(json::parse(text)) == p);
    CHECK(to_json(poly_from_json(json::parse(text))).dump() == text);
  }
}

TEST_CASE("root system export") {
  const RootSystem rs = RootSystem::build(TypeSpec::parse("D", 4));
  const json j = to_json(rs);
  CHECK(j["type"] == "D");
  CHECK(j["rank"] == 4);
  CHECK(j["roots"].size() == 12);
  CHECK(j["roots"][0] == json::array({1, 0, 0, 0}));
  CHECK(j["cartan"][1] == json::array({-1, 2, -1, -1}));
}

TEST_CASE("generator and table export") {
  const Representation rep(RootSystem::build(TypeSpec::parse("A", 3)));
  const RepMatrix s2 = rep.sigma(2);
  const json g = generator_to_json(2, s2);
  CHECK(g["generator"] == 2);
  CHECK(g["size"] == 6);
  CHECK(generator_from_json(json::parse(g.dump())) == s2);
  const json T = ttable_to_json(rep.roots(), rep.table());
  CHECK(T.size() == 18);
  CHECK(T[0]["k"] == 1);
  CHECK(ttable_from_json(rep.roots(), json::parse(T.dump())) == rep.table());
}
