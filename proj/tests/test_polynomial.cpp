#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qgadget/polynomial.hpp"

using namespace qgadget;

TEST_CASE("parse single cubic term") {
  auto p = parse_pbf("-1 : x1 x2 x3");
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient({"x1", "x2", "x3"}) == -1);
}

TEST_CASE("parse empty text is the zero polynomial") {
  CHECK(parse_pbf("").is_zero());
  CHECK(parse_pbf("# only a comment\n\n").is_zero());
}

TEST_CASE("repeated variables collapse and terms cancel") {
  CHECK(parse_pbf("2 : a a b\n-2 : a b").is_zero());
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_pbf("1 : x\n1.5 : y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_pbf("abc : x"), ParseError);
  CHECK_THROWS_AS(parse_pbf("3 x y"), ParseError);
}

TEST_CASE("evaluate") {
  auto p = parse_pbf("-1 : x1 x2 x3");
  CHECK(p.evaluate({{"x1", 1}, {"x2", 1}, {"x3", 1}}) == -1);
  CHECK(p.evaluate({{"x1", 1}, {"x2", 0}, {"x3", 1}}) == 0);
  auto q = parse_pbf("2 : a\n-1 : a x\n-1 : a y\n-1 : a z");
  CHECK(q.evaluate({{"a", 1}, {"x", 1}, {"y", 1}, {"z", 0}}) == 0);
}

TEST_CASE("evaluate names a missing variable") {
  auto p = parse_pbf("1 : x1 x2");
  try {
    p.evaluate({{"x1", 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("x2") != std::string::npos);
  }
}

TEST_CASE("restrict") {
  auto p = parse_pbf("1 : x1 x2 x3");
  CHECK(p.restrict({{"x1", 0}}).is_zero());
  CHECK(p.restrict({{"x1", 1}}) == parse_pbf("1 : x2 x3"));
  auto q = parse_pbf("2 : a\n-1 : a x\n-1 : a y\n-1 : a z");
  CHECK(q.restrict({{"a", 1}}) == parse_pbf("2\n-1 : x\n-1 : y\n-1 : z"));
}

TEST_CASE("canonical text form") {
  auto p = parse_pbf("1 : b a\n-3\n2 : c");
  CHECK(p.to_string() == "-3\n2 : c\n1 : a b\n");
}

TEST_CASE("random polynomial properties") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto p = oracle::random_polynomial(rng, 5, 8);
    auto q = oracle::random_polynomial(rng, 5, 8);
    // Round trip through the canonical text is a fixed point.
    CHECK(parse_pbf(p.to_string()) == p);
    CHECK(parse_pbf(p.to_string()).to_string() == p.to_string());

    std::set<Var> vars = p.variables();
    for (const auto& v : q.variables()) vars.insert(v);
    const std::vector<Var> vs(vars.begin(), vars.end());
    for (std::uint32_t s = 0; s < (1u << vs.size()); ++s) {
      Assignment x;
      for (std::size_t i = 0; i < vs.size(); ++i) x[vs[i]] = (s >> i) & 1;
      CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    }
    // Restricting in two steps equals restricting at once on disjoint domains.
    if (vs.size() >= 2) {
      Assignment a{{vs[0], 1}}, b{{vs[1], 0}}, ab{{vs[0], 1}, {vs[1], 0}};
      CHECK(p.restrict(a).restrict(b) == p.restrict(ab));
    }
  }
}
