#include <doctest.h>

#include "oracles.hpp"
#include "qgadget/patterns.hpp"
#include "qgadget/rational_lp.hpp"
#include "qgadget/synth.hpp"

using namespace qgadget;

namespace {

SynthesisProblem problem(int sign, const char* graph, Coeff bound) {
  GadgetGraph g = catalog_graph(graph);
  return {standard_target(sign, static_cast<int>(g.logical.size())), g, bound, true};
}

// Every template edge carries a nonzero coefficient and nothing else is quadratic.
bool respects_template(const Gadget& g, const GadgetGraph& t) {
  for (const auto& [m, c] : g.quadratic.terms()) {
    if (m.size() == 2 && !t.has_edge(m[0], m[1])) return false;
  }
  for (const auto& [a, b] : t.edges)
    if (g.quadratic.coefficient(make_monomial({a, b})) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("exact LP feasibility") {
  lp::LinearSystem s(2, -5, 5);
  s.add({1, 1}, lp::Relation::eq, 3);
  s.add({1, -1}, lp::Relation::ge, 1);
  CHECK(lp::feasible(s));
  auto m = lp::minimize(s, {0, 1});
  REQUIRE(m);
  CHECK(*m == lp::Fraction{-2, 1});

  lp::LinearSystem half(1, -5, 5);
  half.add({2}, lp::Relation::eq, 1);
  auto h = lp::minimize(half, {1});
  REQUIRE(h);
  CHECK(*h == lp::Fraction{1, 2});
  std::vector<std::vector<Coeff>> pts;
  lp::enumerate_integer_points(half, {false}, [&](const std::vector<Coeff>& x) {
    pts.push_back(x);
    return true;
  });
  CHECK(pts.empty());

  lp::LinearSystem bad(2, -5, 5);
  bad.add({1, 1}, lp::Relation::ge, 4);
  bad.add({1, 1}, lp::Relation::le, 3);
  CHECK_FALSE(lp::feasible(bad));
}

TEST_CASE("integer points of a box") {
  lp::LinearSystem s(2, -1, 1);
  s.add({1, 1}, lp::Relation::eq, 0);
  std::vector<std::vector<Coeff>> pts;
  lp::enumerate_integer_points(s, {false, false}, [&](const std::vector<Coeff>& x) {
    pts.push_back(x);
    return true;
  });
  CHECK(pts == std::vector<std::vector<Coeff>>{{-1, 1}, {0, 0}, {1, -1}});
  pts.clear();
  lp::enumerate_integer_points(s, {true, false}, [&](const std::vector<Coeff>& x) {
    pts.push_back(x);
    return true;
  });
  CHECK(pts.size() == 2);
}

TEST_CASE("synthesize recovers known gadgets") {
  for (auto [sign, graph, bound] : std::vector<std::tuple<int, const char*, Coeff>>{
           {-1, "Propeller", 3}, {1, "K5-1aux", 4}, {1, "K4", 4}, {-1, "X", 3}}) {
    CAPTURE(graph);
    auto prob = problem(sign, graph, bound);
    auto r = synthesize(prob);
    REQUIRE(r.gadget);
    CHECK(oracle::gadget_exact(*r.gadget));
    CHECK(respects_template(*r.gadget, prob.template_graph));
    for (const auto& [m, c] : r.gadget->quadratic.terms()) CHECK(std::abs(c) <= bound);
  }
}

TEST_CASE("synthesize proves infeasibility") {
  auto r = synthesize(problem(1, "Propeller", 4));
  CHECK_FALSE(r.gadget);
  auto x = synthesize(problem(1, "X", 4));
  CHECK_FALSE(x.gadget);
}

TEST_CASE("certificate search agrees with the grid on small templates") {
  for (int sign : {-1, 1}) {
    for (const char* graph : {"Propeller", "Coat-Hanger"}) {
      for (Coeff bound : {1, 2}) {
        CAPTURE(graph);
        CAPTURE(sign);
        CAPTURE(bound);
        auto prob = problem(sign, graph, bound);
        auto cert = synthesize(prob, SynthesisMethod::certificate);
        auto grid = synthesize(prob, SynthesisMethod::grid);
        CHECK(cert.gadget.has_value() == grid.gadget.has_value());
        if (grid.gadget) CHECK(oracle::gadget_exact(*grid.gadget));
      }
    }
  }
}

TEST_CASE("synthesis rejects bad problems") {
  auto prob = problem(1, "K4", 0);
  CHECK_THROWS_AS(synthesize(prob), Error);
  auto big = problem(1, "K6", 4);
  CHECK_THROWS_AS(synthesize(big, SynthesisMethod::grid), Error);
}

TEST_CASE("resolved patterns pass the oracle") {
  for (const char* name : {"K6-4e", "K6-e"}) {
    CAPTURE(name);
    const auto& p = default_patterns().require(name);
    CHECK(p.graph.edges.size() == (std::string(name) == "K6-e" ? 14u : 11u));
    CHECK(oracle::gadget_exact(p.quadratic, p.graph.logical, p.graph.aux, p.target_sign));
    Gadget g{standard_target(p.target_sign, 4), p.quadratic, p.graph.aux, ""};
    CHECK(respects_template(g, p.graph));
  }
}

TEST_CASE("pattern candidates") {
  CHECK_THROWS_AS(catalog_pattern_candidates(15), Error);
  CHECK_THROWS_AS(catalog_pattern_candidates(0), Error);
  ResolveOptions flat;
  flat.rank = [](const GadgetGraph&) { return 0; };
  // Color-inequivalent single-edge removals: aux-aux, aux-logical, logical-logical.
  CHECK(catalog_pattern_candidates(1, flat).size() == 3);
  auto four = catalog_pattern_candidates(4, flat);
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j)
      CHECK_FALSE(colored_isomorphic(four[i].graph, four[j].graph));
}

TEST_CASE("pattern store round trip") {
  const auto& store = default_patterns();
  auto again = PatternStore::from_json(store.to_json());
  REQUIRE(again.patterns().size() == store.patterns().size());
  for (std::size_t i = 0; i < store.patterns().size(); ++i) {
    CHECK(again.patterns()[i].quadratic == store.patterns()[i].quadratic);
    CHECK(again.patterns()[i].graph.edges == store.patterns()[i].graph.edges);
  }
  CHECK_THROWS_AS(PatternStore::load("/nonexistent/patterns.json"), Error);
  CHECK_THROWS_AS(PatternStore().require("K6-e"), Error);
}
