#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qgadget/gadget.hpp"
#include "qgadget/gadget_graph.hpp"
#include "qgadget/quadratize.hpp"

using namespace qgadget;

namespace {

const std::vector<std::tuple<std::string, int, int, std::string>> kRegistry = {
    {"NTR-KZFD", -1, 3, "Propeller"},     {"NTR-KZFD", -1, 4, "X"},
    {"PTR-Ishikawa", 1, 3, "K4"},         {"PTR-CoatHanger", 1, 3, "Coat-Hanger"},
    {"PTR-K5", 1, 4, "K5-1aux"},          {"PTR-PAIR", 1, 4, ""},
    {"SYN-K6-4e", 1, 4, "K6-4e"},         {"SYN-K6-e", 1, 4, "K6-e"},
};

}  // namespace

TEST_CASE("every registry gadget matches the brute-force oracle") {
  for (const auto& [name, sign, degree, graph] : kRegistry) {
    CAPTURE(name);
    CAPTURE(degree);
    const Gadget g = builtin_gadget(name, sign, degree);
    CHECK(g.quadratic.degree() <= 2);
    CHECK(oracle::gadget_exact(g));
    CHECK(verify_gadget(g));
  }
}

TEST_CASE("registry formulas") {
  CHECK(builtin_gadget("NTR-KZFD", -1, 3).quadratic ==
        parse_pbf("2 : a1\n-1 : a1 x1\n-1 : a1 x2\n-1 : a1 x3"));
  // w(1 - S1) + S2
  CHECK(builtin_gadget("PTR-Ishikawa", 1, 3).quadratic ==
        parse_pbf("1 : a1\n-1 : a1 x1\n-1 : a1 x2\n-1 : a1 x3\n1 : x1 x2\n1 : x1 x3\n1 : x2 x3"));
  // w(3 - 2 S1) + S2
  auto k5 = builtin_gadget("PTR-K5", 1, 4).quadratic;
  CHECK(k5.coefficient({"a1"}) == 3);
  CHECK(k5.coefficient({"a1", "x4"}) == -2);
  CHECK(k5.coefficient({"x2", "x3"}) == 1);
}

TEST_CASE("unknown registry entries list what is available") {
  try {
    builtin_gadget("NTR-NOPE", -1, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("NTR-KZFD") != std::string::npos);
  }
}

TEST_CASE("verify_gadget rejects a gadget used for the wrong sign") {
  Gadget g = builtin_gadget("NTR-KZFD", -1, 3);
  g.target = standard_target(1, 3);
  auto report = verify_gadget_report(g);
  CHECK_FALSE(report.exact);
  REQUIRE(report.witness);
  CHECK(*report.witness == 0b111u);
  CHECK(report.minimum == -1);
  CHECK(report.expected == 1);
  CHECK_FALSE(oracle::gadget_exact(g));
}

TEST_CASE("scaling preserves exactness") {
  for (const auto& [name, sign, degree, graph] : kRegistry) {
    for (Coeff lambda : {1, 2, 5}) {
      const Gadget g = builtin_gadget(name, sign, degree).scaled(lambda);
      CHECK(g.target.coefficient == sign * lambda);
      CHECK(oracle::gadget_exact(g));
    }
  }
}

TEST_CASE("extract_graph classifies registry gadgets") {
  for (const auto& [name, sign, degree, graph] : kRegistry) {
    CAPTURE(name);
    auto cls = classify_graph(extract_graph(builtin_gadget(name, sign, degree)));
    if (graph.empty()) {
      CHECK_FALSE(cls.has_value());
    } else {
      REQUIRE(cls.has_value());
      CHECK(*cls == graph);
    }
  }
}

TEST_CASE("classify_graph examples") {
  GadgetGraph star("g", {"x1", "x2", "x3"}, {"a"});
  for (auto x : {"x1", "x2", "x3"}) star.add_edge("a", x);
  CHECK(classify_graph(star) == std::optional<std::string>("Propeller"));

  GadgetGraph k4("g", {"p", "q", "r"}, {"z"});
  for (auto [a, b] : std::vector<std::pair<Var, Var>>{
           {"p", "q"}, {"p", "r"}, {"q", "r"}, {"z", "p"}, {"z", "q"}, {"z", "r"}})
    k4.add_edge(a, b);
  CHECK(classify_graph(k4) == std::optional<std::string>("K4"));

  GadgetGraph path("g", {"x1", "x2"}, {"a"});
  path.add_edge("x1", "a");
  path.add_edge("a", "x2");
  CHECK_FALSE(classify_graph(path).has_value());
}

TEST_CASE("classification is invariant under colored relabelling") {
  std::mt19937_64 rng(3);
  for (const auto& name : catalog_names()) {
    const GadgetGraph g = catalog_graph(name);
    auto L = g.logical, A = g.aux;
    for (int t = 0; t < 5; ++t) {
      std::shuffle(L.begin(), L.end(), rng);
      std::shuffle(A.begin(), A.end(), rng);
      std::map<Var, Var> ren;
      for (std::size_t i = 0; i < L.size(); ++i) ren[g.logical[i]] = L[i];
      for (std::size_t i = 0; i < A.size(); ++i) ren[g.aux[i]] = A[i];
      GadgetGraph h(name, g.logical, g.aux);
      for (const auto& [a, b] : g.edges) h.add_edge(ren[a], ren[b]);
      CHECK(classify_graph(h) == std::optional<std::string>(name));
      CHECK(canonical_edges(h) == canonical_edges(g));
    }
  }
}

TEST_CASE("catalog shapes") {
  CHECK(catalog_names().size() == 11);
  auto edges = [](const char* n) { return catalog_graph(n).edges.size(); };
  CHECK(edges("Propeller") == 3);
  CHECK(edges("Coat-Hanger") == 4);
  CHECK(edges("K4-e") == 5);
  CHECK(edges("K4") == 6);
  CHECK(edges("K5-2aux") == 10);
  CHECK(edges("X") == 4);
  CHECK(edges("K5-1aux") == 10);
  CHECK(edges("K6-4e") == 11);
  CHECK(edges("K6-e") == 14);
  CHECK(edges("K6") == 15);
  CHECK(edges("Double-K4") == 12);
  // K4-e misses a logical-logical edge.
  GadgetGraph k4e = catalog_graph("K4-e");
  for (const auto& x : k4e.logical) CHECK(k4e.has_edge(k4e.aux[0], x));
}

TEST_CASE("graph validation") {
  GadgetGraph g("g", {"x1"}, {"a1"});
  CHECK_THROWS_AS(g.add_edge("x1", "x1"), Error);
  CHECK_THROWS_AS(g.add_edge("x1", "zz"), Error);
}

TEST_CASE("recommend") {
  auto r = recommend(-1, 3, Hardware::chimera);
  CHECK(r.gadget == "NTR-KZFD");
  CHECK(r.expected_total_aux == 1);
  CHECK(recommend(-1, 4, Hardware::pegasus).expected_total_aux == 1);
  CHECK(recommend(1, 3, Hardware::chimera).expected_total_aux == 2);
  CHECK(recommend(1, 3, Hardware::pegasus).expected_total_aux == 1);
  CHECK(recommend(1, 4, Hardware::pegasus).expected_total_aux == 2);
  auto c4 = recommend(1, 4, Hardware::chimera);
  CHECK(c4.expected_total_aux == 3);
  CHECK(c4.catalog_graph == "K6-4e");
  CHECK_THROWS_AS(recommend(1, 5, Hardware::chimera), Error);
}

TEST_CASE("quadratize examples") {
  auto p = parse_pbf("-1 : x1 x2 x3\n1 : x1 x2");
  auto r = quadratize(p, {Hardware::chimera});
  CHECK(r.ledger.total_aux == 1);
  CHECK(r.quadratic.degree() <= 2);
  CHECK(oracle::quadratization_exact(p, r.quadratic));

  auto q = parse_pbf("3 : x1 x2\n-2 : x1\n5");
  auto rq = quadratize(q, {Hardware::pegasus});
  CHECK(rq.quadratic == q);
  CHECK(rq.ledger.total_aux == 0);
  CHECK(rq.ledger.records.empty());

  auto k = parse_pbf("1 : x1 x2 x3 x4");
  auto rk = quadratize(k, {Hardware::pegasus});
  CHECK(rk.ledger.total_aux == 1);
  REQUIRE(rk.ledger.records.size() == 1);
  CHECK(rk.ledger.records[0].gadget == "PTR-K5");

  CHECK_THROWS_AS(quadratize(parse_pbf("1 : a b c d e")), Error);
}

TEST_CASE("quadratize agrees with the oracle on random inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    auto p = oracle::random_polynomial(rng, 5, 8);
    for (auto hw : {Hardware::chimera, Hardware::pegasus}) {
      auto r = quadratize(p, {hw});
      CHECK(r.quadratic.degree() <= 2);
      int aux = 0;
      for (const auto& rec : r.ledger.records) aux += static_cast<int>(rec.aux.size());
      CHECK(aux == r.ledger.total_aux);
      CHECK(oracle::quadratization_exact(p, r.quadratic));
      CHECK(verify_quadratization(p, r));
    }
  }
}
