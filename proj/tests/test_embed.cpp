#include <doctest.h>

#include "oracles.hpp"
#include "qgadget/dot.hpp"
#include "qgadget/embed.hpp"

using namespace qgadget;

namespace {

// Chimera cell vertices: L0..L3 on shore 0 are 0..3, R0..R3 on shore 1 are 4..7.
constexpr int L0 = 0, L1 = 1, L2 = 2, R0 = 4, R1 = 5, R2 = 6;

Embedding k4_fixture() {
  // Catalog K4 is x1, x2, x3 plus aux a1.
  Embedding e;
  e.chains = {{"x1", {L0, R0}}, {"x2", {L1, R1}}, {"x3", {L2}}, {"a1", {R2}}};
  return e;
}

EmbedLimits limits(int aux, int chain) {
  EmbedLimits l;
  l.max_aux = aux;
  l.max_chain_len = chain;
  return l;
}

}  // namespace

TEST_CASE("validate_embedding examples") {
  const auto g = catalog_graph("K4");
  const auto h = chimera(1, 1, 4);
  auto e = k4_fixture();
  CHECK_FALSE(validate_embedding(g, h, e).has_value());
  CHECK(e.aux_count() == 2);
  CHECK(oracle::embedding_valid(g, h, e));

  auto overlap = e;
  overlap.chains["x1"] = {L0};
  overlap.chains["x2"] = {L0};
  auto v = validate_embedding(g, h, overlap);
  REQUIRE(v);
  CHECK(v->condition == "chains not disjoint");

  auto split = e;
  split.chains["x1"] = {L0, L1};
  split.chains["x2"] = {R1};
  v = validate_embedding(g, h, split);
  REQUIRE(v);
  CHECK(v->condition == "chain disconnected");

  auto missing = e;
  missing.chains.erase("a1");
  v = validate_embedding(g, h, missing);
  REQUIRE(v);
  CHECK(v->condition == "missing chain");

  auto uncovered = e;
  uncovered.chains["x3"] = {L2};
  uncovered.chains["a1"] = {L2 + 1};
  v = validate_embedding(g, h, uncovered);
  REQUIRE(v);
  CHECK(v->condition == "edge not covered");

  auto unknown = e;
  unknown.chains["zz"] = {7};
  CHECK_THROWS_AS(validate_embedding(g, h, unknown), Error);
  auto out_of_range = e;
  out_of_range.chains["a1"] = {99};
  CHECK_THROWS_AS(validate_embedding(g, h, out_of_range), Error);
}

TEST_CASE("embed_search examples") {
  const auto k4 = catalog_graph("K4");
  const auto cell = chimera(1, 1, 4);
  auto r = embed_search(k4, cell, limits(2, 2));
  CHECK(r.status == EmbedStatus::found);
  REQUIRE(r.embedding);
  CHECK(oracle::embedding_valid(k4, cell, *r.embedding));
  CHECK(r.embedding->aux_count() <= 2);

  for (int aux : {0, 1}) {
    auto none = embed_search(k4, cell, limits(aux, 4));
    CHECK(none.status == EmbedStatus::infeasible);
    CHECK_FALSE(oracle::embedding_exists(k4, cell, 4, aux));
  }
  CHECK(oracle::embedding_exists(k4, cell, 2, 2));

  auto p = embed_search(k4, pegasus(2), limits(0, 1));
  CHECK(p.status == EmbedStatus::found);
  CHECK(oracle::embedding_valid(k4, pegasus(2), *p.embedding));
}

TEST_CASE("limits are checked") {
  const auto k4 = catalog_graph("K4");
  const auto cell = chimera(1, 1, 4);
  CHECK_THROWS_AS(embed_search(k4, cell, limits(-1, 2)), Error);
  CHECK_THROWS_AS(embed_search(k4, cell, limits(2, 0)), Error);
  CHECK_THROWS_AS(embed_search(k4, cell, limits(2, 5)), Error);
  GadgetGraph big("big", {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"}, {});
  CHECK_THROWS_AS(embed_search(big, pegasus(2), limits(1, 2)), Error);
}

TEST_CASE("min_aux matches the naive enumerator on one Chimera cell") {
  const auto cell = chimera(1, 1, 4);
  for (const char* name : {"Propeller", "Coat-Hanger", "K4-e", "K4", "X"}) {
    CAPTURE(name);
    const auto g = catalog_graph(name);
    auto r = min_aux(g, cell, limits(4, 3));
    REQUIRE(r.min_aux);
    CHECK(r.complete);
    CHECK(oracle::embedding_valid(g, cell, *r.embedding));
    CHECK(oracle::embedding_exists(g, cell, 3, *r.min_aux));
    if (*r.min_aux > 0) CHECK_FALSE(oracle::embedding_exists(g, cell, 3, *r.min_aux - 1));
  }
  CHECK(*min_aux(catalog_graph("Propeller"), cell, limits(4, 3)).min_aux == 0);
  CHECK(*min_aux(catalog_graph("K5-2aux"), cell, limits(6, 3)).min_aux == 3);
}

TEST_CASE("K6 on pegasus(2) needs exactly 2 aux with chains of at most 2") {
  auto r = min_aux(catalog_graph("K6"), pegasus(2), limits(4, 2));
  REQUIRE(r.min_aux);
  CHECK(*r.min_aux == 2);
  CHECK(r.complete);
  CHECK(oracle::embedding_valid(catalog_graph("K6"), pegasus(2), *r.embedding));
}

TEST_CASE("min_aux is monotone in the host") {
  const auto small = chimera(1, 1, 4), big = chimera(2, 2, 4);
  for (const char* name : {"Coat-Hanger", "K4", "K5-1aux"}) {
    auto a = min_aux(catalog_graph(name), small, limits(6, 3));
    auto b = min_aux(catalog_graph(name), big, limits(6, 3));
    REQUIRE(a.min_aux);
    REQUIRE(b.min_aux);
    CHECK(*b.min_aux <= *a.min_aux);
  }
}

TEST_CASE("stars embed without aux in a cell") {
  const auto cell = chimera(1, 1, 4);
  for (int leaves = 1; leaves <= 4; ++leaves) {
    GadgetGraph star("star", {}, {"c"});
    for (int i = 1; i <= leaves; ++i) {
      star.logical.push_back("x" + std::to_string(i));
      star.add_edge("c", "x" + std::to_string(i));
    }
    CHECK(*min_aux(star, cell, limits(2, 2)).min_aux == 0);
  }
}

TEST_CASE("interaction graph") {
  auto q2 = parse_pbf("1 : x y\n2 : y a\n-1 : x\n3");
  auto g = interaction_graph(q2, {"a"});
  CHECK(g.logical == std::vector<Var>{"x", "y"});
  CHECK(g.aux == std::vector<Var>{"a"});
  CHECK(g.edges.size() == 2);
  CHECK_THROWS_AS(interaction_graph(parse_pbf("1 : x y z")), Error);
}

TEST_CASE("embedding dot export") {
  const auto g = catalog_graph("K4");
  const auto h = chimera(1, 1, 4);
  auto e = k4_fixture();
  auto dot = export_dot(h, &e, &g);
  CHECK(dot.find("penwidth=4") != std::string::npos);
  CHECK(dot.find("0 -- 4 [penwidth=4]") != std::string::npos);
  CHECK(dot.find("fillcolor=red") != std::string::npos);
  CHECK(dot.find("color=grey") != std::string::npos);
}
