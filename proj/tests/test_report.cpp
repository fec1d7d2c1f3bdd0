#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "qgadget/pipeline.hpp"
#include "qgadget/report.hpp"
#include "qgadget/serialize.hpp"

using namespace qgadget;

TEST_CASE("factoring polynomial") {
  auto p = factoring_polynomial(15);
  CHECK(p.degree() == 4);
  CHECK(p.variables().size() == 4);
  // (15 - pq)^2 vanishes exactly at p, q in {3, 5}.
  for (int s = 0; s < 16; ++s) {
    Assignment x{{"p1", s & 1}, {"p2", (s >> 1) & 1}, {"q1", (s >> 2) & 1}, {"q2", (s >> 3) & 1}};
    const int pv = 1 + 2 * x["p1"] + 4 * x["p2"], qv = 1 + 2 * x["q1"] + 4 * x["q2"];
    CHECK(p.evaluate(x) == (15 - pv * qv) * (15 - pv * qv));
  }
  CHECK_THROWS_AS(factoring_polynomial(16), Error);
  CHECK_THROWS_AS(factoring_polynomial(9), Error);
}

TEST_CASE("factor demo") {
  for (auto [n, a, b] : std::vector<std::tuple<int, int, int>>{{15, 3, 5}, {21, 3, 7}, {35, 5, 7}}) {
    auto r = run_factor_demo(n);
    CHECK(std::min(r.p, r.q) == a);
    CHECK(std::max(r.p, r.q) == b);
    CHECK(r.energy == 0);
  }
  CHECK_THROWS_AS(run_factor_demo(16), Error);
}

TEST_CASE("chimera host choice") {
  CHECK(chimera_host_for("K4").size() == 8);
  CHECK(chimera_host_for("K6-4e").size() == 8);
  CHECK(chimera_host_for("K6").size() == 32);
  CHECK(chimera_host_for("Double-K4").size() == 32);
}

TEST_CASE("tables report is deterministic") {
  TablesOptions serial;
  serial.parallel = false;
  auto a = run_tables_report();
  auto b = run_tables_report(serial);
  REQUIRE(a.rows.size() == 22);
  CHECK(format_tables(a) == format_tables(b));
  for (const auto& row : a.rows) {
    REQUIRE(row.total_aux);
    CHECK(*row.total_aux == row.quadratization_aux + *row.embedding_aux);
    CHECK(row.match == (*row.total_aux == row.published_total_aux));
    CHECK(row.improvement == (*row.total_aux < row.published_total_aux));
    CHECK(row.exceeds == (*row.total_aux > row.published_total_aux));
  }
  CHECK(format_tables(a, true).find("6594") != std::string::npos);
}

TEST_CASE("tables need the resolved patterns") {
  PatternStore empty;
  TablesOptions o;
  o.patterns = &empty;
  try {
    run_tables_report(o);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("synth") != std::string::npos);
  }
}

TEST_CASE("json output parses") {
  auto q = quadratize(parse_pbf("-1 : x1 x2 x3\n2 : x1 x2 x3 x4"));
  auto j = nlohmann::json::parse(quadratization_json(q));
  CHECK(j.contains("ledger"));
  auto host = nlohmann::json::parse(host_json(chimera(1, 1, 4)));
  CHECK(host["edges"].size() == 16);
  auto r = run_pipeline(parse_pbf("-1 : x1 x2 x3"));
  auto e = nlohmann::json::parse(embedding_json(r.embedding, pegasus(2)));
  CHECK(e.is_object());
  CHECK(nlohmann::json::parse(qubo_json(r.qubo, pegasus(2))).is_object());
  CHECK(nlohmann::json::parse(registry_json(registry_entries())).size() == 8);
  CHECK(nlohmann::json::parse(factor_json(run_factor_demo(15))).is_object());
  CHECK(embedding_text(r.embedding, pegasus(2)).find("x1: [") != std::string::npos);
}
