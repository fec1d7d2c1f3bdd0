#include <doctest.h>

#include "oracles.hpp"
#include "qgadget/dot.hpp"
#include "qgadget/hardware.hpp"

using namespace qgadget;

TEST_CASE("chimera counts") {
  auto g = chimera(1, 1, 4);
  CHECK(g.size() == 8);
  CHECK(g.edge_count() == 16);
  auto h = chimera(2, 2, 4);
  CHECK(h.size() == 32);
  CHECK(h.edge_count() == 80);
  auto s = chimera(1, 1, 1);
  CHECK(s.size() == 2);
  CHECK(s.edge_count() == 1);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int t = 1; t <= 4; ++t) {
        auto c = chimera(m, n, t);
        CHECK(c.size() == static_cast<std::size_t>(2 * m * n * t));
        // t^2 per cell plus t per vertical and per horizontal neighbour pair.
        CHECK(c.edge_count() ==
              static_cast<std::size_t>(m * n * t * t + (m - 1) * n * t + m * (n - 1) * t));
        CHECK(is_bipartite(c));
        CHECK_FALSE(contains_triangle(c));
      }
  CHECK_THROWS_AS(chimera(0, 1, 4), Error);
  CHECK_THROWS_AS(chimera(1, -1, 4), Error);
}

TEST_CASE("pegasus counts") {
  auto p2 = pegasus(2);
  CHECK(p2.size() == 40);
  CHECK(p2.edge_count() == 164);
  CHECK(p2.max_degree() == 13);
  auto p3 = pegasus(3);
  CHECK(p3.size() == 128);
  CHECK(p3.edge_count() == 704);
  CHECK(p3.max_degree() <= 15);
  auto p4 = pegasus(4);
  CHECK(p4.size() == 264);
  CHECK(p4.edge_count() == 1604);
  CHECK(p4.max_degree() == 15);
  // 24 m (m - 1) - 8 (m - 1) qubits in the fabric.
  for (int m = 2; m <= 6; ++m) CHECK(pegasus(m).size() == static_cast<std::size_t>(24 * m * (m - 1) - 8 * (m - 1)));
  CHECK_THROWS_AS(pegasus(1), Error);
}

TEST_CASE("pegasus(16) size") {
  auto p = pegasus(16);
  CHECK(p.size() == 5640);
  CHECK(p.edge_count() == 40484);
  CHECK(p.max_degree() == 15);
}

TEST_CASE("pegasus contains K4 and odd cycles") {
  auto p = pegasus(2);
  auto k4 = find_k4(p);
  REQUIRE(k4);
  const auto& q = *k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(p.has_edge(q[i], q[j]));
  CHECK(contains_triangle(p));
  CHECK_FALSE(is_bipartite(p));
  CHECK_FALSE(find_k4(chimera(2, 2, 4)).has_value());
}

TEST_CASE("cells") {
  auto c = chimera(2, 2, 4);
  auto cell = chimera_cell(c, 1, 0);
  CHECK(cell.graph.size() == 8);
  CHECK(cell.graph.edge_count() == 16);
  for (int v : cell.parent_vertices) CHECK((*c.coord(v))[0] == 1);
  auto pc = pegasus_cell(pegasus(3));
  CHECK(pc.graph.size() <= 24);
  CHECK(find_k4(pc.graph).has_value());
  CHECK_THROWS_AS(chimera_cell(pegasus(2), 0, 0), Error);
}

TEST_CASE("coordinate labels") {
  auto c = chimera(1, 1, 4);
  CHECK(c.label(0) == "(0,0,0,0)");
  CHECK(c.label(4) == "(0,0,1,0)");
  CHECK(c.index_of(Coord{0, 0, 1, 3}) == std::optional<int>(7));
  CHECK(c.index_of("(0,0,1,3)") == std::optional<int>(7));
}

TEST_CASE("edge list export") {
  auto text = export_edge_list(chimera(1, 1, 1));
  CHECK(text.find("0 1\n") != std::string::npos);
}

TEST_CASE("dot export") {
  auto dot = export_dot(chimera(1, 1, 1));
  CHECK(dot.rfind("graph ", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 6);
  CHECK(dot.find("0 -- 1;") != std::string::npos);

  auto k4 = export_dot(catalog_graph("K4"));
  CHECK(k4.find("\"a1\" [style=filled, fillcolor=red]") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = k4.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 6);
}
