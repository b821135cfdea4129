#include <doctest.h>

#include "clusterforge/graph.hpp"

using namespace clusterforge;

TEST_CASE("grid graph sizes") {
  const Graph g55 = grid_graph(5, 5);
  CHECK(g55.vertex_count == 25);
  CHECK(g55.edges.size() == 40);

  const Graph g11 = grid_graph(1, 1);
  CHECK(g11.vertex_count == 1);
  CHECK(g11.edges.empty());

  const Graph g33 = grid_graph(3, 3);
  CHECK(g33.vertex_count == 9);
  CHECK(g33.edges.size() == 12);

  const Graph g23 = grid_graph(2, 3);
  CHECK(g23.vertex_count == 6);
  CHECK(g23.edges.size() == 7);

  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(grid_graph(n, n).edges.size() == 2 * n * (n - 1));

  CHECK_THROWS_AS(grid_graph(0, 3), std::invalid_argument);
}

TEST_CASE("string and star graphs") {
  CHECK(string_graph(2).edges.size() == 1);
  CHECK(string_graph(1).edges.empty());
  CHECK(string_graph(9).edges.size() == 8);

  const Graph s4 = star_graph(4);
  CHECK(s4.vertex_count == 5);
  CHECK(s4.edges.size() == 4);
  CHECK(s4.degree(0) == 4);

  CHECK(star_graph(1) == string_graph(2));

  const Graph s3 = star_graph(3);
  CHECK(s3.degree(0) == 3);
  for (std::size_t v = 1; v <= 3; ++v) CHECK(s3.degree(v) == 1);
}

TEST_CASE("box graph is the 2x2 grid") {
  const Graph box = box_graph();
  CHECK(box.vertex_count == 4);
  CHECK(box.edges.size() == 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(box.degree(v) == 2);
  // Same topology as grid_graph(2,2) up to the cycle labeling: both are
  // 4-cycles, grid numbering has 0-1, 1-3, 3-2, 2-0.
  const Graph g22 = grid_graph(2, 2);
  CHECK(g22.edges.size() == 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(g22.degree(v) == 2);
}

TEST_CASE("graph stabilizer generators") {
  const auto box_gens = graph_stabilizers(box_graph());
  REQUIRE(box_gens.size() == 4);
  CHECK(box_gens[0].str() == "+XZIZ");

  const auto string_gens = graph_stabilizers(string_graph(2));
  CHECK(string_gens[0].str() == "+XZ");
  CHECK(string_gens[1].str() == "+ZX");

  for (const Graph& g : {grid_graph(2, 2), grid_graph(3, 4), star_graph(5), string_graph(6)}) {
    const auto gens = graph_stabilizers(g);
    CHECK(gens.size() == g.vertex_count);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t x_count = 0;
      for (std::size_t q = 0; q < g.vertex_count; ++q)
        if (gens[i].x_bit(q)) ++x_count;
      CHECK(x_count == 1);
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        CHECK(gens[i].commutes_with(gens[j]));
    }
  }
}

TEST_CASE("graph edge validation") {
  Graph g;
  g.vertex_count = 3;
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(2, 0);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  g.add_edge(0, 2);  // duplicate collapses
  CHECK(g.edges.size() == 1);
}

TEST_CASE("DOT export") {
  const std::string dot = to_dot(string_graph(3), "s3");
  CHECK(dot.find("graph s3 {") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("pauli string parsing and symplectic product") {
  const auto p = PauliString::from_string("-XYZI");
  CHECK(p.sign() == -1);
  CHECK(p.str() == "-XYZI");
  CHECK(p.letter(1) == 'Y');
  CHECK(p.weight() == 3);

  const auto xx = PauliString::from_string("XX");
  const auto zz = PauliString::from_string("ZZ");
  const auto zi = PauliString::from_string("ZI");
  CHECK(xx.commutes_with(zz));
  CHECK_FALSE(xx.commutes_with(zi));
  CHECK_THROWS_AS(xx.commutes_with(p), std::invalid_argument);
}
