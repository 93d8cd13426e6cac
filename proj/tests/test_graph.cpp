#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "vraag/errors.hpp"
#include "vraag/graph.hpp"
#include "vraag/theta.hpp"

using namespace vraag;
using namespace vraag::testing;

TEST_SUITE_BEGIN("graph");

TEST_CASE("complement of a 4-cycle is two disjoint edges") {
  const auto g = c4().complement();
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(g.index("a"), g.index("c")));
  CHECK(g.adjacent(g.index("b"), g.index("d")));
}

TEST_CASE("complement of the edgeless triangle is K3") {
  const auto g = graph({"1", "2", "3"}).complement();
  CHECK(g.edge_count() == 3);
}

TEST_CASE("complement is an involution") {
  CHECK(c6().complement().complement() == c6());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 12) + 1;
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) edges.emplace_back(verts[static_cast<std::size_t>(i)],
                                          verts[static_cast<std::size_t>(j)]);
      }
    }
    const SimplicialGraph g(verts, edges);
    CHECK(g.complement().complement() == g);
  }
}

TEST_CASE("validation rejects loops, duplicates and unknown endpoints") {
  CHECK_THROWS_AS(graph({"a", "b"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(graph({"a", "b"}, {{"a", "z"}}), Error);
  CHECK_THROWS_AS(graph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(graph({"a b"}, {}), Error);
  CHECK_THROWS_AS(graph({"a|b"}, {}), Error);
  // the dash restriction applies at the theta layer, where edge literals live
  CHECK_THROWS_AS(ThetaGraph(graph({"a-b", "c"}), {}), Error);
}

TEST_CASE("predicates on the 4-cycle") {
  const auto p = graph_predicates(c4());
  CHECK(p.triangle_free);
  CHECK(p.cone_vertices.empty());
  CHECK_FALSE(p.chordal);
}

TEST_CASE("predicates on the 3-star") {
  const auto p = graph_predicates(
      graph({"m", "l1", "l2", "l3"}, {{"m", "l1"}, {"m", "l2"}, {"m", "l3"}}));
  CHECK(p.triangle_free);
  CHECK(p.cone_vertices == std::vector<std::string>{"m"});
  CHECK(p.chordal);
}

TEST_CASE("chordality distinguishes held and broken cycles") {
  CHECK_FALSE(c6().chordal());
  // C6 plus enough chords
  auto g = graph({"1", "2", "3", "4", "5", "6"},
                 {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"},
                  {"1", "3"}, {"1", "4"}, {"1", "5"}});
  CHECK(g.chordal());
  CHECK(graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}).chordal());
  CHECK(graph({"a", "b", "c", "d"}).chordal());
}

TEST_CASE("forest and connectivity tests") {
  CHECK(graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}).is_forest());
  CHECK_FALSE(c4().is_forest());
  CHECK(c4().connected());
  CHECK_FALSE(graph({"a", "b", "c"}, {{"a", "b"}}).connected());
}

TEST_CASE("vertex order is name order regardless of declaration order") {
  const auto g1 = graph({"b", "a", "c"}, {{"a", "c"}});
  const auto g2 = graph({"c", "b", "a"}, {{"c", "a"}});
  CHECK(g1 == g2);
  CHECK(g1.vertex_names() == std::vector<std::string>{"a", "b", "c"});
}

TEST_SUITE_END();
