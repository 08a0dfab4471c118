// Tests for the defining-graph layer: construction, validation, families,
// metrics, and induced complements.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/oracles.hpp"
#include "raag/serialize.hpp"

using namespace raag;

namespace {

SimplicialGraph spider() {
  return SimplicialGraph({"c", "p1", "p2", "q1", "q2", "r1", "r2"},
                         {{"c", "p1"},
                          {"p1", "p2"},
                          {"c", "q1"},
                          {"q1", "q2"},
                          {"c", "r1"},
                          {"r1", "r2"}});
}

}  // namespace

TEST_CASE("construction validates its input") {
  CHECK_THROWS_AS(SimplicialGraph({"a", "a"}, {{"a", "a"}}),
                  std::invalid_argument);  // duplicate name
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "a"}}),
                  std::invalid_argument);  // self-loop
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  std::invalid_argument);  // duplicate edge
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "c"}}),
                  std::invalid_argument);  // unknown endpoint
  CHECK_THROWS_AS(SimplicialGraph({"a b"}, {}),
                  std::invalid_argument);  // bad name
  CHECK_THROWS_AS(SimplicialGraph({"a", "b", "c"}, {{"a", "b"}}),
                  std::invalid_argument);  // disconnected
  CHECK_NOTHROW(SimplicialGraph({"a", "b", "c"}, {{"a", "b"}},
                                /*require_connected=*/false));
}

TEST_CASE("path family") {
  SimplicialGraph g = make_path(4);
  REQUIRE(g.n() == 4);
  CHECK(g.adjacent(g.index("a"), g.index("b")));
  CHECK(g.adjacent(g.index("b"), g.index("c")));
  CHECK(g.adjacent(g.index("c"), g.index("d")));
  CHECK_FALSE(g.adjacent(g.index("a"), g.index("c")));
  CHECK_FALSE(g.adjacent(g.index("a"), g.index("d")));
  GraphMetrics m = g.metrics();
  CHECK(m.girth.is_infinite());
  CHECK(m.is_tree);
  CHECK(m.diameter == 3);
  CHECK(m.max_degree == 2);
  CHECK(g.distance(g.index("a"), g.index("d")) == 3);
}

TEST_CASE("cycle family") {
  SimplicialGraph g = make_cycle(7);
  REQUIRE(g.n() == 7);
  GraphMetrics m = g.metrics();
  REQUIRE_FALSE(m.girth.is_infinite());
  CHECK(m.girth.value() == 7);
  CHECK(m.max_degree == 2);
  CHECK(m.diameter == 3);
  CHECK_FALSE(m.is_tree);
  CHECK_FALSE(m.bipartite);
  CHECK(make_cycle(8).metrics().bipartite);
  CHECK(g.adjacent(g.index("v_1"), g.index("v_7")));
  CHECK(g.distance(g.index("v_1"), g.index("v_4")) == 3);
}

TEST_CASE("star family") {
  SimplicialGraph g = make_star(3);
  REQUIRE(g.n() == 4);
  CHECK(g.degree(g.index("c")) == 3);
  CHECK(g.metrics().girth.is_infinite());
  CHECK(g.st_mask(g.index("c")) == (uint64_t{1} << g.n()) - 1);
}

TEST_CASE("gamma family layout") {
  for (int k = 2; k <= 5; ++k) {
    SimplicialGraph g = make_gamma(k);
    REQUIRE(g.n() == 3 * k + 4);
    // Centers see exactly their own row.
    CHECK(g.degree(g.index("u")) == k);
    CHECK(g.degree(g.index("v")) == k);
    CHECK(g.degree(g.index("t")) == k);
    CHECK(g.degree(g.index("w")) == 2);
    for (int i = 1; i <= k; ++i) {
      std::string s = std::to_string(i);
      CHECK(g.adjacent(g.index("u"), g.index("u_" + s)));
      CHECK(g.adjacent(g.index("u_" + s), g.index("v_" + s)));
      CHECK(g.adjacent(g.index("v_" + s), g.index("t_" + s)));
      if (i < k)
        CHECK(g.adjacent(g.index("t_" + s),
                         g.index("u_" + std::to_string(i + 1))));
    }
    CHECK(g.adjacent(g.index("t_" + std::to_string(k)), g.index("w")));
    CHECK(g.adjacent(g.index("w"), g.index("u_1")));
    GraphMetrics m = g.metrics();
    REQUIRE_FALSE(m.girth.is_infinite());
    // The pentagon u - u_1 - v_1 - t_1 - u_2 - u is the shortest cycle: the
    // direct rungs t_i - u_{i+1} close the three-rung ladder one step early.
    CHECK(m.girth.value() == 5);
    // Leaves u_i sit on three rungs (u, v_i, and t_{i-1} or w), so the
    // maximum degree is k only once the rows outgrow the leaves.
    CHECK(m.max_degree == std::max(k, 3));
  }
}

TEST_CASE("gamma distance tables between rows") {
  // On gamma(k): d(u_i, v_j) is 1 iff i = j, 2 iff i = j + 1, else 3; the
  // same for (v_i, t_j); and d(t_i, u_j) is 1 iff i + 1 = j, 2 iff i = j or
  // (i,j) = (k,1), else 3.
  for (int k : {3, 4}) {
    SimplicialGraph g = make_gamma(k);
    auto u = [&](int i) { return g.index("u_" + std::to_string(i)); };
    auto v = [&](int i) { return g.index("v_" + std::to_string(i)); };
    auto t = [&](int i) { return g.index("t_" + std::to_string(i)); };
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        int expect_uv = (i == j) ? 1 : (i == j + 1) ? 2 : 3;
        CHECK(g.distance(u(i), v(j)) == expect_uv);
        CHECK(g.distance(v(i), t(j)) == expect_uv);
        int expect_tu =
            (i + 1 == j) ? 1 : (i == j || (i == k && j == 1)) ? 2 : 3;
        CHECK(g.distance(t(i), u(j)) == expect_tu);
      }
    }
  }
}

TEST_CASE("girth matches the edge-removal oracle") {
  std::vector<SimplicialGraph> graphs;
  graphs.push_back(make_path(4));
  graphs.push_back(make_cycle(5));
  graphs.push_back(make_cycle(8));
  graphs.push_back(make_star(3));
  graphs.push_back(make_gamma(2));
  graphs.push_back(make_gamma(3));
  graphs.push_back(spider());
  graphs.push_back(SimplicialGraph(
      {"a", "b", "c", "d"},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}}));
  for (const SimplicialGraph& g : graphs)
    CHECK(g.metrics().girth == oracle::girth_by_edge_removal(g));
}

TEST_CASE("complement induced on a subset") {
  SimplicialGraph g = make_path(4);
  // Complement of path(4) on {a, d}: a-d is a non-edge of the path, hence an
  // edge of the complement: connected.
  InducedSubgraph s =
      g.complement_induced({g.index("a"), g.index("d")});
  CHECK(s.connected());
  CHECK(s.edges.size() == 1);
  // On {a, b}: a-b is an edge of the path, so the complement is two isolated
  // vertices.
  InducedSubgraph s2 = g.complement_induced({g.index("a"), g.index("b")});
  CHECK_FALSE(s2.connected());
  CHECK(s2.components.size() == 2);

  SimplicialGraph c4 = make_cycle(4);
  InducedSubgraph s3 =
      c4.complement_induced({c4.index("v_1"), c4.index("v_3")});
  CHECK(s3.connected());
}

TEST_CASE("star and link") {
  SimplicialGraph g = make_path(4);
  CHECK(g.link(g.index("b")) ==
        std::vector<int>{g.index("a"), g.index("c")});
  std::vector<int> st = g.star(g.index("b"));
  CHECK(st == std::vector<int>{g.index("a"), g.index("b"), g.index("c")});
}

TEST_CASE("family parser") {
  CHECK(make_family("path:4").n() == 4);
  CHECK(make_family("cycle:7").n() == 7);
  CHECK(make_family("star:3").n() == 4);
  CHECK(make_family("gamma:2").n() == 10);
  CHECK_THROWS_AS(make_family("blob:4"), std::invalid_argument);
  CHECK_THROWS_AS(make_family("path"), std::invalid_argument);
  CHECK_THROWS_AS(make_family("path:x"), std::invalid_argument);
}

TEST_CASE("JSON round trip and DOT export") {
  SimplicialGraph g = make_gamma(2);
  json j = graph_to_json(g);
  SimplicialGraph back = graph_from_json(j);
  REQUIRE(back.n() == g.n());
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < g.n(); ++b)
      CHECK(back.adjacent(a, b) == g.adjacent(a, b));

  std::string dot = graph_to_dot(make_path(3));
  CHECK(dot ==
        "graph G {\n  \"a\";\n  \"b\";\n  \"c\";\n"
        "  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n");
}
