#include <doctest.h>

#include <random>

#include "stardec/error.hpp"
#include "stardec/graph.hpp"
#include "test_support.hpp"

using namespace stardec;

TEST_CASE("graph construction rejects malformed edge sets") {
  CHECK_THROWS_AS(Graph(3, {Edge(0, 0)}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {Edge(-1, 2)}), InvalidInput);
}

TEST_CASE("edges are normalised and sorted") {
  const Graph g(4, {Edge(3, 1), Edge(2, 0), Edge(1, 0)});
  REQUIRE(g.size() == 3);
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.edges()[1] == Edge(0, 2));
  CHECK(g.edges()[2] == Edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.edge_index(1, 3) == 2);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.degree(0) == 2);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(0).size() == 0);
  CHECK(complete_graph(6).size() == 15);
  CHECK(complete_graph(12).size() == 66);
  CHECK(binom2(512) == 130816);
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
}

TEST_CASE("join counts and degrees") {
  const Graph single(8, {Edge(0, 1)});
  CHECK(join(single, 2).size() == 18);
  CHECK(join_edge_count(single, 2) == 18);
  CHECK(join(single, 0) == single);
  CHECK(join(empty_graph(1), 1) == complete_graph(2));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph L = testing::random_graph(1 + trial % 9, 0.4, rng);
    const int s = trial % 5;
    const Graph g = join(L, s);
    const int n = L.order();
    CHECK(g.size() == join_edge_count(L, s));
    CHECK(g.size() == L.size() + std::int64_t{n} * s + binom2(s));
    for (Vertex y = 0; y < n; ++y) CHECK(g.degree(y) == L.degree(y) + s);
    for (Vertex z = n; z < n + s; ++z) CHECK(g.degree(z) == n + s - 1);
    const JoinLayout layout{L, s};
    CHECK(layout.realize() == g);
    CHECK(layout.edge_count() == g.size());
    if (s > 0) {
      std::vector<Vertex> joined;
      for (int i = 0; i < s; ++i) joined.push_back(layout.join_vertex(i));
      CHECK(is_pairwise_twin(g, joined));
    }
  }
}

TEST_CASE("complement is an involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_graph(trial % 10, 0.5, rng);
    const Graph c = complement(g);
    CHECK(c.size() + g.size() == binom2(g.order()));
    CHECK(complement(c) == g);
  }
}

TEST_CASE("clique unions and disjoint unions") {
  const std::vector<int> orders{4, 2, 1};
  const Graph g = clique_union(orders);
  CHECK(g.order() == 7);
  CHECK(g.size() == 7);
  const std::vector<Graph> parts{complete_graph(4), complete_graph(2), empty_graph(1)};
  CHECK(disjoint_union(parts) == g);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(comps[2] == std::vector<Vertex>{6});
}

TEST_CASE("twin classes") {
  // path 0-1-2: 0 and 2 share neighbourhood {1}
  const Graph p = path_graph(3);
  const auto classes = twin_classes(p);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<Vertex>{0, 2});
  CHECK(classes[1] == std::vector<Vertex>{1});
  // clique members are twins of each other
  CHECK(twin_classes(complete_graph(4)).size() == 1);
  const std::vector<Vertex> ends{0, 1};
  CHECK_FALSE(is_pairwise_twin(p, ends));
}
