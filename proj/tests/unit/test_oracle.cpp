#include <doctest.h>

#include <random>

#include "stardec/error.hpp"
#include "stardec/graph.hpp"
#include "stardec/oracle.hpp"
#include "stardec/star_solver.hpp"
#include "test_support.hpp"

using namespace stardec;

namespace {

Graph k8_minus_edge() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v)
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
  return Graph(8, edges);
}

}  // namespace

TEST_CASE("exhaustive decomposition examples") {
  const auto k6 = exhaustive_decomposition(complete_graph(6), 3);
  REQUIRE(k6.outcome == SearchOutcome::kFound);
  CHECK_FALSE(validate_decomposition(complete_graph(6), *k6.decomposition));

  const Graph single_join = join(Graph(8, {Edge(0, 1)}), 2);
  REQUIRE(single_join.size() == 18);
  const auto none = exhaustive_decomposition(single_join, 3);
  CHECK(none.outcome == SearchOutcome::kExhausted);
  CHECK_FALSE(none.decomposition);
  CHECK(none.nodes_explored > 0);

  CHECK(exhaustive_decomposition(complete_graph(5), 3).outcome == SearchOutcome::kExhausted);
}

TEST_CASE("exhaustive decomposition honours a prescribed gamma") {
  const Graph k7 = complete_graph(7);
  const std::vector<std::int64_t> gamma{2, 1, 1, 1, 1, 1, 0};
  const auto t = exhaustive_decomposition(k7, 3, kDefaultBacktrackBudget, std::span<const std::int64_t>(gamma));
  REQUIRE(t.outcome == SearchOutcome::kFound);
  CHECK(central_function(7, *t.decomposition) == gamma);
  // the edge between two zero vertices has no possible centre
  const std::vector<std::int64_t> bad{2, 2, 2, 1, 0, 0, 0};
  const auto u = exhaustive_decomposition(k7, 3, kDefaultBacktrackBudget, std::span<const std::int64_t>(bad));
  CHECK(u.outcome == SearchOutcome::kExhausted);
}

TEST_CASE("budget exhaustion is reported, never mistaken for nonexistence") {
  const auto t = exhaustive_decomposition(complete_graph(9), 4, 5);
  CHECK(t.outcome == SearchOutcome::kBudgetExceeded);
  const auto g = exhaustive_gamma_search(complete_graph(12), 3, 1);
  CHECK(g.outcome == SearchOutcome::kBudgetExceeded);
}

TEST_CASE("minimum deficiency enumeration") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 8;
    const int k = 2 + trial % 2;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const auto all = testing::precentral_functions(g, k, 3);
    if (all.empty()) continue;
    const auto& gamma = all[rng() % all.size()];
    const auto result = enumerate_min_deficiency(g, PrecentralFunction(g, k, gamma));
    CHECK(result.delta <= 0);
    REQUIRE_FALSE(result.minimizers.empty());
    std::size_t size = result.minimizers.front().size();
    for (const auto& T : result.minimizers) {
      CHECK(T.size() == size);
      std::uint32_t mask = 0;
      for (Vertex x : T) mask |= 1u << x;
      CHECK(testing::brute_delta(g, k, gamma, mask) == result.delta);
      for (Vertex x : T) CHECK(gamma[static_cast<std::size_t>(x)] >= 1);
    }
  }
  CHECK_THROWS_AS(enumerate_min_deficiency(empty_graph(21), PrecentralFunction(empty_graph(21), 2, std::vector<std::int64_t>(21, 0))),
                  InvalidInput);
}

TEST_CASE("gamma search examples") {
  const std::vector<int> two_triangles{3, 3};
  CHECK(exhaustive_gamma_search(clique_union(two_triangles), 2).outcome == SearchOutcome::kExhausted);
  const Graph k8e = k8_minus_edge();
  REQUIRE(k8e.size() == 27);
  const auto found = exhaustive_gamma_search(k8e, 3);
  REQUIRE(found.outcome == SearchOutcome::kFound);
  CHECK_FALSE(validate_decomposition(k8e, *found.decomposition));
  const Graph single_join = join(Graph(8, {Edge(0, 1)}), 2);
  CHECK(exhaustive_gamma_search(single_join, 3).outcome == SearchOutcome::kExhausted);
}

TEST_CASE("the two exhaustive oracles agree") {
  std::mt19937_64 rng(31);
  int found = 0;
  int absent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    const int k = 2 + trial % 3;
    const Graph g = testing::random_graph(n, 0.55, rng);
    if (g.size() % k != 0 || g.size() > 18) continue;
    const auto a = exhaustive_decomposition(g, k);
    const auto b = exhaustive_gamma_search(g, k);
    REQUIRE(a.outcome != SearchOutcome::kBudgetExceeded);
    REQUIRE(b.outcome != SearchOutcome::kBudgetExceeded);
    CHECK(a.outcome == b.outcome);
    if (b.decomposition) CHECK_FALSE(validate_decomposition(g, *b.decomposition));
    (a.outcome == SearchOutcome::kFound ? found : absent)++;
  }
  CHECK(found > 10);
  CHECK(absent > 10);
}

TEST_CASE("maximal partial sampling") {
  const auto small = sample_maximal_partial(3, 3, 1);
  CHECK(small.packing.stars.empty());
  CHECK(small.leave == complete_graph(3));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = sample_maximal_partial(10, 3, seed);
    CHECK(p.seed == seed);
    CHECK(p.leave.max_degree() <= 2);
    CHECK((binom2(10) - p.leave.size()) % 3 == 0);
    // stars plus leave partition K_10
    const auto violation = validate_decomposition(complete_graph(10), p.packing, true);
    CHECK_FALSE(violation);
    std::int64_t covered = 0;
    for (const Star& s : p.packing.stars) {
      covered += static_cast<std::int64_t>(s.leaves.size());
      for (Vertex leaf : s.leaves) CHECK_FALSE(p.leave.has_edge(s.center, leaf));
    }
    CHECK(covered + p.leave.size() == binom2(10));
    const auto again = sample_maximal_partial(10, 3, seed);
    CHECK(again.packing == p.packing);
    CHECK(again.leave == p.leave);
  }
}
