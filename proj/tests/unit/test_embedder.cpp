#include <doctest.h>

#include <random>

#include "stardec/embedder.hpp"
#include "stardec/error.hpp"
#include "stardec/graph.hpp"
#include "stardec/oracle.hpp"
#include "test_support.hpp"

using namespace stardec;

namespace {

Graph seven_k4() {
  const std::vector<int> orders(7, 4);
  return clique_union(orders);
}

Graph single_edge(int n) { return Graph(n, {Edge(0, 1)}); }

}  // namespace

TEST_CASE("obstacle check") {
  const auto violated = obstacle_check(seven_k4(), 8, 4);
  CHECK(violated.status == ObstacleCheck::Status::kViolated);
  CHECK(violated.required == 12);
  CHECK(violated.alpha == 7);
  const auto at5 = obstacle_check(seven_k4(), 8, 5);
  CHECK(at5.status == ObstacleCheck::Status::kViolated);
  CHECK(at5.required == 9);

  // empty leave: alpha = n covers any requirement
  const auto empty = obstacle_check(empty_graph(3), 3, 3);
  CHECK(empty.status == ObstacleCheck::Status::kPasses);
  CHECK(empty.required == 2);

  // single edge on 8 vertices, s = 4: |E| = 39, so 12 - 13 = -1 is required
  const auto single = obstacle_check(single_edge(8), 3, 4);
  CHECK(single.status == ObstacleCheck::Status::kPasses);
  CHECK(single.required == -1);
  CHECK_FALSE(single.alpha);

  CHECK_THROWS_AS(obstacle_check(single_edge(8), 3, 3), InvalidInput);
}

TEST_CASE("obstacle reports inconclusive when alpha is over budget") {
  std::mt19937_64 rng(8);
  const Graph L = testing::random_graph(60, 0.05, rng);
  for (int s = 0; s < 60; ++s) {
    if (join_edge_count(L, s) % 5 != 0) continue;
    if (L.order() + s - join_edge_count(L, s) / 5 <= 0) continue;
    CHECK(obstacle_check(L, 5, s, 2).status == ObstacleCheck::Status::kInconclusive);
    break;
  }
}

TEST_CASE("degree pair check") {
  const auto e = degree_pair_check(single_edge(8), 3, 1);
  REQUIRE(e);
  CHECK(*e == Edge(0, 1));
  CHECK_FALSE(degree_pair_check(single_edge(8), 3, 2));
  // both endpoints of an isolated edge reach degree k at s = k - 1
  CHECK_FALSE(degree_pair_check(single_edge(8), 5, 4));
  CHECK(degree_pair_check(single_edge(8), 5, 3));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + trial % 5;
    const Graph L = testing::random_graph(1 + trial % 12, 0.3, rng);
    CHECK_FALSE(degree_pair_check(L, k, k + trial % 3));
  }
}

TEST_CASE("small case") {
  const auto ok = embed_small_case(empty_graph(3), 3, 3);
  REQUIRE(std::holds_alternative<CaseConstruction>(ok));
  const auto& c = std::get<CaseConstruction>(ok);
  CHECK(c.gamma == std::vector<std::int64_t>{0, 0, 1, 1, 1, 1});
  CHECK_FALSE(validate_decomposition(join(empty_graph(3), 3), c.decomposition));

  CHECK_THROWS_AS(embed_small_case(seven_k4(), 8, 4), InvalidInput);
  // |E| = 39 > 36 = k(n+s): the small case does not apply
  CHECK_THROWS_AS(embed_small_case(single_edge(8), 3, 4), InvalidInput);
  CHECK_THROWS_AS(embed_small_case(complete_graph(5), 3, 3), InvalidInput);
}

TEST_CASE("small case with nothing required sets every gamma to one") {
  int seen = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int n = 1; n <= 3 * k; ++n) {
      for (int s = k; s <= 3 * k; ++s) {
        const Graph L = empty_graph(n);
        const std::int64_t e = join_edge_count(L, s);
        if (e % k != 0 || e > std::int64_t{k} * (n + s) || n + s - e / k > 0) continue;
        const auto r = embed_small_case(L, k, s);
        REQUIRE(std::holds_alternative<CaseConstruction>(r));
        const auto& c = std::get<CaseConstruction>(r);
        CHECK(c.gamma == std::vector<std::int64_t>(static_cast<std::size_t>(n + s), 1));
        CHECK_FALSE(validate_decomposition(join(L, s), c.decomposition));
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("large case on seven disjoint K4") {
  const CaseConstruction c = embed_large_case(seven_k4(), 8, 20);
  REQUIRE(c.gamma.size() == 48);
  for (int y = 0; y < 28; ++y) CHECK(c.gamma[static_cast<std::size_t>(y)] == 1);
  int fours = 0;
  for (int z = 28; z < 48; ++z) {
    const auto g = c.gamma[static_cast<std::size_t>(z)];
    CHECK((g == 3 || g == 4));
    if (g == 4) {
      ++fours;
      CHECK(z < 28 + 11);
    }
  }
  CHECK(fours == 11);
  CHECK_FALSE(validate_decomposition(join(seven_k4(), 20), c.decomposition));
}

TEST_CASE("large case at the boundary is uniform") {
  bool seen = false;
  for (int k = 3; k <= 6 && !seen; ++k) {
    for (int n = k; n <= 3 * k && !seen; ++n) {
      for (int s = k; s <= 4 * k && !seen; ++s) {
        const Graph L = empty_graph(n);
        const std::int64_t e = join_edge_count(L, s);
        if (e % k != 0 || e != std::int64_t{k} * (n + s)) continue;
        const CaseConstruction c = embed_large_case(L, k, s);
        const std::int64_t b = e / k;
        CHECK((b - n) % s == 0);
        for (int z = n; z < n + s; ++z) CHECK(c.gamma[static_cast<std::size_t>(z)] == (b - n) / s);
        CHECK_FALSE(validate_decomposition(join(L, s), c.decomposition));
        seen = true;
      }
    }
  }
  CHECK(seen);
}

TEST_CASE("guaranteed s follows the case analysis") {
  CHECK(guaranteed_s(5, 3).s == 4);
  CHECK(guaranteed_s(3, 4).s == 5);
  CHECK(guaranteed_s(9, 3).s == 6);
  CHECK(guaranteed_s(2, 3).s == 4);
  CHECK(guaranteed_s(6, 2).s == 2);
  for (int k = 2; k <= 12; ++k)
    for (int n = 1; n <= 60; ++n) CHECK(Surd(guaranteed_s(n, k).s) < theorem_cap(k));
}

TEST_CASE("greedy completion") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + trial % 4;
    const Graph L = testing::random_graph(4 + trial % 10, 0.6, rng);
    const GreedyCompletion g = greedy_complete(L, k);
    CHECK(g.leave.max_degree() <= k - 1);
    CHECK(static_cast<std::int64_t>(g.stars.stars.size()) * k + g.leave.size() == L.size());
    CHECK_FALSE(validate_decomposition(L, g.stars, true));
    for (const Star& s : g.stars.stars)
      for (Vertex leaf : s.leaves) CHECK_FALSE(g.leave.has_edge(s.center, leaf));
  }
}

TEST_CASE("embed: single edge on eight vertices") {
  const EmbeddingCertificate c = embed(single_edge(8), 3);
  CHECK(c.s == 4);
  CHECK(c.minimality == Minimality::kExact);
  REQUIRE(c.rejections.size() == 4);
  CHECK(c.rejections[0].reason == RejectionReason::kDivisibility);
  CHECK(c.rejections[1].reason == RejectionReason::kDegreePair);
  CHECK(c.rejections[2].reason == RejectionReason::kExhaustedNonexistence);
  CHECK(c.rejections[3].reason == RejectionReason::kDivisibility);
  CHECK_FALSE(validate_decomposition(join(single_edge(8), 4), c.decomposition));
}

TEST_CASE("embed: trivial and even-bound leaves") {
  const EmbeddingCertificate t = embed(empty_graph(6), 3);
  CHECK(t.s == 0);
  CHECK(t.method == EmbedMethod::kTrivial);

  const EmbeddingCertificate c = embed(seven_k4(), 8);
  CHECK(c.s == 20);
  CHECK(c.method == EmbedMethod::kLargeCase);
  CHECK(c.minimality == Minimality::kExact);
  REQUIRE(c.rejections.size() == 20);
  for (const Rejection& r : c.rejections) {
    if (r.s == 4) CHECK(r.reason == RejectionReason::kDegreePair);
    else if (r.s == 5) CHECK(r.reason == RejectionReason::kObstacle);
    else CHECK(r.reason == RejectionReason::kDivisibility);
  }
}

TEST_CASE("embed rejects graphs that are not leaves") {
  CHECK_THROWS_AS(embed(single_edge(3), 3), InvalidInput);
  CHECK_THROWS_AS(embed(empty_graph(4), 1), InvalidInput);
}

TEST_CASE("embed reduces non-maximal leaves greedily") {
  // K_7 minus nothing, k = 3: 21 edges, a leave of the empty packing
  const EmbeddingCertificate c = embed(complete_graph(7), 3);
  CHECK(c.s == 0);
  CHECK_FALSE(validate_decomposition(complete_graph(7), c.decomposition));
}

TEST_CASE("certificates are consistent on sampled leaves") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = k + 1; n <= 14; ++n) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto partial = sample_maximal_partial(n, k, seed);
        const EmbeddingCertificate c = embed(partial.leave, k);
        CHECK(c.n == n);
        CHECK(Surd(c.s) < theorem_cap(k));
        CHECK_FALSE(validate_decomposition(join(partial.leave, c.s), c.decomposition));
        REQUIRE(static_cast<int>(c.rejections.size()) == c.s);
        for (int i = 0; i < c.s; ++i) CHECK(c.rejections[static_cast<std::size_t>(i)].s == i);
        CHECK(embed(partial.leave, k) == c);
      }
    }
  }
}

TEST_CASE("obstacle violations are confirmed by exhaustive search") {
  std::mt19937_64 rng(17);
  int confirmed = 0;
  for (int trial = 0; trial < 400 && confirmed < 25; ++trial) {
    const int k = 3 + trial % 3;
    const int n = 3 + trial % 6;
    const Graph L = testing::random_graph(n, 0.7, rng);
    if (L.max_degree() >= k) continue;
    for (int s = 0; s < k; ++s) {
      const Graph g = join(L, s);
      if (g.size() % k != 0 || g.size() > 24) continue;
      const auto o = obstacle_check(L, k, s);
      if (o.status != ObstacleCheck::Status::kViolated) continue;
      CHECK(exhaustive_decomposition(g, k).outcome == SearchOutcome::kExhausted);
      ++confirmed;
    }
  }
  CHECK(confirmed > 0);
}

TEST_CASE("bound report") {
  const BoundReport k8 = bound_report(10, 8);
  CHECK(k8.n_threshold == Surd(8));
  CHECK(k8.statement1_cap == 22);
  REQUIRE(k8.s_lower_bound_clique);
  REQUIRE(k8.s_lower_bound_general);

  const BoundReport far = bound_report(100, 3);
  REQUIRE(far.s_lower_bound_general);
  CHECK(far.s_lower_bound_general->is_below(3));
  CHECK_FALSE(far.s_lower_bound_clique);
  CHECK(far.statement1_cap == 4);

  CHECK_FALSE(bound_report(5, 2).s_lower_bound_general);
}

TEST_CASE("general bound decreases in n") {
  for (int k = 3; k <= 9; ++k) {
    for (int n = 1; n < 60; ++n) {
      const auto a = bound_report(n, k).s_lower_bound_general;
      const auto b = bound_report(n + 1, k).s_lower_bound_general;
      CHECK(b->to_double() <= a->to_double() + 1e-12);
    }
  }
}

TEST_CASE("enum strings round-trip") {
  for (auto r : {RejectionReason::kDivisibility, RejectionReason::kObstacle, RejectionReason::kDegreePair,
                 RejectionReason::kExhaustedNonexistence, RejectionReason::kUnknownSkipped})
    CHECK(rejection_reason_from_string(to_string(r)) == r);
  for (auto m : {EmbedMethod::kTrivial, EmbedMethod::kSmallCase, EmbedMethod::kLargeCase, EmbedMethod::kGammaSearch,
                 EmbedMethod::kTwoStar})
    CHECK(embed_method_from_string(to_string(m)) == m);
  CHECK(minimality_from_string("conditional") == Minimality::kConditional);
  CHECK_THROWS_AS(minimality_from_string("maybe"), InvalidInput);
}
