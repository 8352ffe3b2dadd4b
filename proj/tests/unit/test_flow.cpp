#include <doctest.h>

#include <random>

#include "stardec/flow.hpp"
#include "stardec/graph.hpp"
#include "test_support.hpp"

using namespace stardec;

TEST_CASE("max flow on a small network") {
  // classic 6-node example with value 23
  MaxFlow f(6);
  f.add_arc(0, 1, 16);
  f.add_arc(0, 2, 13);
  f.add_arc(1, 2, 10);
  f.add_arc(2, 1, 4);
  f.add_arc(1, 3, 12);
  f.add_arc(3, 2, 9);
  f.add_arc(2, 4, 14);
  f.add_arc(4, 3, 7);
  f.add_arc(3, 5, 20);
  f.add_arc(4, 5, 4);
  CHECK(f.solve(0, 5) == 23);
  const auto reach = f.residual_reachable(0);
  CHECK(reach[0]);
  CHECK_FALSE(reach[5]);
}

TEST_CASE("capacities can be changed and flow reset") {
  MaxFlow f(3);
  const int a = f.add_arc(0, 1, 5);
  f.add_arc(1, 2, 3);
  CHECK(f.solve(0, 2) == 3);
  CHECK(f.flow(a) == 3);
  f.reset_flow();
  f.set_capacity(a, 1);
  CHECK(f.solve(0, 2) == 1);
}

// Maximum number of edges orientable under out-degree caps, by brute force
// over all 2^|E| orientations.
static std::int64_t brute_orientable(const Graph& g, const std::vector<std::int64_t>& caps) {
  std::int64_t best = 0;
  const auto edges = g.edges();
  const std::uint32_t total = std::uint32_t{1} << edges.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // bit set: out of v; each vertex keeps min(cap, out-degree) edges
    std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()), 0);
    std::int64_t placed = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Vertex tail = (mask >> i & 1) ? edges[i].v : edges[i].u;
      if (out[static_cast<std::size_t>(tail)] < caps[static_cast<std::size_t>(tail)]) {
        ++out[static_cast<std::size_t>(tail)];
        ++placed;
      }
    }
    best = std::max(best, placed);
  }
  return best;
}

TEST_CASE("orientation network value matches brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(2 + trial % 5, 0.6, rng);
    if (g.size() > 12) continue;
    std::vector<std::int64_t> caps(static_cast<std::size_t>(g.order()));
    for (auto& c : caps) c = static_cast<std::int64_t>(rng() % 4);
    OrientationNetwork net(g);
    const std::int64_t value = net.solve(caps);
    CHECK(value == brute_orientable(g, caps));
    const auto tails = net.tails();
    std::vector<std::int64_t> out(caps.size(), 0);
    std::int64_t oriented = 0;
    for (std::size_t i = 0; i < tails.size(); ++i) {
      if (tails[i] < 0) continue;
      const Edge& e = g.edges()[i];
      CHECK((tails[i] == e.u || tails[i] == e.v));
      ++out[static_cast<std::size_t>(tails[i])];
      ++oriented;
    }
    CHECK(oriented == value);
    for (std::size_t x = 0; x < caps.size(); ++x) CHECK(out[x] <= caps[x]);
  }
}
