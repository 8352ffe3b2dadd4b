#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls into the flow code.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "stardec/graph.hpp"

namespace stardec::testing {

// G(n, p) with edges drawn in lexicographic pair order.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Every graph on n labelled vertices, by edge bitmask.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    visit(Graph(n, std::move(edges)));
  }
}

// Every gamma with 0 <= gamma(x) <= cap and k * sum = |E|.
inline std::vector<std::vector<std::int64_t>> precentral_functions(const Graph& g, int k, int cap) {
  std::vector<std::vector<std::int64_t>> out;
  if (g.size() % k != 0) return out;
  const std::int64_t target = g.size() / k;
  std::vector<std::int64_t> gamma(static_cast<std::size_t>(g.order()), 0);
  std::function<void(int, std::int64_t)> rec = [&](int x, std::int64_t left) {
    if (x == g.order()) {
      if (left == 0) out.push_back(gamma);
      return;
    }
    for (std::int64_t v = 0; v <= std::min<std::int64_t>(cap, left); ++v) {
      gamma[static_cast<std::size_t>(x)] = v;
      rec(x + 1, left - v);
    }
    gamma[static_cast<std::size_t>(x)] = 0;
  };
  rec(0, target);
  return out;
}

// |E_T| - k * sum over T of gamma, T given as a bitmask.
inline std::int64_t brute_delta(const Graph& g, int k, const std::vector<std::int64_t>& gamma, std::uint32_t mask) {
  std::int64_t touched = 0;
  for (const Edge& e : g.edges())
    if ((mask >> e.u & 1) || (mask >> e.v & 1)) ++touched;
  std::int64_t centred = 0;
  for (Vertex x = 0; x < g.order(); ++x)
    if (mask >> x & 1) centred += gamma[static_cast<std::size_t>(x)];
  return touched - k * centred;
}

inline int brute_alpha(const Graph& g) {
  int best = 0;
  const std::uint32_t total = std::uint32_t{1} << g.order();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool independent = true;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) independent = false;
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Edge counts of the connected components, by union-find.
inline std::vector<std::int64_t> component_edge_counts(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (const Edge& e : g.edges()) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  std::vector<std::int64_t> count(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) ++count[static_cast<std::size_t>(find(e.u))];
  std::vector<std::int64_t> out;
  for (int x = 0; x < g.order(); ++x)
    if (find(x) == x) out.push_back(count[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace stardec::testing
