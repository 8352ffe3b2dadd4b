#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stardec/exact.hpp"
#include "stardec/graph.hpp"

namespace stardec {

inline constexpr std::uint64_t kDefaultIndependenceBudget = 10'000'000;

struct IndependenceResult {
  // Empty when the search ran out of budget.
  std::optional<int> alpha;
  // Lexicographically smallest maximum independent set (sorted); empty when
  // alpha is unknown.
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
  bool clique_union = false;
};

// Exact independence number. Disjoint unions of cliques are answered in closed
// form; otherwise each component is searched by branch and bound with a
// greedy clique-cover bound.
IndependenceResult independence_number(const Graph& g,
                                       std::uint64_t budget = kDefaultIndependenceBudget);

bool is_independent(const Graph& g, std::span<const Vertex> set);
bool is_clique(const Graph& g, std::span<const Vertex> set);
bool is_clique_union(const Graph& g);

struct CaroWeiBounds {
  Rational sum_form;    // sum over x of 1/(deg(x)+1)
  Rational ratio_form;  // |V|^2 / (2|E| + |V|)
};

CaroWeiBounds caro_wei_bounds(const Graph& g);

// 1 + (n-r)^2 / (2|E| + n - r^2) for a graph containing the given r-clique and
// at most n(r-1)/2 edges. Throws InvalidInput if `clique` is not a clique of
// `g` or the edge bound fails.
Rational clique_refined_bound(const Graph& g, std::span<const Vertex> clique);

}  // namespace stardec
