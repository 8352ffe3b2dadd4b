#pragma once

// Brute-force ground truth. Nothing here relies on the deficiency criterion
// except exhaustive_gamma_search, which uses the flow decision at its leaves;
// exhaustive_decomposition and enumerate_min_deficiency are independent of it.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stardec/graph.hpp"
#include "stardec/star_solver.hpp"

namespace stardec {

inline constexpr std::uint64_t kDefaultBacktrackBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultGammaBudget = 1'000'000;

enum class SearchOutcome { kFound, kExhausted, kBudgetExceeded };

std::string_view to_string(SearchOutcome outcome);
SearchOutcome search_outcome_from_string(std::string_view text);

struct SearchTranscript {
  std::uint64_t nodes_explored = 0;
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::optional<StarDecomposition> decomposition;  // set iff kFound
  std::optional<std::uint64_t> seed;

  friend bool operator==(const SearchTranscript&, const SearchTranscript&) = default;
};

// Backtracking over the edges in lexicographic order, each edge joining the
// open star of one of its endpoints (smaller endpoint tried first). When
// `gamma` is given, only decompositions with that central function count.
SearchTranscript exhaustive_decomposition(
    const Graph& g, int k, std::uint64_t budget = kDefaultBacktrackBudget,
    std::optional<std::span<const std::int64_t>> gamma = std::nullopt);

struct MinDeficiency {
  std::int64_t delta = 0;
  // Every minimiser of Delta_T of minimum cardinality, each sorted, in
  // increasing bitmask order.
  std::vector<std::vector<Vertex>> minimizers;
};

inline constexpr int kMaxEnumerationOrder = 20;

// All 2^n subsets. Throws InvalidInput when n > kMaxEnumerationOrder.
MinDeficiency enumerate_min_deficiency(const Graph& g, const PrecentralFunction& gamma);

// Decides whether any k-star decomposition exists by enumerating k-precentral
// gamma with k*gamma(x) <= deg(x), one value per twin class position in
// non-increasing order, pruned by the necessary conditions (no edge with both
// ends at zero, sum constraints) and by two orientation relaxations; complete
// assignments are tested with the flow decision. `budget` caps search nodes.
SearchTranscript exhaustive_gamma_search(const Graph& g, int k,
                                         std::uint64_t budget = kDefaultGammaBudget);

struct MaximalPartial {
  StarDecomposition packing;  // partial decomposition of K_n
  Graph leave;
  std::uint64_t seed = 0;
};

// Random greedy k-star packing of K_n until every vertex has fewer than k
// uncovered edges. Deterministic per seed (mt19937_64, modulo reduction).
MaximalPartial sample_maximal_partial(int n, int k, std::uint64_t seed);

}  // namespace stardec
