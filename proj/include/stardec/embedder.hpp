#pragma once

// Embedding a partial k-star decomposition of K_n with leave L into a k-star
// decomposition of K_{n+s}, i.e. decomposing L v K_s. Base vertices keep their
// labels 0..n-1; join vertices are n..n+s-1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stardec/exact.hpp"
#include "stardec/graph.hpp"
#include "stardec/independence.hpp"
#include "stardec/oracle.hpp"
#include "stardec/star_solver.hpp"

namespace stardec {

struct ObstacleCheck {
  enum class Status { kPasses, kViolated, kInconclusive };
  Status status = Status::kPasses;
  std::int64_t required = 0;  // n + s - |E(L v K_s)|/k
  std::optional<int> alpha;   // unset when not needed or over budget
};

// Necessary condition alpha(L) >= n + s - |E(L v K_s)|/k. Throws InvalidInput
// unless k divides |E(L v K_s)|.
ObstacleCheck obstacle_check(const Graph& L, int k, int s,
                             std::uint64_t budget = kDefaultIndependenceBudget);

// An edge of L v K_s with both endpoint degrees below k, if any.
std::optional<Edge> degree_pair_check(const Graph& L, int k, int s);

struct CaseConstruction {
  StarDecomposition decomposition;  // of L v K_s
  std::vector<std::int64_t> gamma;
};

struct IndependentSetShortfall {
  std::optional<int> alpha;  // unset when the search ran out of budget
  std::int64_t required = 0;
};

// gamma = 0 on an independent set A of size n + s - b (the first vertices of
// the lexicographically smallest maximum independent set), 1 elsewhere.
// Requires s >= k, max degree <= k-1, k | |E| <= k(n+s).
std::variant<CaseConstruction, IndependentSetShortfall> embed_small_case(
    const Graph& L, int k, int s, std::uint64_t budget = kDefaultIndependenceBudget);

// gamma = 1 on the base, d or d+1 on the join with d = floor((b-n)/s) and the
// lowest join labels taking d+1. Requires s >= k, n >= k, max degree <= k-1,
// k | |E| >= k(n+s). A flow failure is an internal error.
CaseConstruction embed_large_case(const Graph& L, int k, int s);

struct GuaranteedS {
  int s = 0;
  std::string rationale;
};

// The join size the case analysis of the cap theorem prescribes for a leave on
// n vertices. Always below theorem_cap(k).
GuaranteedS guaranteed_s(int n, int k);

// 9k/4 for odd k, (6 - 2 sqrt 2) k for even k.
Surd theorem_cap(int k);
// 2k-2 for odd k, 3k-2 for even k.
int statement1_cap(int k);
// k(k-1) / (sqrt(8k) - 1), rationalised.
Surd n_threshold(int k);

struct GreedyCompletion {
  StarDecomposition stars;
  Graph leave;  // maximum degree <= k-1
};

// Repeatedly centres a star at the lowest vertex of remaining degree >= k,
// using its k lowest remaining neighbours.
GreedyCompletion greedy_complete(const Graph& L, int k);

enum class RejectionReason {
  kDivisibility,
  kObstacle,
  kDegreePair,
  kExhaustedNonexistence,
  kUnknownSkipped,
};

std::string_view to_string(RejectionReason reason);
RejectionReason rejection_reason_from_string(std::string_view text);

struct Rejection {
  int s = 0;
  RejectionReason reason = RejectionReason::kDivisibility;
  std::optional<std::int64_t> required;
  std::optional<int> alpha;
  std::optional<Edge> edge;
  std::optional<std::uint64_t> nodes;

  friend bool operator==(const Rejection&, const Rejection&) = default;
};

enum class Minimality { kExact, kConditional };
enum class EmbedMethod { kTrivial, kSmallCase, kLargeCase, kGammaSearch, kTwoStar };

std::string_view to_string(Minimality m);
Minimality minimality_from_string(std::string_view text);
std::string_view to_string(EmbedMethod m);
EmbedMethod embed_method_from_string(std::string_view text);

struct EmbeddingCertificate {
  int k = 0;
  int n = 0;
  int s = 0;
  StarDecomposition decomposition;  // of L v K_s, greedy stars included
  std::vector<Rejection> rejections;  // every s' < s, ascending
  Minimality minimality = Minimality::kExact;
  EmbedMethod method = EmbedMethod::kTrivial;
  int greedy_stars = 0;

  friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;
};

struct EmbedConfig {
  int max_s = -1;  // negative: 6k
  std::uint64_t gamma_budget = kDefaultGammaBudget;
  std::uint64_t independence_budget = kDefaultIndependenceBudget;
};

// Smallest s (ascending from 0) for which a decomposition of L v K_s was
// constructed. Rejections are decided on L itself; the constructive cases run
// on the greedy completion of L, with exact gamma search whenever no case
// applies. Throws InvalidInput unless k | C(n,2) - |E(L)|, and
// std::runtime_error if nothing is found up to max_s.
EmbeddingCertificate embed(const Graph& L, int k, const EmbedConfig& config = {});

struct BoundReport {
  int k = 0;
  int n = 0;
  // s must exceed this for the general sufficient condition; k >= 3 only.
  std::optional<NestedRadical> s_lower_bound_general;
  // Sharper bound for leaves with k < n <= 2k; k >= 3 only.
  std::optional<NestedRadical> s_lower_bound_clique;
  Surd n_threshold;
  Surd theorem_cap;
  int statement1_cap = 0;
};

BoundReport bound_report(int n, int k);

}  // namespace stardec
