#pragma once

// Decomposition with prescribed centre counts. A k-star decomposition of G
// with gamma(x) stars centred at each x exists iff the edges can be oriented
// so that x has out-degree k*gamma(x), iff min over T of
//   Delta_T = |E_T| - k * sum_{x in T} gamma(x)
// is zero (E_T = edges meeting T). The orientation question is an integral
// flow problem; a minimum cut of a deficient instance is a set T with
// Delta_T < 0.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stardec/flow.hpp"
#include "stardec/graph.hpp"

namespace stardec {

struct Star {
  Vertex center = 0;
  std::vector<Vertex> leaves;  // sorted, exactly k of them

  friend bool operator==(const Star&, const Star&) = default;
};

struct StarDecomposition {
  int k = 0;
  std::vector<Star> stars;

  friend bool operator==(const StarDecomposition&, const StarDecomposition&) = default;
};

// gamma with k * sum(gamma) = |E(G)|.
class PrecentralFunction {
 public:
  // Throws InvalidInput unless gamma is a nonnegative k-precentral function.
  PrecentralFunction(const Graph& g, int k, std::vector<std::int64_t> gamma);

  int k() const { return k_; }
  std::span<const std::int64_t> values() const { return gamma_; }
  std::int64_t operator[](Vertex x) const { return gamma_[x]; }
  std::int64_t total() const;

 private:
  int k_;
  std::vector<std::int64_t> gamma_;
};

struct DeficiencyWitness {
  std::vector<Vertex> T;
  std::int64_t delta_plus = 0;   // |E_T|
  std::int64_t delta_minus = 0;  // k * sum over T of gamma
  std::int64_t delta = 0;

  friend bool operator==(const DeficiencyWitness&, const DeficiencyWitness&) = default;
};

DeficiencyWitness deficiency(const Graph& g, const PrecentralFunction& gamma,
                             std::span<const Vertex> T);

// Greedy single pass in descending label order: drop x whenever Delta does not
// increase. Every survivor has gamma >= 1. Requires Delta_T < 0.
std::vector<Vertex> shrink_witness(const Graph& g, const PrecentralFunction& gamma,
                                   std::span<const Vertex> T);

using StarDecision = std::variant<StarDecomposition, DeficiencyWitness>;

// Reusable solver over a fixed graph; keeps the flow network between calls.
class StarSolver {
 public:
  explicit StarSolver(Graph g);
  StarSolver(const StarSolver&) = delete;
  StarSolver& operator=(const StarSolver&) = delete;

  const Graph& graph() const { return graph_; }

  // Largest number of edges orientable with out-degree(x) <= capacities[x].
  std::int64_t max_orientable(std::span<const std::int64_t> capacities);

  StarDecision decide(const PrecentralFunction& gamma);

 private:
  Graph graph_;
  OrientationNetwork network_;
};

StarDecision decide_star_decomposition(const Graph& g, const PrecentralFunction& gamma);

struct Violation {
  std::string message;
  std::optional<Edge> edge;
  std::optional<std::size_t> star;
};

// Checks stars against g; with `partial` the union may be a proper subset of
// E(g). Returns the first violation found, or nothing.
std::optional<Violation> validate_decomposition(const Graph& g, const StarDecomposition& d,
                                                bool partial = false);

// Number of stars centred at each vertex.
std::vector<std::int64_t> central_function(int order, const StarDecomposition& d);

// gamma(x) approximately deg(x)/(2k), apportioned by largest remainder (ties to
// the lower label) so that the sum is |E|/k. On K_n this is floor(b/n)
// everywhere plus one on the first b mod n vertices. Requires k | |E|.
std::vector<std::int64_t> balanced_gamma(const Graph& g, int k);

struct BalancedAttempt {
  std::optional<StarDecomposition> decomposition;
  std::vector<std::int64_t> gamma;  // the last gamma tried
  int repairs = 0;
  std::optional<DeficiencyWitness> last_witness;
};

// Balanced gamma, then repair: while the solver returns a witness T, move one
// unit of gamma from the largest-gamma vertex of T to the vertex outside T with
// the most slack deg - k*gamma (at least k). Gives up after n^2 repairs or when
// no vertex has slack.
BalancedAttempt decompose_balanced(const Graph& g, int k);

// K_n. Returns nothing when no decomposition was constructed; divisibility of
// C(n,2) by k is checked first, the flow construction is attempted otherwise.
std::optional<StarDecomposition> decompose_complete(int n, int k);

struct OddComponent {
  std::vector<Vertex> vertices;
  std::int64_t edge_count = 0;
};

// 2-star decomposition by pairing edges bottom-up along a DFS tree of each
// component; fails exactly when some component has an odd number of edges.
std::variant<StarDecomposition, OddComponent> two_star_decompose(const Graph& g);

}  // namespace stardec
