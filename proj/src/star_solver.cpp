#include "stardec/star_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stardec/error.hpp"

namespace stardec {

PrecentralFunction::PrecentralFunction(const Graph& g, int k, std::vector<std::int64_t> gamma)
    : k_(k), gamma_(std::move(gamma)) {
  if (k < 1) throw InvalidInput("star size k must be positive");
  if (static_cast<int>(gamma_.size()) != g.order()) {
    throw InvalidInput("gamma needs one value per vertex (" + std::to_string(g.order()) +
                       "), got " + std::to_string(gamma_.size()));
  }
  for (std::int64_t v : gamma_)
    if (v < 0) throw InvalidInput("gamma values must be nonnegative");
  if (k * total() != g.size()) {
    throw InvalidInput("gamma is not " + std::to_string(k) + "-precentral: k*sum = " +
                       std::to_string(k * total()) + " but |E| = " + std::to_string(g.size()));
  }
}

std::int64_t PrecentralFunction::total() const {
  return std::accumulate(gamma_.begin(), gamma_.end(), std::int64_t{0});
}

DeficiencyWitness deficiency(const Graph& g, const PrecentralFunction& gamma,
                             std::span<const Vertex> T) {
  std::vector<char> in_t(static_cast<std::size_t>(g.order()), 0);
  DeficiencyWitness w;
  for (Vertex x : T) {
    if (x < 0 || x >= g.order()) throw InvalidInput("witness vertex out of range");
    if (in_t[x]) throw InvalidInput("witness lists a vertex twice");
    in_t[x] = 1;
    w.delta_minus += gamma.k() * gamma[x];
  }
  for (const Edge& e : g.edges())
    if (in_t[e.u] || in_t[e.v]) ++w.delta_plus;
  w.delta = w.delta_plus - w.delta_minus;
  w.T.assign(T.begin(), T.end());
  std::sort(w.T.begin(), w.T.end());
  return w;
}

std::vector<Vertex> shrink_witness(const Graph& g, const PrecentralFunction& gamma,
                                   std::span<const Vertex> T) {
  std::vector<Vertex> current(T.begin(), T.end());
  std::sort(current.begin(), current.end());
  std::int64_t delta = deficiency(g, gamma, current).delta;
  if (delta >= 0) throw InvalidInput("shrink_witness needs a set with negative deficiency");

  const std::vector<Vertex> order(current.rbegin(), current.rend());
  for (Vertex x : order) {
    std::vector<Vertex> without;
    without.reserve(current.size());
    for (Vertex y : current)
      if (y != x) without.push_back(y);
    const std::int64_t d = deficiency(g, gamma, without).delta;
    if (d <= delta) {
      current = std::move(without);
      delta = d;
    }
  }
  return current;
}

StarSolver::StarSolver(Graph g) : graph_(std::move(g)), network_(graph_) {}

std::int64_t StarSolver::max_orientable(std::span<const std::int64_t> capacities) {
  return network_.solve(capacities);
}

StarDecision StarSolver::decide(const PrecentralFunction& gamma) {
  const int k = gamma.k();
  std::vector<std::int64_t> caps(gamma.values().begin(), gamma.values().end());
  for (auto& c : caps) c *= k;
  const std::int64_t flow = network_.solve(caps);

  if (flow == graph_.size()) {
    const auto tails = network_.tails();
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(graph_.order()));
    const auto edges = graph_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) out[tails[i]].push_back(edges[i].other(tails[i]));
    StarDecomposition d{k, {}};
    for (Vertex x = 0; x < graph_.order(); ++x) {
      auto& leaves = out[x];
      std::sort(leaves.begin(), leaves.end());
      if (static_cast<std::int64_t>(leaves.size()) != k * gamma[x]) {
        throw std::logic_error("saturating flow with unexpected out-degree");
      }
      for (std::size_t i = 0; i < leaves.size(); i += static_cast<std::size_t>(k)) {
        d.stars.push_back({x, std::vector<Vertex>(leaves.begin() + static_cast<std::ptrdiff_t>(i),
                                                  leaves.begin() + static_cast<std::ptrdiff_t>(i) + k)});
      }
    }
    return d;
  }

  // Max flow = |E| + min_T Delta_T, attained by the residual source side.
  const auto side = network_.source_side();
  const DeficiencyWitness cut = deficiency(graph_, gamma, side);
  if (cut.delta != flow - graph_.size()) {
    throw std::logic_error("minimum cut does not match flow deficit");
  }
  return deficiency(graph_, gamma, shrink_witness(graph_, gamma, cut.T));
}

StarDecision decide_star_decomposition(const Graph& g, const PrecentralFunction& gamma) {
  StarSolver solver(g);
  return solver.decide(gamma);
}

std::optional<Violation> validate_decomposition(const Graph& g, const StarDecomposition& d,
                                                bool partial) {
  std::vector<char> covered(static_cast<std::size_t>(g.size()), 0);
  for (std::size_t i = 0; i < d.stars.size(); ++i) {
    const Star& star = d.stars[i];
    if (static_cast<int>(star.leaves.size()) != d.k) {
      return Violation{"star has " + std::to_string(star.leaves.size()) + " leaves, expected " +
                           std::to_string(d.k),
                       std::nullopt, i};
    }
    if (star.center < 0 || star.center >= g.order()) {
      return Violation{"star centre out of range", std::nullopt, i};
    }
    std::vector<Vertex> leaves = star.leaves;
    std::sort(leaves.begin(), leaves.end());
    if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) {
      return Violation{"star repeats a leaf", std::nullopt, i};
    }
    for (Vertex leaf : star.leaves) {
      if (leaf == star.center) return Violation{"centre is also a leaf", std::nullopt, i};
      const std::int64_t idx = g.edge_index(star.center, leaf);
      if (idx < 0) {
        Violation v{"edge not in graph", std::nullopt, i};
        if (leaf >= 0 && leaf < g.order()) v.edge = Edge(star.center, leaf);
        return v;
      }
      if (covered[idx]) return Violation{"edge covered twice", Edge(star.center, leaf), i};
      covered[idx] = 1;
    }
  }
  if (!partial) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!covered[i]) return Violation{"edge uncovered", edges[i], std::nullopt};
  }
  return std::nullopt;
}

std::vector<std::int64_t> central_function(int order, const StarDecomposition& d) {
  std::vector<std::int64_t> gamma(static_cast<std::size_t>(order), 0);
  for (const Star& s : d.stars) ++gamma.at(static_cast<std::size_t>(s.center));
  return gamma;
}

std::vector<std::int64_t> balanced_gamma(const Graph& g, int k) {
  if (k < 1 || g.size() % k != 0) throw InvalidInput("balanced gamma needs k | |E|");
  const std::int64_t b = g.size() / k;
  const std::int64_t unit = 2 * static_cast<std::int64_t>(k);
  std::vector<std::int64_t> gamma(static_cast<std::size_t>(g.order()));
  std::int64_t assigned = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    gamma[x] = g.degree(x) / unit;
    assigned += gamma[x];
  }
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b2) {
    return g.degree(a) % unit > g.degree(b2) % unit;
  });
  for (std::int64_t i = 0; assigned < b; ++i, ++assigned) ++gamma[order[static_cast<std::size_t>(i)]];
  return gamma;
}

BalancedAttempt decompose_balanced(const Graph& g, int k) {
  BalancedAttempt attempt;
  attempt.gamma = balanced_gamma(g, k);
  StarSolver solver(g);
  const std::int64_t n = g.order();
  const int max_repairs = static_cast<int>(std::max<std::int64_t>(1, n * n));

  for (;;) {
    const PrecentralFunction gamma(g, k, attempt.gamma);
    StarDecision decision = solver.decide(gamma);
    if (auto* d = std::get_if<StarDecomposition>(&decision)) {
      attempt.decomposition = std::move(*d);
      return attempt;
    }
    attempt.last_witness = std::get<DeficiencyWitness>(decision);
    if (attempt.repairs >= max_repairs) return attempt;

    const auto& T = attempt.last_witness->T;
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    for (Vertex x : T) in_t[x] = 1;
    Vertex from = -1;
    for (Vertex x : T)
      if (attempt.gamma[x] > 0 && (from < 0 || attempt.gamma[x] > attempt.gamma[from])) from = x;
    Vertex to = -1;
    std::int64_t best_slack = k - 1;
    for (Vertex y = 0; y < n; ++y) {
      if (in_t[y]) continue;
      const std::int64_t slack = g.degree(y) - k * attempt.gamma[y];
      if (slack > best_slack) {
        best_slack = slack;
        to = y;
      }
    }
    if (from < 0 || to < 0) return attempt;
    --attempt.gamma[from];
    ++attempt.gamma[to];
    ++attempt.repairs;
  }
}

std::optional<StarDecomposition> decompose_complete(int n, int k) {
  if (n < 1 || k < 2) throw InvalidInput("decompose_complete needs n >= 1 and k >= 2");
  if (n == 1) return StarDecomposition{k, {}};
  if (binom2(n) % k != 0) return std::nullopt;
  return decompose_balanced(complete_graph(n), k).decomposition;
}

std::variant<StarDecomposition, OddComponent> two_star_decompose(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    std::int64_t twice = 0;
    for (Vertex x : comp) twice += g.degree(x);
    if ((twice / 2) % 2 != 0) return OddComponent{comp, twice / 2};
  }

  const int n = g.order();
  const auto edges = g.edges();
  std::vector<char> used(edges.size(), 0);
  std::vector<std::int64_t> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> preorder;
  preorder.reserve(static_cast<std::size_t>(n));

  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      preorder.push_back(x);
      for (auto it = g.neighbors(x).rbegin(); it != g.neighbors(x).rend(); ++it) {
        if (!seen[*it]) {
          seen[*it] = 1;
          parent_edge[*it] = g.edge_index(x, *it);
          stack.push_back(*it);
        }
      }
    }
  }

  StarDecomposition d{2, {}};
  // Reverse preorder visits every vertex after all of its tree descendants.
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const Vertex x = *it;
    std::vector<std::int64_t> open;
    for (Vertex y : g.neighbors(x)) {
      const std::int64_t idx = g.edge_index(x, y);
      if (!used[idx] && idx != parent_edge[x]) open.push_back(idx);
    }
    std::size_t i = 0;
    for (; i + 1 < open.size(); i += 2) {
      used[open[i]] = used[open[i + 1]] = 1;
      Vertex a = edges[open[i]].other(x);
      Vertex b = edges[open[i + 1]].other(x);
      d.stars.push_back({x, {std::min(a, b), std::max(a, b)}});
    }
    if (i < open.size()) {
      const std::int64_t up = parent_edge[x];
      if (up < 0) throw std::logic_error("unpaired edge at a DFS root of an even component");
      used[open[i]] = used[up] = 1;
      Vertex a = edges[open[i]].other(x);
      Vertex b = edges[up].other(x);
      d.stars.push_back({x, {std::min(a, b), std::max(a, b)}});
    }
  }
  return d;
}

}  // namespace stardec
