#include "stardec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "stardec/error.hpp"

namespace stardec {

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound:
      return "found";
    case SearchOutcome::kExhausted:
      return "exhausted-nonexistence";
    case SearchOutcome::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

SearchOutcome search_outcome_from_string(std::string_view text) {
  if (text == "found") return SearchOutcome::kFound;
  if (text == "exhausted-nonexistence") return SearchOutcome::kExhausted;
  if (text == "budget-exceeded") return SearchOutcome::kBudgetExceeded;
  throw InvalidInput("unknown search outcome '" + std::string(text) + "'");
}

namespace {

StarDecomposition stars_from_tails(const Graph& g, int k, std::span<const Vertex> tails) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.order()));
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out[tails[i]].push_back(edges[i].other(tails[i]));
  StarDecomposition d{k, {}};
  for (Vertex x = 0; x < g.order(); ++x) {
    auto& leaves = out[x];
    std::sort(leaves.begin(), leaves.end());
    for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= leaves.size();
         i += static_cast<std::size_t>(k)) {
      d.stars.push_back({x, std::vector<Vertex>(leaves.begin() + static_cast<std::ptrdiff_t>(i),
                                                leaves.begin() + static_cast<std::ptrdiff_t>(i) + k)});
    }
  }
  return d;
}

class EdgeBacktracker {
 public:
  EdgeBacktracker(const Graph& g, int k, std::uint64_t budget,
                  std::optional<std::span<const std::int64_t>> gamma)
      : g_(g), k_(k), budget_(budget), gamma_(gamma) {
    out_.assign(static_cast<std::size_t>(g.order()), 0);
    rem_.resize(static_cast<std::size_t>(g.order()));
    for (Vertex x = 0; x < g.order(); ++x) rem_[x] = g.degree(x);
    tails_.assign(static_cast<std::size_t>(g.size()), -1);
  }

  SearchTranscript run() {
    SearchTranscript t;
    bool ok = true;
    for (Vertex x = 0; x < g_.order() && ok; ++x) ok = feasible(x);
    const bool found = ok && search(0);
    t.nodes_explored = nodes_;
    if (found) {
      t.outcome = SearchOutcome::kFound;
      t.decomposition = stars_from_tails(g_, k_, tails_);
    } else {
      t.outcome = aborted_ ? SearchOutcome::kBudgetExceeded : SearchOutcome::kExhausted;
    }
    return t;
  }

 private:
  bool feasible(Vertex x) const {
    if (gamma_) {
      const std::int64_t target = k_ * (*gamma_)[x];
      return out_[x] <= target && out_[x] + rem_[x] >= target;
    }
    const std::int64_t open = out_[x] % k_;
    return open == 0 || rem_[x] >= k_ - open;
  }

  bool search(std::size_t i) {
    if (i == tails_.size()) return true;
    const Edge e = g_.edges()[i];
    for (Vertex c : {e.u, e.v}) {
      if (++nodes_ > budget_) {
        aborted_ = true;
        return false;
      }
      ++out_[c];
      --rem_[e.u];
      --rem_[e.v];
      tails_[i] = c;
      if (feasible(e.u) && feasible(e.v) && search(i + 1)) return true;
      --out_[c];
      ++rem_[e.u];
      ++rem_[e.v];
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::optional<std::span<const std::int64_t>> gamma_;
  std::vector<std::int64_t> out_;
  std::vector<std::int64_t> rem_;
  std::vector<Vertex> tails_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

class GammaSearch {
 public:
  GammaSearch(const Graph& g, int k, std::uint64_t budget)
      : solver_(g), k_(k), budget_(budget) {
    const Graph& graph = solver_.graph();
    const int n = graph.order();
    ub_.resize(static_cast<std::size_t>(n));
    target_.resize(static_cast<std::size_t>(n));
    for (Vertex x = 0; x < n; ++x) {
      ub_[x] = graph.degree(x) / k;
      target_[x] = (graph.degree(x) + k) / (2 * k);
    }
    auto classes = twin_classes(graph);
    std::stable_sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
      return ub_[a.front()] > ub_[b.front()];
    });
    prev_in_class_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& cls : classes) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        order_.push_back(cls[i]);
        if (i > 0) prev_in_class_[cls[i]] = cls[i - 1];
      }
    }
    suffix_ub_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) suffix_ub_[i] = suffix_ub_[i + 1] + ub_[order_[i]];
    gamma_.assign(static_cast<std::size_t>(n), -1);
    caps_.resize(static_cast<std::size_t>(n));
  }

  SearchTranscript run() {
    SearchTranscript t;
    const Graph& g = solver_.graph();
    if (g.size() % k_ != 0) {
      t.outcome = SearchOutcome::kExhausted;
      return t;
    }
    const bool found = relaxations_hold(g.size() / k_) && search(0, g.size() / k_);
    t.nodes_explored = nodes_;
    if (found) {
      t.outcome = SearchOutcome::kFound;
      t.decomposition = std::move(found_);
    } else {
      t.outcome = aborted_ ? SearchOutcome::kBudgetExceeded : SearchOutcome::kExhausted;
    }
    return t;
  }

 private:
  // Orientation relaxations of the partial assignment: every edge must fit
  // under the upper capacities, and the assigned vertices must be able to
  // collect their exact out-degrees simultaneously.
  bool relaxations_hold(std::int64_t remaining) {
    const Graph& g = solver_.graph();
    std::int64_t assigned_out = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (gamma_[x] >= 0) {
        caps_[x] = k_ * gamma_[x];
        assigned_out += caps_[x];
      } else {
        caps_[x] = k_ * std::min(ub_[x], remaining);
      }
    }
    if (solver_.max_orientable(caps_) < g.size()) return false;
    if (assigned_out == 0) return true;
    for (Vertex x = 0; x < g.order(); ++x)
      if (gamma_[x] < 0) caps_[x] = 0;
    return solver_.max_orientable(caps_) == assigned_out;
  }

  bool zero_allowed(Vertex x) const {
    for (Vertex y : solver_.graph().neighbors(x)) {
      if (gamma_[y] == 0) return false;
      if (gamma_[y] < 0 && ub_[y] == 0) return false;
    }
    return true;
  }

  bool search(std::size_t pos, std::int64_t remaining) {
    if (aborted_) return false;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (pos == order_.size()) {
      if (remaining != 0) return false;
      const Graph& g = solver_.graph();
      PrecentralFunction gamma(g, k_, gamma_);
      auto decision = solver_.decide(gamma);
      if (auto* d = std::get_if<StarDecomposition>(&decision)) {
        found_ = std::move(*d);
        return true;
      }
      return false;
    }
    if (remaining > suffix_ub_[pos]) return false;

    const Vertex x = order_[pos];
    std::int64_t hi = std::min(ub_[x], remaining);
    if (prev_in_class_[x] >= 0) hi = std::min(hi, gamma_[prev_in_class_[x]]);

    // Values closest to deg/(2k) first, larger first on ties.
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi + 1));
    std::iota(values.begin(), values.end(), 0);
    const std::int64_t target = target_[x];
    std::stable_sort(values.begin(), values.end(), [&](std::int64_t a, std::int64_t b) {
      const std::int64_t da = a > target ? a - target : target - a;
      const std::int64_t db = b > target ? b - target : target - b;
      if (da != db) return da < db;
      return a > b;
    });

    for (std::int64_t v : values) {
      if (v == 0 && !zero_allowed(x)) continue;
      gamma_[x] = v;
      if (relaxations_hold(remaining - v) && search(pos + 1, remaining - v)) return true;
      gamma_[x] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  StarSolver solver_;
  int k_;
  std::uint64_t budget_;
  std::vector<std::int64_t> ub_;
  std::vector<std::int64_t> target_;
  std::vector<Vertex> order_;
  std::vector<Vertex> prev_in_class_;
  std::vector<std::int64_t> suffix_ub_;
  std::vector<std::int64_t> gamma_;
  std::vector<std::int64_t> caps_;
  StarDecomposition found_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SearchTranscript exhaustive_decomposition(const Graph& g, int k, std::uint64_t budget,
                                          std::optional<std::span<const std::int64_t>> gamma) {
  if (k < 1) throw InvalidInput("star size k must be positive");
  if (gamma && static_cast<int>(gamma->size()) != g.order()) {
    throw InvalidInput("gamma needs one value per vertex");
  }
  if (!gamma && g.size() % k != 0) {
    return SearchTranscript{0, SearchOutcome::kExhausted, std::nullopt, std::nullopt};
  }
  return EdgeBacktracker(g, k, budget, gamma).run();
}

MinDeficiency enumerate_min_deficiency(const Graph& g, const PrecentralFunction& gamma) {
  const int n = g.order();
  if (n > kMaxEnumerationOrder) {
    throw InvalidInput("subset enumeration limited to " + std::to_string(kMaxEnumerationOrder) +
                       " vertices");
  }
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1u;
  MinDeficiency out;
  out.delta = std::numeric_limits<std::int64_t>::max();
  int best_card = std::numeric_limits<int>::max();
  for (std::uint64_t mask64 = 0; mask64 <= all; ++mask64) {
    const auto t = static_cast<std::uint32_t>(mask64);
    const std::uint32_t s = all & ~t;
    std::int64_t inside_twice = 0;
    std::int64_t minus = 0;
    for (int x = 0; x < n; ++x) {
      if (s >> x & 1u) inside_twice += std::popcount(adj[x] & s);
      else minus += gamma.k() * gamma[x];
    }
    const std::int64_t delta = g.size() - inside_twice / 2 - minus;
    const int card = std::popcount(t);
    if (delta < out.delta || (delta == out.delta && card < best_card)) {
      out.delta = delta;
      best_card = card;
      out.minimizers.clear();
    }
    if (delta == out.delta && card == best_card) {
      std::vector<Vertex> set;
      for (int x = 0; x < n; ++x)
        if (t >> x & 1u) set.push_back(x);
      out.minimizers.push_back(std::move(set));
    }
  }
  return out;
}

SearchTranscript exhaustive_gamma_search(const Graph& g, int k, std::uint64_t budget) {
  if (k < 1) throw InvalidInput("star size k must be positive");
  return GammaSearch(g, k, budget).run();
}

MaximalPartial sample_maximal_partial(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 2) throw InvalidInput("sample_maximal_partial needs n >= 1 and k >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> open(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 1));
  std::vector<int> degree(static_cast<std::size_t>(n), n - 1);
  for (int x = 0; x < n; ++x) open[x][x] = 0;

  MaximalPartial result;
  result.seed = seed;
  result.packing.k = k;
  for (;;) {
    std::vector<Vertex> candidates;
    for (Vertex x = 0; x < n; ++x)
      if (degree[x] >= k) candidates.push_back(x);
    if (candidates.empty()) break;
    const Vertex x = candidates[rng() % candidates.size()];
    std::vector<Vertex> nbrs;
    for (Vertex y = 0; y < n; ++y)
      if (open[x][y]) nbrs.push_back(y);
    for (int i = 0; i < k; ++i) {
      const std::size_t j = static_cast<std::size_t>(i) + rng() % (nbrs.size() - static_cast<std::size_t>(i));
      std::swap(nbrs[static_cast<std::size_t>(i)], nbrs[j]);
    }
    std::vector<Vertex> leaves(nbrs.begin(), nbrs.begin() + k);
    std::sort(leaves.begin(), leaves.end());
    for (Vertex y : leaves) {
      open[x][y] = open[y][x] = 0;
      --degree[x];
      --degree[y];
    }
    result.packing.stars.push_back({x, std::move(leaves)});
  }

  std::vector<Edge> rest;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (open[u][v]) rest.emplace_back(u, v);
  result.leave = Graph(n, std::move(rest));
  if (result.leave.max_degree() > k - 1) throw std::logic_error("greedy packing left a vertex of degree >= k");
  return result;
}

}  // namespace stardec
