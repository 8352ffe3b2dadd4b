#include "stardec/independence.hpp"

#include <algorithm>

#include "stardec/error.hpp"

namespace stardec {

namespace {

// Branch and bound over one component, vertices in ascending label order with
// the include branch first. Improvements are strict, so the first maximum set
// reached is the lexicographically smallest one.
class MaxIndependentSearch {
 public:
  MaxIndependentSearch(std::vector<std::vector<char>> adj, std::uint64_t budget,
                       std::uint64_t& nodes)
      : adj_(std::move(adj)), budget_(budget), nodes_(nodes) {}

  bool run() {
    std::vector<int> cand(adj_.size());
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = static_cast<int>(i);
    search(cand);
    return !aborted_;
  }

  const std::vector<int>& best() const { return best_; }

 private:
  std::size_t clique_cover_size(const std::vector<int>& cand) const {
    std::vector<std::vector<int>> cliques;
    for (int u : cand) {
      bool placed = false;
      for (auto& clique : cliques) {
        bool fits = true;
        for (int w : clique) {
          if (!adj_[u][w]) {
            fits = false;
            break;
          }
        }
        if (fits) {
          clique.push_back(u);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({u});
    }
    return cliques.size();
  }

  void search(const std::vector<int>& cand) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (cand.empty()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + cand.size() <= best_.size()) return;
    if (current_.size() + clique_cover_size(cand) <= best_.size()) return;

    const int v = cand.front();
    std::vector<int> with;
    with.reserve(cand.size());
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (!adj_[v][cand[i]]) with.push_back(cand[i]);
    current_.push_back(v);
    search(with);
    current_.pop_back();

    std::vector<int> without(cand.begin() + 1, cand.end());
    search(without);
  }

  std::vector<std::vector<char>> adj_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  bool aborted_ = false;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.has_edge(set[i], set[j])) return false;
  return true;
}

bool is_clique_union(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    std::int64_t edges = 0;
    for (Vertex x : comp) edges += g.degree(x);
    if (edges / 2 != binom2(static_cast<std::int64_t>(comp.size()))) return false;
  }
  return true;
}

IndependenceResult independence_number(const Graph& g, std::uint64_t budget) {
  IndependenceResult result;
  const auto comps = connected_components(g);

  if (is_clique_union(g)) {
    result.clique_union = true;
    result.alpha = static_cast<int>(comps.size());
    for (const auto& comp : comps) result.witness.push_back(comp.front());
    std::sort(result.witness.begin(), result.witness.end());
    return result;
  }

  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      result.witness.push_back(comp.front());
      continue;
    }
    const std::size_t m = comp.size();
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (Vertex y : g.neighbors(comp[i])) {
        auto j = std::lower_bound(comp.begin(), comp.end(), y) - comp.begin();
        adj[i][static_cast<std::size_t>(j)] = 1;
      }
    }
    MaxIndependentSearch search(std::move(adj), budget, result.nodes);
    if (!search.run()) {
      result.witness.clear();
      return result;
    }
    for (int local : search.best()) result.witness.push_back(comp[local]);
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.alpha = static_cast<int>(result.witness.size());
  return result;
}

CaroWeiBounds caro_wei_bounds(const Graph& g) {
  CaroWeiBounds out;
  for (Vertex x = 0; x < g.order(); ++x) out.sum_form += Rational(1, g.degree(x) + 1);
  const std::int64_t n = g.order();
  if (n > 0) out.ratio_form = Rational(n * n, 2 * g.size() + n);
  return out;
}

Rational clique_refined_bound(const Graph& g, std::span<const Vertex> clique) {
  const std::int64_t n = g.order();
  const std::int64_t r = static_cast<std::int64_t>(clique.size());
  if (r < 1 || r > n) throw InvalidInput("clique size must lie in 1..n");
  for (Vertex x : clique)
    if (x < 0 || x >= n) throw InvalidInput("clique vertex out of range");
  if (!is_clique(g, clique)) throw InvalidInput("certified clique is not a clique");
  if (2 * g.size() > n * (r - 1)) {
    throw InvalidInput("clique-refined bound needs |E| <= n(r-1)/2");
  }
  if (n == r) return Rational(1);
  return 1 + Rational((n - r) * (n - r), 2 * g.size() + n - r * r);
}

}  // namespace stardec
