#include "stardec/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "stardec/error.hpp"

namespace stardec {

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("graph order must be nonnegative");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + "}");
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& list = adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::int64_t Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return it - edges_.begin();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(binom2(n)));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(binom2(n) - g.size()));
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts) {
  int offset = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    for (const Edge& e : part.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += part.order();
  }
  return Graph(offset, std::move(edges));
}

Graph clique_union(std::span<const int> clique_orders) {
  std::vector<Graph> parts;
  parts.reserve(clique_orders.size());
  for (int r : clique_orders) parts.push_back(complete_graph(r));
  return disjoint_union(parts);
}

Graph join(const Graph& base, int s) {
  if (s < 0) throw InvalidInput("join size must be nonnegative");
  const int n = base.order();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.reserve(static_cast<std::size_t>(join_edge_count(base, s)));
  for (Vertex y = 0; y < n; ++y)
    for (int i = 0; i < s; ++i) edges.emplace_back(y, n + i);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) edges.emplace_back(n + i, n + j);
  return Graph(n + s, std::move(edges));
}

std::int64_t join_edge_count(const Graph& base, int s) {
  return base.size() + static_cast<std::int64_t>(base.order()) * s + binom2(s);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  const int n = g.order();
  // True twins share closed neighbourhoods, false twins open ones; no vertex
  // has both kinds, so the nontrivial classes of the two relations are disjoint.
  std::map<std::vector<Vertex>, std::vector<Vertex>> open_groups;
  std::map<std::vector<Vertex>, std::vector<Vertex>> closed_groups;
  for (Vertex x = 0; x < n; ++x) {
    std::vector<Vertex> open(g.neighbors(x).begin(), g.neighbors(x).end());
    std::vector<Vertex> closed = open;
    closed.insert(std::upper_bound(closed.begin(), closed.end(), x), x);
    open_groups[open].push_back(x);
    closed_groups[closed].push_back(x);
  }
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (const auto* groups : {&open_groups, &closed_groups}) {
    for (const auto& [key, members] : *groups) {
      if (members.size() < 2) continue;
      const int id = static_cast<int>(out.size());
      out.push_back(members);
      for (Vertex x : members) cls[x] = id;
    }
  }
  for (Vertex x = 0; x < n; ++x)
    if (cls[x] < 0) out.push_back({x});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool is_pairwise_twin(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Vertex x = set[i];
      const Vertex y = set[j];
      std::vector<Vertex> nx, ny;
      for (Vertex z : g.neighbors(x))
        if (z != y) nx.push_back(z);
      for (Vertex z : g.neighbors(y))
        if (z != x) ny.push_back(z);
      if (nx != ny) return false;
    }
  }
  return true;
}

}  // namespace stardec
