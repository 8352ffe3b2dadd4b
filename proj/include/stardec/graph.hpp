#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace stardec {

using Vertex = int;

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
// kept in lexicographic order and adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InvalidInput on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::int64_t size() const { return static_cast<std::int64_t>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex x) const { return adj_[x]; }
  int degree(Vertex x) const { return static_cast<int>(adj_[x].size()); }
  int max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;
  // Position of {a,b} in edges(), or -1.
  std::int64_t edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& g, const Graph& h) {
    return g.n_ == h.n_ && g.edges_ == h.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph complement(const Graph& g);

// Vertex-disjoint union; the i-th graph's vertices follow those of graph i-1.
Graph disjoint_union(std::span<const Graph> parts);
// Disjoint union of complete graphs of the given orders, in order.
Graph clique_union(std::span<const int> clique_orders);

// L v K_s with base vertices 0..n-1 and join vertices n..n+s-1.
Graph join(const Graph& base, int s);
std::int64_t join_edge_count(const Graph& base, int s);

struct JoinLayout {
  Graph base;
  int join_size = 0;

  int order() const { return base.order() + join_size; }
  bool is_join_vertex(Vertex x) const { return x >= base.order(); }
  Vertex join_vertex(int i) const { return base.order() + i; }
  std::int64_t edge_count() const { return join_edge_count(base, join_size); }
  Graph realize() const { return join(base, join_size); }
};

// Connected components, each sorted, listed by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Maximal classes of pairwise-twin vertices (same neighbourhood apart from
// each other). Singletons are included; classes are sorted by smallest vertex.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);
bool is_pairwise_twin(const Graph& g, std::span<const Vertex> set);

std::int64_t binom2(std::int64_t n);

}  // namespace stardec
