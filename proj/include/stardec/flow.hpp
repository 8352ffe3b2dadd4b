#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stardec/graph.hpp"

namespace stardec {

// Dinic's algorithm on an integer network. Arc order is insertion order and
// searches always scan arcs in that order, so results are reproducible.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  // Returns the arc id; its reverse arc is id ^ 1.
  int add_arc(int from, int to, std::int64_t capacity);
  void set_capacity(int arc, std::int64_t capacity);
  void reset_flow();

  std::int64_t solve(int source, int sink);

  std::int64_t flow(int arc) const { return arcs_[arc].flow; }
  // Nodes reachable from `source` in the residual network after solve().
  std::vector<char> residual_reachable(int source) const;

 private:
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t flow;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

// The orientation network of a graph: source -> vertex (capacity chosen per
// call), vertex -> edge-node (1) for each endpoint, edge-node -> sink (1).
// An integral flow of value |E| is an orientation in which vertex x has
// out-degree equal to its capacity.
class OrientationNetwork {
 public:
  explicit OrientationNetwork(const Graph& g);

  const Graph& graph() const { return *graph_; }

  // Solves with the given per-vertex out-degree capacities.
  std::int64_t solve(std::span<const std::int64_t> capacities);

  // For each edge (in edges() order) the endpoint it is oriented out of, or -1
  // when the edge carries no flow. Valid after solve().
  std::vector<Vertex> tails() const;

  // Vertices on the source side of the minimum cut found by the last solve().
  std::vector<Vertex> source_side() const;

 private:
  const Graph* graph_;
  MaxFlow net_;
  int source_;
  int sink_;
  std::vector<int> source_arcs_;
  std::vector<int> edge_arcs_;  // two per edge: from u, from v
};

}  // namespace stardec
