#include "stardec/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "stardec/error.hpp"

namespace stardec {

MaxFlow::MaxFlow(int nodes)
    : out_(static_cast<std::size_t>(nodes)),
      level_(static_cast<std::size_t>(nodes)),
      cursor_(static_cast<std::size_t>(nodes)) {}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

void MaxFlow::set_capacity(int arc, std::int64_t capacity) { arcs_[arc].cap = capacity; }

void MaxFlow::reset_flow() {
  for (Arc& a : arcs_) a.flow = 0;
}

bool MaxFlow::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int id : out_[x]) {
      const Arc& a = arcs_[id];
      if (a.cap - a.flow > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[x] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit) {
  if (node == sink) return limit;
  for (std::size_t& i = cursor_[node]; i < out_[node].size(); ++i) {
    const int id = out_[node][i];
    Arc& a = arcs_[id];
    if (a.cap - a.flow <= 0 || level_[a.to] != level_[node] + 1) continue;
    const std::int64_t pushed = push(a.to, sink, std::min(limit, a.cap - a.flow));
    if (pushed > 0) {
      a.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::solve(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<char> MaxFlow::residual_reachable(int source) const {
  std::vector<char> seen(out_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int id : out_[x]) {
      const Arc& a = arcs_[id];
      if (a.cap - a.flow > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

OrientationNetwork::OrientationNetwork(const Graph& g)
    : graph_(&g),
      net_(g.order() + static_cast<int>(g.size()) + 2),
      source_(g.order() + static_cast<int>(g.size())),
      sink_(g.order() + static_cast<int>(g.size()) + 1) {
  const int n = g.order();
  source_arcs_.reserve(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) source_arcs_.push_back(net_.add_arc(source_, x, 0));
  edge_arcs_.reserve(static_cast<std::size_t>(2 * g.size()));
  int node = n;
  for (const Edge& e : g.edges()) {
    edge_arcs_.push_back(net_.add_arc(e.u, node, 1));
    edge_arcs_.push_back(net_.add_arc(e.v, node, 1));
    net_.add_arc(node, sink_, 1);
    ++node;
  }
}

std::int64_t OrientationNetwork::solve(std::span<const std::int64_t> capacities) {
  if (static_cast<int>(capacities.size()) != graph_->order()) {
    throw InvalidInput("one capacity per vertex expected");
  }
  for (std::size_t x = 0; x < capacities.size(); ++x) {
    net_.set_capacity(source_arcs_[x], std::max<std::int64_t>(0, capacities[x]));
  }
  net_.reset_flow();
  return net_.solve(source_, sink_);
}

std::vector<Vertex> OrientationNetwork::tails() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(graph_->size()));
  const auto edges = graph_->edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (net_.flow(edge_arcs_[2 * i]) > 0) out.push_back(edges[i].u);
    else if (net_.flow(edge_arcs_[2 * i + 1]) > 0) out.push_back(edges[i].v);
    else out.push_back(-1);
  }
  return out;
}

std::vector<Vertex> OrientationNetwork::source_side() const {
  const auto seen = net_.residual_reachable(source_);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < graph_->order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

}  // namespace stardec
