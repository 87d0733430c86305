#include "max_flow.hpp"

#include <algorithm>
#include <limits>

namespace edgecut::detail {

DenseFlow::DenseFlow(int nodes)
    : n_(nodes), cap_(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), 0), arcs_(static_cast<std::size_t>(nodes)) {}

void DenseFlow::add_arc(int u, int v, long cap) {
  if (residual(u, v) == 0 && residual(v, u) == 0) {
    arcs_[static_cast<std::size_t>(u)].push_back(v);
    arcs_[static_cast<std::size_t>(v)].push_back(u);
  }
  residual(u, v) += cap;
}

void DenseFlow::add_undirected(int u, int v, long cap) {
  add_arc(u, v, cap);
  residual(v, u) += cap;
}

long DenseFlow::max_flow(int s, int t) {
  long total = 0;
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n_));
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(s)] = s;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(t)] < 0; ++head) {
      const int u = queue[head];
      for (int v : arcs_[static_cast<std::size_t>(u)]) {
        if (parent[static_cast<std::size_t>(v)] < 0 && residual(u, v) > 0) {
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[static_cast<std::size_t>(t)] < 0) return total;
    long push = std::numeric_limits<long>::max();
    for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
      push = std::min(push, residual(parent[static_cast<std::size_t>(v)], v));
    }
    for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      residual(u, v) -= push;
      residual(v, u) += push;
    }
    total += push;
  }
}

std::vector<char> DenseFlow::source_side(int s) const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : arcs_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)] && residual(u, v) > 0) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace edgecut::detail

namespace edgecut::detail {

CutSide min_cut_side(const Multigraph& g, const VertexSet& sources, const VertexSet& sinks) {
  const int n = g.order();
  const int super_source = n;
  const int super_sink = n + 1;
  DenseFlow flow(n + 2);
  for (const auto& p : g.pairs()) flow.add_undirected(p.u, p.v, p.mult);
  const long unbounded = g.total_edges() + 1;
  for (Vertex v : sources) flow.add_arc(super_source, v, unbounded);
  for (Vertex v : sinks) flow.add_arc(v, super_sink, unbounded);
  const long value = flow.max_flow(super_source, super_sink);
  const auto reach = flow.source_side(super_source);
  std::vector<Vertex> side;
  for (Vertex v = 0; v < n; ++v) {
    if (reach[static_cast<std::size_t>(v)]) side.push_back(v);
  }
  return {static_cast<int>(value), VertexSet(std::move(side))};
}

}  // namespace edgecut::detail
