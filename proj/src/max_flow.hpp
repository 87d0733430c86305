#pragma once

#include <vector>

namespace edgecut::detail {

// Edmonds-Karp on a dense capacity matrix. Flow values here are bounded by
// vertex degrees, so the number of augmentations stays small.
class DenseFlow {
 public:
  explicit DenseFlow(int nodes);

  void add_undirected(int u, int v, long cap);
  void add_arc(int u, int v, long cap);
  long max_flow(int s, int t);
  /// Nodes reachable from s in the residual graph after max_flow().
  std::vector<char> source_side(int s) const;

 private:
  long& residual(int u, int v) { return cap_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }
  long residual(int u, int v) const { return cap_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }

  int n_;
  std::vector<long> cap_;
  std::vector<std::vector<int>> arcs_;  // nodes with a possibly positive residual in either direction
};

}  // namespace edgecut::detail

#include "edgecut/multigraph.hpp"

namespace edgecut::detail {

struct CutSide {
  int value = 0;
  VertexSet side;
};

/// Minimum cut between two disjoint terminal sets, without the crossing list.
CutSide min_cut_side(const Multigraph& g, const VertexSet& sources, const VertexSet& sinks);

}  // namespace edgecut::detail
