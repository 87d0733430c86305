#pragma once

#include <vector>

#include "edgecut/corpus.hpp"
#include "edgecut/multigraph.hpp"

namespace edgecut::fixtures {

// Cycle 0-1-...-(n-1) whose edges alternately carry multiplicity m and 1.
inline Multigraph doubled_c4(int m = 2) { return gen_multiplied_cycle(4, m, 1); }

inline Multigraph cycle(int n) { return gen_cycle(n); }

inline Multigraph k23() { return gen_complete_bipartite(2, 3, 1); }

inline Multigraph star(int leaves, int mult = 1) {
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, mult});
  return Multigraph::build(leaves + 1, edges);
}

inline Multigraph path(int n) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return Multigraph::build(n, edges);
}

inline Multigraph complete(int n) {
  std::vector<EdgeSpec> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  }
  return Multigraph::build(n, edges);
}

}  // namespace edgecut::fixtures
