#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "edgecut/error.hpp"

namespace edgecut {

using Vertex = int;
using Mask = std::uint64_t;

/// Input record for build(): `mult` parallel edges between u and v.
struct EdgeSpec {
  Vertex u;
  Vertex v;
  int mult = 1;
};

/// A vertex pair u < v together with its multiplicity.
struct WeightedPair {
  Vertex u;
  Vertex v;
  int mult;

  auto operator<=>(const WeightedPair&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet from_mask(Mask mask);
  static VertexSet range(int n);  // {0, ..., n-1}

  Mask to_mask() const;
  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

  VertexSet complement(int n) const;
  bool intersects(const VertexSet& other) const;

  // Plain lexicographic order on the sorted member lists.
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Smaller set first, then lexicographic. Used for every tie-break.
bool size_then_lex_less(const VertexSet& a, const VertexSet& b);

/// The representative of {A, complement(A)} used in certificates: the smaller
/// side, or the lexicographically smaller one when both have n/2 vertices.
VertexSet canonical_side(const VertexSet& side, int n);

struct Bipartition {
  VertexSet part1;  // contains vertex 0 (of its component) when computed
  VertexSet part2;

  bool operator==(const Bipartition&) const = default;
};

/// Loop-free undirected multigraph on vertices 0..n-1. Immutable once built.
class Multigraph {
 public:
  Multigraph() = default;

  /// Repeated pairs sum their multiplicities.
  static Multigraph build(int n, std::span<const EdgeSpec> edges);
  static Multigraph build(int n, std::initializer_list<EdgeSpec> edges);

  int order() const { return n_; }
  int multiplicity(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  /// δ(G). Throws EmptyGraph for an edgeless graph.
  int min_degree() const;
  int max_degree() const;
  /// μ(G). Throws EmptyGraph for an edgeless graph.
  int max_multiplicity() const;
  /// Number of edges counted with multiplicity.
  long total_edges() const { return total_edges_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  bool has_edges() const { return !pairs_.empty(); }
  const std::vector<WeightedPair>& pairs() const { return pairs_; }
  /// Distinct neighbours in increasing order.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool is_regular() const;

  bool operator==(const Multigraph& other) const { return n_ == other.n_ && pairs_ == other.pairs_; }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  long total_edges_ = 0;
  std::vector<int> mult_;  // dense n*n
  std::vector<int> degree_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<WeightedPair> pairs_;
};

struct Boundary {
  std::vector<WeightedPair> crossing;  // u inside the set, v outside
  int value = 0;
};

/// N(A) and d(A). Requires a non-empty proper subset.
Boundary boundary(const Multigraph& g, const VertexSet& a);
/// d(A) for a bitmask; no validation. Intended for enumeration loops.
int boundary_value(const Multigraph& g, Mask a);

/// U(G): every present pair gets multiplicity 1.
Multigraph underlying(const Multigraph& g);

/// G[A], relabelled so the i-th smallest member of A becomes vertex i.
Multigraph induced(const Multigraph& g, const VertexSet& a);

bool is_connected(const Multigraph& g);
/// Connectivity of G[A] for a bitmask A; the empty set counts as connected.
bool is_connected_mask(const Multigraph& g, Mask a);
/// True when no vertex of A is isolated inside G[A].
bool has_no_isolated_mask(const Multigraph& g, Mask a);
std::vector<VertexSet> components(const Multigraph& g);

/// The 2-colouring of a connected graph with bipartite U(G); std::nullopt when
/// G is disconnected or contains an odd cycle. part1 holds vertex 0.
std::optional<Bipartition> bipartition(const Multigraph& g);
bool is_valid_bipartition(const Multigraph& g, const Bipartition& bip);

/// Merges A into a single vertex. Vertices outside A keep their relative order
/// as 0..n-|A|-1; the merged vertex is n-|A|. Edges inside A are dropped.
Multigraph contract(const Multigraph& g, const VertexSet& a);

struct SemiRegularity {
  bool semi_regular = false;
  int d1 = 0;
  int d2 = 0;
};

SemiRegularity is_semi_regular(const Multigraph& g, const Bipartition& bip);

struct EdgeDegree {
  int value = 0;
  Vertex u = 0;
  Vertex v = 0;
};

/// ξ(e) = d(u) + d(v) - 2μ(e) for the pair {u, v}.
int edge_degree(const Multigraph& g, Vertex u, Vertex v);
/// ξ(G) with the lexicographically smallest minimising pair.
EdgeDegree xi(const Multigraph& g);

}  // namespace edgecut
