#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "edgecut/multigraph.hpp"

namespace edgecut {

/// A vertex bijection; image()[v] is where v goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& image() const { return image_; }

  /// Function composition: (p * q)(v) == p(q(v)).
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  VertexSet apply(const VertexSet& a) const;
  /// True iff μ(p(u)p(v)) == μ(uv) for every pair.
  bool preserves(const Multigraph& g) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Vertex> image_;
};

/// Fully enumerated automorphism group, elements in lexicographic order of
/// their image arrays (identity first).
class AutGroup {
 public:
  AutGroup(int n, std::vector<Vertex> flat_images);

  int degree() const { return n_; }
  std::size_t order() const { return n_ == 0 ? 1 : flat_.size() / static_cast<std::size_t>(n_); }
  std::span<const Vertex> image(std::size_t i) const;
  Permutation element(std::size_t i) const;
  bool contains(const Permutation& p) const;

 private:
  int n_;
  std::vector<Vertex> flat_;
};

struct OrbitPartition {
  std::vector<VertexSet> orbits;  // sorted by smallest member

  int orbit_of(Vertex v) const;
};

/// Visits every multiplicity-preserving bijection; stop early by returning false
/// from the visitor. Returns false iff the visitor stopped the search.
bool for_each_automorphism(const Multigraph& g, const std::function<bool(std::span<const Vertex>)>& visit,
                           int limit = 12);

AutGroup automorphisms(const Multigraph& g, int limit = 12);
std::size_t count_automorphisms(const Multigraph& g, int limit = 12);

/// Orbits of an enumerated group acting on 0..n-1.
OrbitPartition orbits(const AutGroup& group, int n);

/// Orbits computed by targeted "is there an automorphism mapping u to v"
/// searches, without materialising the group. Optional vertex labels restrict
/// the search to label-preserving automorphisms.
OrbitPartition vertex_orbits(const Multigraph& g, int limit = 12, std::span<const int> labels = {});

bool is_vertex_transitive(const Multigraph& g, int limit = 12);

/// Orbit: Aut(G) has each part inside a single orbit, automorphisms that swap
/// the parts included. PartPreserving: only the subgroup fixing both parts
/// setwise is used.
enum class HalfTransitivityReading { Orbit, PartPreserving };

struct HalfTransitivity {
  bool half_transitive = false;
  Bipartition parts;
};

/// Throws NotBipartite when G is disconnected or not bipartite.
HalfTransitivity is_half_transitive(const Multigraph& g, HalfTransitivityReading reading = HalfTransitivityReading::Orbit,
                                    int limit = 12);

/// Transitivity on each side of an arbitrary given partition (which need not be
/// the 2-colouring, e.g. for disconnected induced subgraphs).
bool is_transitive_on_parts(const Multigraph& g, const Bipartition& parts,
                            HalfTransitivityReading reading = HalfTransitivityReading::Orbit, int limit = 12);

/// A proper non-trivial set (2 <= |A| <= n-1) that every automorphism maps onto
/// itself or off itself. Throws TrivialSet for other sizes.
bool is_imprimitive_block(const Multigraph& g, const VertexSet& a, int limit = 12);
bool is_imprimitive_block(const AutGroup& group, const VertexSet& a);

/// For a connected half-transitive G and an imprimitive block A meeting both
/// parts, returns whether G[A] is transitive on A∩V1 and on A∩V2.
/// PreconditionViolated when G or A do not qualify.
bool induced_half_transitivity_check(const Multigraph& g, const VertexSet& a, int limit = 12);

bool are_isomorphic(const Multigraph& g, const Multigraph& h);

}  // namespace edgecut
