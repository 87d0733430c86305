#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "edgecut/multigraph.hpp"

namespace edgecut {

/// Size thresholds for the exhaustive parts of the engines.
struct Limits {
  int exhaustive = 16;    // subset enumeration (fragments, atoms, witnesses)
  int automorphism = 12;  // backtracking automorphism search
};

inline constexpr int kMaxExhaustive = 30;

enum class FragmentKind { Lambda, StrictLambda, LambdaAtom, Superatom, LambdaPrime, LambdaPrimeAtom };

std::string_view to_string(FragmentKind kind);

struct Fragment {
  VertexSet side;
  int cut_value = 0;
  FragmentKind kind = FragmentKind::Lambda;
};

struct CutCertificate {
  int value = 0;
  VertexSet side;
  std::vector<WeightedPair> crossing;  // boundary(G, side)
};

/// Minimum s-t cut with capacities equal to multiplicities. The side is the
/// set reachable from s in the final residual graph, the smallest source side
/// among all minimum cuts.
CutCertificate min_st_cut(const Multigraph& g, Vertex s, Vertex t);

/// Minimum cut separating two disjoint vertex sets (each set acts as one
/// contracted terminal). The side contains `sources`.
CutCertificate min_cut_between(const Multigraph& g, const VertexSet& sources, const VertexSet& sinks);

/// λ(G) from n-1 max-flow calls rooted at vertex 0. The certificate side has at
/// most n/2 vertices; ties go to the smaller, then lexicographically smaller side.
CutCertificate edge_connectivity(const Multigraph& g);

/// Every λ-fragment A with |A| <= n/2 (when n is even both halves of a
/// balanced cut are listed), in size-then-lex order.
std::vector<Fragment> lambda_fragments(const Multigraph& g, int max_n_exhaustive = 16);

struct AtomSet {
  int size = 0;  // r(G), r'(G), or the superatom cardinality
  std::vector<Fragment> atoms;
};

AtomSet lambda_atoms(const Multigraph& g, int max_n_exhaustive = 16);

/// Smallest strict λ-fragments (2 <= |C| <= n-2); std::nullopt when every
/// minimum cut isolates a vertex.
std::optional<AtomSet> superatoms(const Multigraph& g, int max_n_exhaustive = 16);

bool is_maximally_edge_connected(const Multigraph& g);

struct SuperLambdaVerdict {
  bool super_lambda = false;
  std::optional<Fragment> witness;      // a superatom when not super-λ
  std::optional<int> lambda_prime;      // set when λ' is defined
};

/// Decided by searching for a strict λ-fragment. When λ' is defined the
/// verdict is compared against λ < λ' and a disagreement raises
/// InvariantViolated.
SuperLambdaVerdict is_super_lambda(const Multigraph& g, int max_n_exhaustive = 16);

namespace detail {
void require_connected(const Multigraph& g, std::string_view what);
void require_exhaustive(const Multigraph& g, int limit);
void add_balanced_complements(AtomSet& set, int n);
}  // namespace detail

}  // namespace edgecut
