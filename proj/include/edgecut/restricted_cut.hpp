#pragma once

#include <string>

#include "edgecut/cut.hpp"

namespace edgecut {

/// λ'(G) exists iff G has at least four vertices and U(G) is not a star.
/// Throws Disconnected for disconnected input.
bool lambda_prime_defined(const Multigraph& g);

/// Human-readable reason why λ' is undefined; empty when it is defined.
std::string lambda_prime_undefined_reason(const Multigraph& g);

struct LambdaPrimeResult {
  int value = 0;
  /// Both sides are free of isolated vertices. Side chosen as in edge_connectivity().
  CutCertificate certificate;
};

/// Restricted edge-connectivity.
///
/// For every unordered pair of vertex-disjoint edges e, f the minimum cut
/// separating {ends of e} from {ends of f} is computed. A minimum such cut never
/// leaves a vertex isolated on either side: the terminals are adjacent to each
/// other, and any other isolated vertex could switch sides and shrink the cut.
/// So every candidate is a restricted cut, and the optimum restricted cut is a
/// candidate for any pair of edges it keeps on opposite sides.
LambdaPrimeResult lambda_prime(const Multigraph& g);

/// λ'-fragments with |A| <= n/2, size-then-lex order.
std::vector<Fragment> lambda_prime_fragments(const Multigraph& g, int max_n_exhaustive = 16);

/// r'(G) and all λ'-atoms.
AtomSet lambda_prime_atoms(const Multigraph& g, int max_n_exhaustive = 16);

struct XiBound {
  bool holds = false;
  int lambda_prime = 0;
  int xi = 0;
};

/// Reports whether λ'(G) <= ξ(G). The bound holds for regular and for
/// semi-regular bipartite multigraphs but can fail in general.
XiBound check_xi_bound(const Multigraph& g);

/// λ'(G) == ξ(G); only meaningful for regular or semi-regular bipartite input
/// (NotSemiRegular otherwise).
bool is_lambda_prime_optimal(const Multigraph& g);

/// Checks that every vertex of the λ'-atom A has at least two distinct
/// neighbours inside A. Requires δ(G) >= 2μ(G), |A| >= 3 and that A really is
/// a λ'-atom; PreconditionViolated otherwise.
bool atom_min_degree_check(const Multigraph& g, const VertexSet& a, int max_n_exhaustive = 16);

}  // namespace edgecut
