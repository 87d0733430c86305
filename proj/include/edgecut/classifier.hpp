#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgecut/cut.hpp"
#include "edgecut/restricted_cut.hpp"
#include "edgecut/symmetry.hpp"

namespace edgecut {

/// The three characterisations of half-transitive multigraphs:
///   T32  not maximally edge-connected  <=>  witness with lhs <= min(d1,d2) - 1
///   T42  not super edge-connected      <=>  witness with lhs <= min(d1,d2)
///   T54  not λ'-optimal                <=>  witness with lhs <= ξ(G) - 1
/// where a witness is a proper induced connected half-transitive subgraph H
/// and lhs = |A1|(d1 - d1') + |A2|(d2 - d2').
enum class Theorem { T32, T42, T54 };

std::string_view to_string(Theorem t);

struct TheoremWitness {
  VertexSet subgraph_vertices;
  int a1 = 0;   // |V1 ∩ V(H)|
  int a2 = 0;   // |V2 ∩ V(H)|
  int d1p = 0;  // degree in H of the A1 vertices
  int d2p = 0;  // degree in H of the A2 vertices
  int lhs = 0;
  int bound = 0;
  Theorem theorem = Theorem::T32;
};

struct ClassifyOptions {
  Limits limits;
  bool automorphisms = true;
  HalfTransitivityReading reading = HalfTransitivityReading::Orbit;
};

/// Bound on the witness left-hand side for the given theorem.
int theorem_bound(const Multigraph& g, Theorem t);

/// Returns the witness record when S qualifies for theorem t, std::nullopt
/// otherwise. G must be connected and half-transitive.
std::optional<TheoremWitness> validate_witness(const Multigraph& g, const VertexSet& s, Theorem t,
                                               const ClassifyOptions& options = {});

/// First witness in size-then-lex order over proper subsets with |S| >= 2.
/// Throws Disconnected, NotBipartite, NotHalfTransitive, TooLargeForExhaustive.
std::optional<TheoremWitness> find_witness(const Multigraph& g, Theorem t, const ClassifyOptions& options = {});

struct TheoremCheck {
  Theorem theorem = Theorem::T32;
  bool applicable = false;
  std::string reason;                 // why the check is not applicable
  bool predicted = false;             // a witness exists, i.e. the theorem predicts non-optimality
  bool observed = false;              // the cut engines report non-optimality
  bool consistent = true;             // predicted == observed (true when not applicable)
  std::optional<TheoremWitness> witness;
  /// When non-optimal: whether the corresponding atom (λ-atom, superatom,
  /// λ'-atom) is itself a valid witness.
  std::optional<bool> atom_is_witness;
};

TheoremCheck check_theorem_3_2(const Multigraph& g, const ClassifyOptions& options = {});
TheoremCheck check_theorem_4_2(const Multigraph& g, const ClassifyOptions& options = {});
TheoremCheck check_theorem_5_4(const Multigraph& g, const ClassifyOptions& options = {});
TheoremCheck check_theorem(const Multigraph& g, Theorem t, const ClassifyOptions& options = {});

/// Runs the three checks, turning size/shape errors into not-applicable rows.
std::vector<TheoremCheck> run_theorem_checks(const Multigraph& g, const ClassifyOptions& options = {});

struct SymmetrySummary {
  bool computed = false;
  std::string reason;  // set when not computed
  std::size_t group_order = 0;
  std::vector<VertexSet> orbits;
  bool vertex_transitive = false;
  bool bipartite = false;
  bool half_transitive = false;
  std::optional<Bipartition> parts;
};

struct ClassificationReport {
  ClassifyOptions options;
  int n = 0;
  int pairs = 0;
  long edges = 0;
  int delta = 0;
  int mu = 0;
  EdgeDegree xi;
  bool regular = false;
  std::optional<Bipartition> bipartition;
  std::optional<SemiRegularity> semi_regular;

  CutCertificate lambda_cut;
  std::optional<AtomSet> lambda_atoms;
  std::string atoms_reason;  // set when exhaustive parts were skipped

  std::optional<LambdaPrimeResult> lambda_prime;
  std::string lambda_prime_reason;
  std::optional<AtomSet> lambda_prime_atoms;
  std::optional<bool> xi_bound_holds;

  bool maximally_edge_connected = false;
  std::optional<bool> super_lambda;
  std::optional<Fragment> super_lambda_witness;
  std::string super_lambda_method;
  std::optional<bool> lambda_prime_optimal;
  std::string lambda_prime_optimal_reason;

  SymmetrySummary symmetry;
  std::vector<TheoremCheck> theorem_checks;

  bool all_checks_consistent() const;
};

/// Aggregates every invariant, verdict and applicable theorem check.
ClassificationReport classify(const Multigraph& g, const ClassifyOptions& options = {});

}  // namespace edgecut
