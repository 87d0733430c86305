#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgecut/multigraph.hpp"

namespace edgecut {

/// Name of the PRNG behind every randomised generator. Raw 64-bit outputs are
/// consumed directly (no std:: distributions), so streams are reproducible on
/// any conforming implementation.
inline constexpr std::string_view kPrngName = "mt19937_64";

enum class Family {
  Cycle,
  MultipliedCycle,
  CompleteBipartite,
  KmXK2,
  Circulant,
  CosetBigraph,
  RandomBipartiteMulti,
  RandomMulti,
};

std::string_view to_string(Family f);

/// One generator invocation, as written in a corpus manifest line:
///   cycle N
///   multiplied_cycle N MA MB
///   complete_bipartite M N MULT
///   km_x_k2 M
///   circulant N S1 [S2 ...]
///   coset_bigraph P Q M0 [M1 ...]          (gcd(P,Q) multiplicities)
///   random_bipartite_multi N1 N2 PROB MAXMULT SEED
///   random_multi N PROB MAXMULT SEED
struct GeneratorSpec {
  Family family = Family::Cycle;
  std::vector<long> params;
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};

/// Parses a manifest line (InvalidParameters on malformed input).
GeneratorSpec parse_generator_spec(std::string_view line);
std::string format_generator_spec(const GeneratorSpec& spec);
Multigraph generate(const GeneratorSpec& spec);

Multigraph gen_cycle(int n);
/// Cycle 0-1-...-(n-1)-0; edge {i, i+1} has multiplicity m_a for even i, m_b for odd i.
Multigraph gen_multiplied_cycle(int n, int m_a, int m_b);
/// K_{m,n} with V1 = {0..m-1}, uniform multiplicity.
Multigraph gen_complete_bipartite(int m, int n, int mult);
/// Two K_m copies {0..m-1}, {m..2m-1} plus the matching i -- m+i.
Multigraph gen_km_x_k2(int m);
/// Simple circulant: i ~ i ± s (mod n) for s in the connection set, 1 <= s <= n/2.
Multigraph gen_circulant(int n, const std::vector<int>& connection_set);
/// Bipartite graph on V1 = Z_p (vertices 0..p-1) and V2 = Z_q (vertices p..p+q-1):
/// i and j are joined by mults[(j - i) mod gcd(p, q)] parallel edges. The
/// rotation x -> x + 1 acts on both parts at once, so the result is
/// half-transitive whenever it is connected. p == q gives Haar graphs, a
/// constant multiplicity vector gives K_{p,q}.
Multigraph gen_coset_bigraph(int p, int q, const std::vector<int>& mults);
/// Each pair of V1 = {0..n1-1} x V2 = {n1..} is present with probability
/// edge_prob and multiplicity uniform in 1..max_mult. Rejection-samples until
/// connected (CouldNotConnect after the retry budget).
Multigraph gen_random_bipartite_multi(int n1, int n2, double edge_prob, int max_mult, std::uint64_t seed);
Multigraph gen_random_multi(int n, double edge_prob, int max_mult, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

struct HalfTransitiveCorpus {
  std::vector<NamedGraph> graphs;
  bool truncated = false;  // the budget cut the stream short
};

/// Connected half-transitive multigraphs with at most max_n vertices and
/// multiplicities at most max_mult, pairwise non-isomorphic, in a fixed order:
/// multiplied even cycles, coset bigraphs, every bipartite multigraph on at
/// most six vertices, then Cartesian products of small factors. Each candidate
/// is kept only if the symmetry module confirms half-transitivity.
HalfTransitiveCorpus enumerate_half_transitive(int max_n = 10, int max_mult = 3, std::size_t budget = 20000);

/// Every connected multigraph on 2..max_n vertices with multiplicities in
/// 1..max_mult, up to isomorphism of the underlying simple graph (each simple
/// isomorphism class contributes all of its multiplicity assignments).
void for_each_small_multigraph(int max_n, int max_mult, const std::function<void(const Multigraph&)>& visit);

/// Connected simple circulants on 3..max_n vertices, one per connection set.
std::vector<NamedGraph> all_circulants(int max_n);

/// Seeded random search for a connected multigraph whose λ' is defined and
/// exceeds ξ. Returns std::nullopt when the budget runs out.
std::optional<NamedGraph> search_xi_violation(std::size_t budget = 2000, std::uint64_t seed = 1);

/// Bucketed isomorphism filter used to keep corpora free of duplicates.
class IsomorphismFilter {
 public:
  /// True if g is new (and records it).
  bool insert(const Multigraph& g);

 private:
  std::map<std::vector<long>, std::vector<Multigraph>> buckets_;
};

}  // namespace edgecut
