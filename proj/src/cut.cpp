#include "edgecut/cut.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "edgecut/restricted_cut.hpp"
#include "max_flow.hpp"

namespace edgecut {

std::string_view to_string(FragmentKind kind) {
  switch (kind) {
    case FragmentKind::Lambda: return "lambda";
    case FragmentKind::StrictLambda: return "strict_lambda";
    case FragmentKind::LambdaAtom: return "lambda_atom";
    case FragmentKind::Superatom: return "superatom";
    case FragmentKind::LambdaPrime: return "lambda_prime";
    case FragmentKind::LambdaPrimeAtom: return "lambda_prime_atom";
  }
  return "unknown";
}

namespace detail {

void require_connected(const Multigraph& g, std::string_view what) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, std::string(what) + " requires a connected graph");
}

void require_exhaustive(const Multigraph& g, int limit) {
  const int cap = std::min(limit, kMaxExhaustive);
  if (g.order() > cap) {
    throw Error(ErrorCode::TooLargeForExhaustive,
                std::to_string(g.order()) + " vertices exceed the exhaustive limit of " + std::to_string(cap));
  }
}

}  // namespace detail

namespace {

CutCertificate certificate_for(const Multigraph& g, VertexSet side, int value) {
  CutCertificate c;
  c.value = value;
  c.side = std::move(side);
  c.crossing = boundary(g, c.side).crossing;
  return c;
}

bool better_certificate(const CutCertificate& a, const CutCertificate& b) {
  if (a.value != b.value) return a.value < b.value;
  return size_then_lex_less(a.side, b.side);
}

}  // namespace

CutCertificate min_cut_between(const Multigraph& g, const VertexSet& sources, const VertexSet& sinks) {
  const int n = g.order();
  for (const VertexSet* set : {&sources, &sinks}) {
    if (set->empty()) throw Error(ErrorCode::EmptyOrFullSet, "terminal set is empty");
    for (Vertex v : *set) {
      if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }
  }
  if (sources.intersects(sinks)) throw Error(ErrorCode::SameVertex, "source and sink sets overlap");

  auto cut = detail::min_cut_side(g, sources, sinks);
  return certificate_for(g, std::move(cut.side), cut.value);
}

CutCertificate min_st_cut(const Multigraph& g, Vertex s, Vertex t) {
  if (s == t) throw Error(ErrorCode::SameVertex, "s and t coincide");
  return min_cut_between(g, VertexSet{s}, VertexSet{t});
}

CutCertificate edge_connectivity(const Multigraph& g) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "edge connectivity needs at least two vertices");
  detail::require_connected(g, "edge connectivity");
  CutCertificate best;
  best.value = std::numeric_limits<int>::max();
  for (Vertex t = 1; t < g.order(); ++t) {
    CutCertificate c = min_st_cut(g, 0, t);
    c.side = canonical_side(c.side, g.order());
    if (better_certificate(c, best)) best = std::move(c);
  }
  best.crossing = boundary(g, best.side).crossing;
  return best;
}

std::vector<Fragment> lambda_fragments(const Multigraph& g, int max_n_exhaustive) {
  detail::require_exhaustive(g, max_n_exhaustive);
  const int lambda = edge_connectivity(g).value;
  const int n = g.order();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Fragment> out;
  for (Mask a = 1; a < full; ++a) {
    // One side per cut: the smaller, or the one holding vertex 0 on a tie.
    if (2 * std::popcount(a) > n || (2 * std::popcount(a) == n && (a & 1U) == 0)) continue;
    if (boundary_value(g, a) != lambda) continue;
    if (!is_connected_mask(g, a) || !is_connected_mask(g, full & ~a)) {
      throw Error(ErrorCode::InvariantViolated, "a minimum cut left more than two components");
    }
    out.push_back({VertexSet::from_mask(a), lambda, FragmentKind::Lambda});
  }
  std::sort(out.begin(), out.end(), [](const Fragment& x, const Fragment& y) { return size_then_lex_less(x.side, y.side); });
  return out;
}

namespace detail {

// Both sides of a balanced cut are fragments of the same size, so both can be atoms.
void add_balanced_complements(AtomSet& set, int n) {
  if (2 * set.size != n) return;
  const std::size_t listed = set.atoms.size();
  for (std::size_t i = 0; i < listed; ++i) {
    Fragment other = set.atoms[i];
    other.side = other.side.complement(n);
    set.atoms.push_back(std::move(other));
  }
  std::sort(set.atoms.begin(), set.atoms.end(),
            [](const Fragment& x, const Fragment& y) { return size_then_lex_less(x.side, y.side); });
}

}  // namespace detail

AtomSet lambda_atoms(const Multigraph& g, int max_n_exhaustive) {
  auto fragments = lambda_fragments(g, max_n_exhaustive);
  AtomSet result;
  result.size = fragments.front().side.size();
  for (auto& f : fragments) {
    if (f.side.size() != result.size) break;
    f.kind = FragmentKind::LambdaAtom;
    result.atoms.push_back(std::move(f));
  }
  detail::add_balanced_complements(result, g.order());
  return result;
}

std::optional<AtomSet> superatoms(const Multigraph& g, int max_n_exhaustive) {
  auto fragments = lambda_fragments(g, max_n_exhaustive);
  const int n = g.order();
  std::optional<AtomSet> result;
  for (auto& f : fragments) {
    const int size = f.side.size();
    if (size < 2 || size > n - 2) continue;
    if (!result) result = AtomSet{size, {}};
    if (size != result->size) break;
    f.kind = FragmentKind::Superatom;
    result->atoms.push_back(std::move(f));
  }
  if (result) detail::add_balanced_complements(*result, n);
  return result;
}

bool is_maximally_edge_connected(const Multigraph& g) {
  detail::require_connected(g, "maximal edge-connectivity");
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "edge connectivity needs at least two vertices");
  return edge_connectivity(g).value == g.min_degree();
}

SuperLambdaVerdict is_super_lambda(const Multigraph& g, int max_n_exhaustive) {
  detail::require_connected(g, "super edge-connectivity");
  if (g.order() < 3) throw Error(ErrorCode::TooSmall, "super edge-connectivity needs at least three vertices");
  SuperLambdaVerdict verdict;
  auto atoms = superatoms(g, max_n_exhaustive);
  verdict.super_lambda = !atoms.has_value();
  if (atoms) verdict.witness = atoms->atoms.front();

  if (lambda_prime_defined(g)) {
    const int lp = lambda_prime(g).value;
    verdict.lambda_prime = lp;
    const bool criterion = edge_connectivity(g).value < lp;
    if (criterion != verdict.super_lambda) {
      throw Error(ErrorCode::InvariantViolated, "strict-fragment search disagrees with the lambda < lambda' criterion");
    }
  }
  return verdict;
}

}  // namespace edgecut
