#include "edgecut/restricted_cut.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "edgecut/parallel.hpp"
#include "max_flow.hpp"

namespace edgecut {

namespace {

bool underlying_is_star(const Multigraph& g) {
  // A connected graph is a star iff some vertex touches every edge.
  for (Vertex c = 0; c < g.order(); ++c) {
    if (static_cast<int>(g.neighbors(c).size()) == g.pair_count()) return true;
  }
  return false;
}

void require_defined(const Multigraph& g) {
  if (!lambda_prime_defined(g)) throw Error(ErrorCode::NotDefined, lambda_prime_undefined_reason(g));
}

bool is_restricted_side(const Multigraph& g, Mask side) {
  const Mask full = (Mask{1} << g.order()) - 1;
  return has_no_isolated_mask(g, side) && has_no_isolated_mask(g, full & ~side);
}

}  // namespace

bool lambda_prime_defined(const Multigraph& g) {
  detail::require_connected(g, "restricted edge-connectivity");
  return g.order() >= 4 && !underlying_is_star(g);
}

std::string lambda_prime_undefined_reason(const Multigraph& g) {
  if (!is_connected(g)) return "graph is disconnected";
  if (g.order() < 4) return "fewer than four vertices";
  if (underlying_is_star(g)) return "underlying graph is a star K_{1,n-1}";
  return {};
}

LambdaPrimeResult lambda_prime(const Multigraph& g) {
  require_defined(g);
  const auto& pairs = g.pairs();
  std::vector<std::pair<int, int>> candidates;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto& e = pairs[i];
      const auto& f = pairs[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      candidates.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }

  std::vector<detail::CutSide> results(candidates.size());
  parallel_for(
      candidates.size(),
      [&](std::size_t k) {
        const auto& e = pairs[static_cast<std::size_t>(candidates[k].first)];
        const auto& f = pairs[static_cast<std::size_t>(candidates[k].second)];
        auto cut = detail::min_cut_side(g, VertexSet{e.u, e.v}, VertexSet{f.u, f.v});
        cut.side = canonical_side(cut.side, g.order());
        results[k] = std::move(cut);
      },
      64);

  // Deterministic reduction: value, then size, then lexicographic side.
  const auto best = std::min_element(results.begin(), results.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value < b.value;
    return size_then_lex_less(a.side, b.side);
  });

  LambdaPrimeResult result;
  result.value = best->value;
  result.certificate.value = best->value;
  result.certificate.side = best->side;
  result.certificate.crossing = boundary(g, best->side).crossing;

  if (g.order() <= 62) {
    const Mask side = best->side.to_mask();
    const Mask full = (Mask{1} << g.order()) - 1;
    if (!is_restricted_side(g, side)) {
      throw Error(ErrorCode::InvariantViolated, "restricted cut certificate leaves an isolated vertex");
    }
    if (!is_connected_mask(g, side) || !is_connected_mask(g, full & ~side)) {
      throw Error(ErrorCode::InvariantViolated, "a minimum restricted cut left more than two components");
    }
  }
  return result;
}

std::vector<Fragment> lambda_prime_fragments(const Multigraph& g, int max_n_exhaustive) {
  detail::require_exhaustive(g, max_n_exhaustive);
  const int value = lambda_prime(g).value;
  const int n = g.order();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Fragment> out;
  for (Mask a = 1; a < full; ++a) {
    const int size = std::popcount(a);
    if (size < 2 || 2 * size > n || (2 * size == n && (a & 1U) == 0)) continue;
    if (boundary_value(g, a) != value || !is_restricted_side(g, a)) continue;
    if (!is_connected_mask(g, a) || !is_connected_mask(g, full & ~a)) {
      throw Error(ErrorCode::InvariantViolated, "a minimum restricted cut left more than two components");
    }
    out.push_back({VertexSet::from_mask(a), value, FragmentKind::LambdaPrime});
  }
  std::sort(out.begin(), out.end(), [](const Fragment& x, const Fragment& y) { return size_then_lex_less(x.side, y.side); });
  return out;
}

AtomSet lambda_prime_atoms(const Multigraph& g, int max_n_exhaustive) {
  auto fragments = lambda_prime_fragments(g, max_n_exhaustive);
  if (fragments.empty()) throw Error(ErrorCode::InvariantViolated, "no restricted fragment found although lambda' is defined");
  AtomSet result;
  result.size = fragments.front().side.size();
  for (auto& f : fragments) {
    if (f.side.size() != result.size) break;
    f.kind = FragmentKind::LambdaPrimeAtom;
    result.atoms.push_back(std::move(f));
  }
  detail::add_balanced_complements(result, g.order());
  return result;
}

XiBound check_xi_bound(const Multigraph& g) {
  require_defined(g);
  XiBound r;
  r.lambda_prime = lambda_prime(g).value;
  r.xi = xi(g).value;
  r.holds = r.lambda_prime <= r.xi;
  return r;
}

bool is_lambda_prime_optimal(const Multigraph& g) {
  require_defined(g);
  bool qualifies = g.is_regular();
  if (!qualifies) {
    if (auto bip = bipartition(g)) qualifies = is_semi_regular(g, *bip).semi_regular;
  }
  if (!qualifies) {
    throw Error(ErrorCode::NotSemiRegular, "lambda'-optimality is defined for regular or semi-regular bipartite multigraphs");
  }
  return lambda_prime(g).value == xi(g).value;
}

bool atom_min_degree_check(const Multigraph& g, const VertexSet& a, int max_n_exhaustive) {
  require_defined(g);
  if (g.min_degree() < 2 * g.max_multiplicity()) {
    throw Error(ErrorCode::PreconditionViolated, "requires minimum degree >= 2 * multiplicity");
  }
  if (a.size() < 3) throw Error(ErrorCode::PreconditionViolated, "atom must have at least three vertices");
  const AtomSet atoms = lambda_prime_atoms(g, max_n_exhaustive);
  const Mask mask = a.to_mask();
  const Mask full = (Mask{1} << g.order()) - 1;
  const bool is_atom = a.size() == atoms.size && (mask & ~full) == 0 && boundary_value(g, mask) == atoms.atoms.front().cut_value &&
                       is_restricted_side(g, mask);
  if (!is_atom) throw Error(ErrorCode::PreconditionViolated, "set is not a lambda'-atom");
  for (Vertex v : a) {
    const auto& nb = g.neighbors(v);
    const auto inside = std::count_if(nb.begin(), nb.end(), [&](Vertex w) { return a.contains(w); });
    if (inside < 2) return false;
  }
  return true;
}

}  // namespace edgecut
