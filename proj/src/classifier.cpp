#include "edgecut/classifier.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace edgecut {

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T32: return "T32";
    case Theorem::T42: return "T42";
    case Theorem::T54: return "T54";
  }
  return "unknown";
}

namespace {

struct HalfTransitiveContext {
  Bipartition parts;
  int d1 = 0;
  int d2 = 0;
};

HalfTransitiveContext make_context(const Multigraph& g, const ClassifyOptions& options) {
  detail::require_connected(g, "theorem checks");
  detail::require_exhaustive(g, options.limits.exhaustive);
  auto bip = bipartition(g);
  if (!bip) throw Error(ErrorCode::NotBipartite, "theorem checks need a bipartite graph");
  if (!is_transitive_on_parts(g, *bip, options.reading, options.limits.automorphism)) {
    throw Error(ErrorCode::NotHalfTransitive, "automorphism group is not transitive on both parts");
  }
  const auto sr = is_semi_regular(g, *bip);
  return {*bip, sr.d1, sr.d2};
}

int bound_for(const Multigraph& g, const HalfTransitiveContext& ctx, Theorem t) {
  switch (t) {
    case Theorem::T32: return std::min(ctx.d1, ctx.d2) - 1;
    case Theorem::T42: return std::min(ctx.d1, ctx.d2);
    case Theorem::T54: return xi(g).value - 1;
  }
  return -1;
}

std::optional<TheoremWitness> validate(const Multigraph& g, const HalfTransitiveContext& ctx, Mask s, Theorem t, int bound,
                                       const ClassifyOptions& options) {
  const int n = g.order();
  const Mask full = (Mask{1} << n) - 1;
  if (std::popcount(s) < 2 || s == full || (s & ~full) != 0) return std::nullopt;
  const int cut = boundary_value(g, s);
  if (cut > bound) return std::nullopt;
  if (!is_connected_mask(g, s)) return std::nullopt;

  const VertexSet members = VertexSet::from_mask(s);
  const Multigraph h = induced(g, members);
  TheoremWitness w;
  w.subgraph_vertices = members;
  w.theorem = t;
  w.bound = bound;
  bool first1 = true;
  bool first2 = true;
  for (int i = 0; i < members.size(); ++i) {
    const int dh = h.degree(i);
    if (ctx.parts.part1.contains(members[i])) {
      if (!first1 && dh != w.d1p) return std::nullopt;
      w.d1p = dh;
      first1 = false;
      ++w.a1;
    } else {
      if (!first2 && dh != w.d2p) return std::nullopt;
      w.d2p = dh;
      first2 = false;
      ++w.a2;
    }
  }
  w.lhs = w.a1 * (ctx.d1 - w.d1p) + w.a2 * (ctx.d2 - w.d2p);
  if (w.lhs != cut) throw Error(ErrorCode::InvariantViolated, "degree-count identity does not match the boundary");

  const auto hb = bipartition(h);
  if (!hb || !is_transitive_on_parts(h, *hb, options.reading, options.limits.automorphism)) return std::nullopt;
  return w;
}

/// Calls visit(mask) over k-subsets of 0..n-1 in lexicographic order of their
/// sorted members; stops when visit returns true.
template <typename Visit>
bool for_each_subset_lex(int n, int k, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Mask m = 0;
    for (int v : idx) m |= Mask{1} << v;
    if (visit(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::optional<TheoremWitness> search(const Multigraph& g, const HalfTransitiveContext& ctx, Theorem t, const ClassifyOptions& options) {
  const int bound = bound_for(g, ctx, t);
  std::optional<TheoremWitness> found;
  for (int k = 2; k < g.order() && !found; ++k) {
    for_each_subset_lex(g.order(), k, [&](Mask s) {
      found = validate(g, ctx, s, t, bound, options);
      return found.has_value();
    });
  }
  return found;
}

bool all_atoms_are_witnesses(const Multigraph& g, const HalfTransitiveContext& ctx, const std::vector<Fragment>& atoms, Theorem t,
                             const ClassifyOptions& options) {
  const int bound = bound_for(g, ctx, t);
  return std::all_of(atoms.begin(), atoms.end(),
                     [&](const Fragment& f) { return validate(g, ctx, f.side.to_mask(), t, bound, options).has_value(); });
}

TheoremCheck not_applicable(Theorem t, std::string reason) {
  TheoremCheck c;
  c.theorem = t;
  c.applicable = false;
  c.reason = std::move(reason);
  return c;
}

}  // namespace

int theorem_bound(const Multigraph& g, Theorem t) {
  auto bip = bipartition(g);
  if (!bip) throw Error(ErrorCode::NotBipartite, "theorem bounds need a bipartite graph");
  const auto sr = is_semi_regular(g, *bip);
  if (!sr.semi_regular) throw Error(ErrorCode::NotSemiRegular, "theorem bounds need a semi-regular graph");
  return bound_for(g, {*bip, sr.d1, sr.d2}, t);
}

std::optional<TheoremWitness> validate_witness(const Multigraph& g, const VertexSet& s, Theorem t, const ClassifyOptions& options) {
  const auto ctx = make_context(g, options);
  return validate(g, ctx, s.to_mask(), t, bound_for(g, ctx, t), options);
}

std::optional<TheoremWitness> find_witness(const Multigraph& g, Theorem t, const ClassifyOptions& options) {
  return search(g, make_context(g, options), t, options);
}

TheoremCheck check_theorem_3_2(const Multigraph& g, const ClassifyOptions& options) {
  const auto ctx = make_context(g, options);
  TheoremCheck c;
  c.theorem = Theorem::T32;
  c.applicable = true;
  c.observed = !is_maximally_edge_connected(g);
  c.witness = search(g, ctx, Theorem::T32, options);
  c.predicted = c.witness.has_value();
  c.consistent = c.predicted == c.observed;
  if (c.observed) {
    c.atom_is_witness = all_atoms_are_witnesses(g, ctx, lambda_atoms(g, options.limits.exhaustive).atoms, Theorem::T32, options);
  }
  return c;
}

TheoremCheck check_theorem_4_2(const Multigraph& g, const ClassifyOptions& options) {
  const auto ctx = make_context(g, options);
  const int need = 2 * std::min(ctx.d1, ctx.d2) + 2;
  if (g.order() < need) {
    return not_applicable(Theorem::T42, "HypothesisNotMet: |V| = " + std::to_string(g.order()) + " < 2*min(d1,d2)+2 = " +
                                            std::to_string(need));
  }
  TheoremCheck c;
  c.theorem = Theorem::T42;
  c.applicable = true;
  c.observed = !is_super_lambda(g, options.limits.exhaustive).super_lambda;
  c.witness = search(g, ctx, Theorem::T42, options);
  c.predicted = c.witness.has_value();
  c.consistent = c.predicted == c.observed;
  if (c.observed) {
    const auto atoms = superatoms(g, options.limits.exhaustive);
    c.atom_is_witness = atoms && all_atoms_are_witnesses(g, ctx, atoms->atoms, Theorem::T42, options);
  }
  return c;
}

TheoremCheck check_theorem_5_4(const Multigraph& g, const ClassifyOptions& options) {
  const auto ctx = make_context(g, options);
  if (!lambda_prime_defined(g)) {
    return not_applicable(Theorem::T54, "NotDefined: " + lambda_prime_undefined_reason(g));
  }
  const int delta = g.min_degree();
  const int mu = g.max_multiplicity();
  const int x = xi(g).value;
  if (delta < 2 * mu) {
    return not_applicable(Theorem::T54, "HypothesisNotMet: delta = " + std::to_string(delta) + " < 2*mu = " + std::to_string(2 * mu));
  }
  if (ctx.parts.part1.size() < x || ctx.parts.part2.size() < x) {
    return not_applicable(Theorem::T54, "HypothesisNotMet: a part has fewer than xi = " + std::to_string(x) + " vertices");
  }
  TheoremCheck c;
  c.theorem = Theorem::T54;
  c.applicable = true;
  c.observed = !is_lambda_prime_optimal(g);
  c.witness = search(g, ctx, Theorem::T54, options);
  c.predicted = c.witness.has_value();
  c.consistent = c.predicted == c.observed;
  if (c.observed) {
    c.atom_is_witness =
        all_atoms_are_witnesses(g, ctx, lambda_prime_atoms(g, options.limits.exhaustive).atoms, Theorem::T54, options);
  }
  return c;
}

TheoremCheck check_theorem(const Multigraph& g, Theorem t, const ClassifyOptions& options) {
  switch (t) {
    case Theorem::T32: return check_theorem_3_2(g, options);
    case Theorem::T42: return check_theorem_4_2(g, options);
    case Theorem::T54: return check_theorem_5_4(g, options);
  }
  throw Error(ErrorCode::InvalidParameters, "unknown theorem");
}

std::vector<TheoremCheck> run_theorem_checks(const Multigraph& g, const ClassifyOptions& options) {
  std::vector<TheoremCheck> out;
  for (Theorem t : {Theorem::T32, Theorem::T42, Theorem::T54}) {
    try {
      out.push_back(check_theorem(g, t, options));
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::Disconnected:
        case ErrorCode::NotBipartite:
        case ErrorCode::NotHalfTransitive:
        case ErrorCode::TooLargeForExhaustive:
        case ErrorCode::TooSmall:
          out.push_back(not_applicable(t, e.what()));
          break;
        default:
          throw;
      }
    }
  }
  return out;
}

bool ClassificationReport::all_checks_consistent() const {
  return std::all_of(theorem_checks.begin(), theorem_checks.end(), [](const TheoremCheck& c) { return c.consistent; });
}

ClassificationReport classify(const Multigraph& g, const ClassifyOptions& options) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "classification needs at least two vertices");
  detail::require_connected(g, "classification");

  ClassificationReport r;
  r.options = options;
  r.n = g.order();
  r.pairs = g.pair_count();
  r.edges = g.total_edges();
  r.delta = g.min_degree();
  r.mu = g.max_multiplicity();
  r.xi = xi(g);
  r.regular = g.is_regular();
  r.bipartition = bipartition(g);
  if (r.bipartition) r.semi_regular = is_semi_regular(g, *r.bipartition);

  r.lambda_cut = edge_connectivity(g);
  r.maximally_edge_connected = r.lambda_cut.value == r.delta;

  const bool defined = lambda_prime_defined(g);
  if (defined) {
    r.lambda_prime = lambda_prime(g);
    r.xi_bound_holds = r.lambda_prime->value <= r.xi.value;
  } else {
    r.lambda_prime_reason = lambda_prime_undefined_reason(g);
  }

  const bool exhaustive = g.order() <= std::min(options.limits.exhaustive, kMaxExhaustive);
  if (exhaustive) {
    r.lambda_atoms = lambda_atoms(g, options.limits.exhaustive);
    if (defined) r.lambda_prime_atoms = lambda_prime_atoms(g, options.limits.exhaustive);
    if (g.order() >= 3) {
      const auto verdict = is_super_lambda(g, options.limits.exhaustive);
      r.super_lambda = verdict.super_lambda;
      r.super_lambda_witness = verdict.witness;
      r.super_lambda_method = "strict_fragment_search";
    } else {
      r.super_lambda_method = "fewer than three vertices";
    }
  } else {
    r.atoms_reason = "exceeds exhaustive limit of " + std::to_string(options.limits.exhaustive);
    if (defined) {
      r.super_lambda = r.lambda_cut.value < r.lambda_prime->value;
      r.super_lambda_method = "lambda_lt_lambda_prime";
    } else {
      r.super_lambda_method = r.atoms_reason;
    }
  }

  if (defined) {
    const bool qualifies = r.regular || (r.semi_regular && r.semi_regular->semi_regular);
    if (qualifies) {
      r.lambda_prime_optimal = r.lambda_prime->value == r.xi.value;
    } else {
      r.lambda_prime_optimal_reason = "defined only for regular or semi-regular bipartite multigraphs";
    }
  } else {
    r.lambda_prime_optimal_reason = "lambda' undefined";
  }

  auto& sym = r.symmetry;
  sym.bipartite = r.bipartition.has_value();
  if (!options.automorphisms) {
    sym.reason = "automorphism analysis disabled";
  } else if (g.order() > options.limits.automorphism) {
    sym.reason = "exceeds automorphism limit of " + std::to_string(options.limits.automorphism);
  } else {
    sym.computed = true;
    sym.group_order = count_automorphisms(g, options.limits.automorphism);
    sym.orbits = vertex_orbits(g, options.limits.automorphism).orbits;
    sym.vertex_transitive = sym.orbits.size() == 1;
    if (r.bipartition) {
      sym.parts = r.bipartition;
      sym.half_transitive = is_transitive_on_parts(g, *r.bipartition, options.reading, options.limits.automorphism);
    }
  }

  if (sym.computed && sym.half_transitive) {
    r.theorem_checks = run_theorem_checks(g, options);
  } else {
    const std::string why = !sym.computed ? sym.reason : (sym.bipartite ? "not half-transitive" : "not bipartite");
    for (Theorem t : {Theorem::T32, Theorem::T42, Theorem::T54}) r.theorem_checks.push_back(not_applicable(t, why));
  }
  return r;
}

}  // namespace edgecut
