#include "edgecut/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

#include "edgecut/restricted_cut.hpp"
#include "edgecut/symmetry.hpp"

namespace edgecut {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::MultipliedCycle: return "multiplied_cycle";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::KmXK2: return "km_x_k2";
    case Family::Circulant: return "circulant";
    case Family::CosetBigraph: return "coset_bigraph";
    case Family::RandomBipartiteMulti: return "random_bipartite_multi";
    case Family::RandomMulti: return "random_multi";
  }
  return "unknown";
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParameters, what); }

void require(bool ok, const std::string& what) {
  if (!ok) invalid(what);
}

constexpr int kConnectRetries = 1000;

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int draw_mult(std::mt19937_64& rng, int max_mult) { return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_mult)); }

std::vector<long> invariant_key(const Multigraph& g) {
  std::vector<long> key{g.order(), g.total_edges(), g.pair_count()};
  std::vector<long> degrees;
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  key.insert(key.end(), degrees.begin(), degrees.end());
  std::vector<long> pair_sig;
  for (const auto& p : g.pairs()) {
    const long lo = std::min(g.degree(p.u), g.degree(p.v));
    const long hi = std::max(g.degree(p.u), g.degree(p.v));
    pair_sig.push_back((lo * 4096 + hi) * 64 + p.mult);
  }
  std::sort(pair_sig.begin(), pair_sig.end());
  key.insert(key.end(), pair_sig.begin(), pair_sig.end());
  return key;
}

Multigraph cartesian_product(const Multigraph& a, const Multigraph& b) {
  const int nb = b.order();
  std::vector<EdgeSpec> edges;
  for (Vertex x = 0; x < a.order(); ++x) {
    for (const auto& p : b.pairs()) edges.push_back({x * nb + p.u, x * nb + p.v, p.mult});
  }
  for (const auto& p : a.pairs()) {
    for (Vertex y = 0; y < nb; ++y) edges.push_back({p.u * nb + y, p.v * nb + y, p.mult});
  }
  return Multigraph::build(a.order() * nb, edges);
}

std::string join(std::string_view head, const std::vector<int>& values) {
  std::string s(head);
  for (int v : values) s += " " + std::to_string(v);
  return s;
}

bool half_transitive_connected(const Multigraph& g) {
  if (!is_connected(g) || !g.has_edges()) return false;
  const auto bip = bipartition(g);
  if (!bip || !is_semi_regular(g, *bip).semi_regular) return false;
  return is_half_transitive(g).half_transitive;
}

}  // namespace

// ---------------------------------------------------------------------------
// Structured families

Multigraph gen_cycle(int n) {
  require(n >= 3, "cycle length must be at least 3");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return Multigraph::build(n, edges);
}

Multigraph gen_multiplied_cycle(int n, int m_a, int m_b) {
  if (n % 2 != 0) throw Error(ErrorCode::OddLength, "multiplied cycle needs an even length");
  require(n >= 4, "multiplied cycle length must be at least 4");
  require(m_a >= 1 && m_b >= 1, "multiplicities must be positive");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, i % 2 == 0 ? m_a : m_b});
  return Multigraph::build(n, edges);
}

Multigraph gen_complete_bipartite(int m, int n, int mult) {
  require(m >= 1 && n >= 1 && mult >= 1, "complete bipartite parameters must be positive");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j, mult});
  }
  return Multigraph::build(m + n, edges);
}

Multigraph gen_km_x_k2(int m) {
  require(m >= 1, "K_m x K_2 needs m >= 1");
  std::vector<EdgeSpec> edges;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) edges.push_back({c * m + i, c * m + j, 1});
    }
  }
  for (int i = 0; i < m; ++i) edges.push_back({i, m + i, 1});
  return Multigraph::build(2 * m, edges);
}

Multigraph gen_circulant(int n, const std::vector<int>& connection_set) {
  require(n >= 3, "circulant needs at least 3 vertices");
  require(!connection_set.empty(), "circulant connection set is empty");
  std::vector<int> jumps = connection_set;
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  std::vector<EdgeSpec> edges;
  for (int s : jumps) {
    require(s >= 1 && 2 * s <= n, "circulant jumps must lie in 1..n/2");
    for (int i = 0; i < n; ++i) {
      const int j = (i + s) % n;
      if (2 * s == n && j < i) continue;  // the diameter jump would be listed twice
      edges.push_back({i, j, 1});
    }
  }
  return Multigraph::build(n, edges);
}

Multigraph gen_coset_bigraph(int p, int q, const std::vector<int>& mults) {
  require(p >= 1 && q >= 1, "coset bigraph parts must be non-empty");
  const int g = std::gcd(p, q);
  require(static_cast<int>(mults.size()) == g, "coset bigraph needs gcd(p, q) multiplicities");
  require(std::all_of(mults.begin(), mults.end(), [](int m) { return m >= 0; }), "multiplicities must be non-negative");
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      const int m = mults[static_cast<std::size_t>(((j - i) % g + g) % g)];
      if (m > 0) edges.push_back({i, p + j, m});
    }
  }
  return Multigraph::build(p + q, edges);
}

Multigraph gen_random_bipartite_multi(int n1, int n2, double edge_prob, int max_mult, std::uint64_t seed) {
  require(n1 >= 1 && n2 >= 1, "random bipartite parts must be non-empty");
  require(edge_prob > 0.0 && edge_prob <= 1.0, "edge probability must lie in (0, 1]");
  require(max_mult >= 1, "max multiplicity must be positive");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kConnectRetries; ++attempt) {
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n1; ++i) {
      for (int j = 0; j < n2; ++j) {
        const double roll = unit_interval(rng);
        const int mult = draw_mult(rng, max_mult);
        if (roll < edge_prob) edges.push_back({i, n1 + j, mult});
      }
    }
    auto g = Multigraph::build(n1 + n2, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::CouldNotConnect, "no connected sample within the retry budget");
}

Multigraph gen_random_multi(int n, double edge_prob, int max_mult, std::uint64_t seed) {
  require(n >= 1, "random multigraph needs at least one vertex");
  require(edge_prob > 0.0 && edge_prob <= 1.0, "edge probability must lie in (0, 1]");
  require(max_mult >= 1, "max multiplicity must be positive");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kConnectRetries; ++attempt) {
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const double roll = unit_interval(rng);
        const int mult = draw_mult(rng, max_mult);
        if (roll < edge_prob) edges.push_back({u, v, mult});
      }
    }
    auto g = Multigraph::build(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::CouldNotConnect, "no connected sample within the retry budget");
}

// ---------------------------------------------------------------------------
// Manifest specs

GeneratorSpec parse_generator_spec(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string family;
  if (!(in >> family)) invalid("empty generator spec");
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);

  auto integer = [&](const std::string& t) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) invalid("not an integer: '" + t + "'");
    return value;
  };
  auto real = [&](const std::string& t) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(t, &used);
    } catch (const std::exception&) {
      invalid("not a number: '" + t + "'");
    }
    if (used != t.size()) invalid("not a number: '" + t + "'");
    return value;
  };
  auto expect = [&](std::size_t count) {
    if (tokens.size() != count) invalid(family + " expects " + std::to_string(count) + " parameters");
  };

  GeneratorSpec spec;
  if (family == "cycle") {
    spec.family = Family::Cycle;
    expect(1);
  } else if (family == "multiplied_cycle") {
    spec.family = Family::MultipliedCycle;
    expect(3);
  } else if (family == "complete_bipartite") {
    spec.family = Family::CompleteBipartite;
    expect(3);
  } else if (family == "km_x_k2") {
    spec.family = Family::KmXK2;
    expect(1);
  } else if (family == "circulant") {
    spec.family = Family::Circulant;
    if (tokens.size() < 2) invalid("circulant expects N and at least one jump");
  } else if (family == "coset_bigraph") {
    spec.family = Family::CosetBigraph;
    if (tokens.size() < 3) invalid("coset_bigraph expects P Q and multiplicities");
  } else if (family == "random_bipartite_multi") {
    spec.family = Family::RandomBipartiteMulti;
    expect(5);
    spec.params = {integer(tokens[0]), integer(tokens[1]), integer(tokens[3])};
    spec.edge_prob = real(tokens[2]);
    spec.seed = static_cast<std::uint64_t>(integer(tokens[4]));
    return spec;
  } else if (family == "random_multi") {
    spec.family = Family::RandomMulti;
    expect(4);
    spec.params = {integer(tokens[0]), integer(tokens[2])};
    spec.edge_prob = real(tokens[1]);
    spec.seed = static_cast<std::uint64_t>(integer(tokens[3]));
    return spec;
  } else {
    invalid("unknown family '" + family + "'");
  }
  for (const auto& t : tokens) spec.params.push_back(integer(t));
  return spec;
}

std::string format_generator_spec(const GeneratorSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.family);
  auto param = [&](std::size_t i) { return spec.params.at(i); };
  switch (spec.family) {
    case Family::RandomBipartiteMulti:
      out << ' ' << param(0) << ' ' << param(1) << ' ' << spec.edge_prob << ' ' << param(2) << ' ' << spec.seed;
      break;
    case Family::RandomMulti:
      out << ' ' << param(0) << ' ' << spec.edge_prob << ' ' << param(1) << ' ' << spec.seed;
      break;
    default:
      for (long p : spec.params) out << ' ' << p;
  }
  return out.str();
}

Multigraph generate(const GeneratorSpec& spec) {
  const auto& p = spec.params;
  auto at = [&](std::size_t i) {
    if (i >= p.size()) invalid(std::string(to_string(spec.family)) + ": missing parameter");
    return static_cast<int>(p[i]);
  };
  auto tail = [&](std::size_t from) {
    std::vector<int> rest;
    for (std::size_t i = from; i < p.size(); ++i) rest.push_back(static_cast<int>(p[i]));
    return rest;
  };
  switch (spec.family) {
    case Family::Cycle: return gen_cycle(at(0));
    case Family::MultipliedCycle: return gen_multiplied_cycle(at(0), at(1), at(2));
    case Family::CompleteBipartite: return gen_complete_bipartite(at(0), at(1), at(2));
    case Family::KmXK2: return gen_km_x_k2(at(0));
    case Family::Circulant: return gen_circulant(at(0), tail(1));
    case Family::CosetBigraph: return gen_coset_bigraph(at(0), at(1), tail(2));
    case Family::RandomBipartiteMulti: return gen_random_bipartite_multi(at(0), at(1), spec.edge_prob, at(2), spec.seed);
    case Family::RandomMulti: return gen_random_multi(at(0), spec.edge_prob, at(1), spec.seed);
  }
  invalid("unknown family");
}

// ---------------------------------------------------------------------------
// Enumerations

bool IsomorphismFilter::insert(const Multigraph& g) {
  auto& bucket = buckets_[invariant_key(g)];
  for (const auto& h : bucket) {
    if (are_isomorphic(g, h)) return false;
  }
  bucket.push_back(g);
  return true;
}

HalfTransitiveCorpus enumerate_half_transitive(int max_n, int max_mult, std::size_t budget) {
  require(max_n >= 2 && max_n <= 10, "max_n must lie in 2..10");
  require(max_mult >= 1 && max_mult <= 3, "max_mult must lie in 1..3");
  HalfTransitiveCorpus corpus;
  IsomorphismFilter seen;
  // Returns false once the budget is exhausted.
  auto offer = [&](std::string name, const Multigraph& g) {
    if (corpus.graphs.size() >= budget) {
      corpus.truncated = true;
      return false;
    }
    if (g.order() > max_n || !half_transitive_connected(g)) return true;
    if (seen.insert(g)) corpus.graphs.push_back({std::move(name), g});
    return true;
  };

  for (int n = 4; n <= max_n; n += 2) {
    for (int ma = 1; ma <= max_mult; ++ma) {
      for (int mb = ma; mb <= max_mult; ++mb) {
        if (!offer(join("multiplied_cycle", {n, ma, mb}), gen_multiplied_cycle(n, ma, mb))) return corpus;
      }
    }
  }

  for (int p = 1; p <= max_n; ++p) {
    for (int q = p; p + q <= max_n; ++q) {
      const int g = std::gcd(p, q);
      std::vector<int> mults(static_cast<std::size_t>(g), 0);
      for (;;) {
        int i = 0;
        while (i < g && mults[static_cast<std::size_t>(i)] == max_mult) mults[static_cast<std::size_t>(i++)] = 0;
        if (i == g) break;
        ++mults[static_cast<std::size_t>(i)];
        std::vector<int> args{p, q};
        args.insert(args.end(), mults.begin(), mults.end());
        if (!offer(join("coset_bigraph", args), gen_coset_bigraph(p, q, mults))) return corpus;
      }
    }
  }

  // Every labelled bipartite multigraph with parts a <= b, a + b <= 6.
  const int small = std::min(max_n, 6);
  for (int total = 2; total <= small; ++total) {
    for (int a = 1; 2 * a <= total; ++a) {
      const int b = total - a;
      const int cells = a * b;
      std::vector<int> m(static_cast<std::size_t>(cells), 0);
      for (;;) {
        int i = 0;
        while (i < cells && m[static_cast<std::size_t>(i)] == max_mult) m[static_cast<std::size_t>(i++)] = 0;
        if (i == cells) break;
        ++m[static_cast<std::size_t>(i)];
        // Degrees must be constant on each side before anything else is worth checking.
        bool regular_sides = true;
        int row0 = -1;
        for (int r = 0; r < a && regular_sides; ++r) {
          int sum = 0;
          for (int c = 0; c < b; ++c) sum += m[static_cast<std::size_t>(r * b + c)];
          if (row0 < 0) row0 = sum;
          regular_sides = sum == row0;
        }
        int col0 = -1;
        for (int c = 0; c < b && regular_sides; ++c) {
          int sum = 0;
          for (int r = 0; r < a; ++r) sum += m[static_cast<std::size_t>(r * b + c)];
          if (col0 < 0) col0 = sum;
          regular_sides = sum == col0;
        }
        if (!regular_sides) continue;
        std::vector<EdgeSpec> edges;
        for (int r = 0; r < a; ++r) {
          for (int c = 0; c < b; ++c) {
            const int mult = m[static_cast<std::size_t>(r * b + c)];
            if (mult > 0) edges.push_back({r, a + c, mult});
          }
        }
        const auto graph = Multigraph::build(total, edges);
        std::string name = "bipartite " + std::to_string(a) + "x" + std::to_string(b);
        for (int mult : m) name += " " + std::to_string(mult);
        if (!offer(std::move(name), graph)) return corpus;
      }
    }
  }

  std::vector<NamedGraph> factors;
  for (int mult = 1; mult <= max_mult; ++mult) {
    factors.push_back({join("K2", {mult}), gen_complete_bipartite(1, 1, mult)});
    factors.push_back({join("K1,2", {mult}), gen_complete_bipartite(1, 2, mult)});
    factors.push_back({join("K1,3", {mult}), gen_complete_bipartite(1, 3, mult)});
    factors.push_back({join("K2,3", {mult}), gen_complete_bipartite(2, 3, mult)});
    for (int other = mult; other <= max_mult; ++other) {
      factors.push_back({join("C4", {mult, other}), gen_multiplied_cycle(4, mult, other)});
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      if (factors[i].graph.order() * factors[j].graph.order() > max_n) continue;
      const auto product = cartesian_product(factors[i].graph, factors[j].graph);
      if (!offer("product " + factors[i].name + " x " + factors[j].name, product)) return corpus;
    }
  }
  return corpus;
}

void for_each_small_multigraph(int max_n, int max_mult, const std::function<void(const Multigraph&)>& visit) {
  require(max_n >= 2 && max_n <= 7, "max_n must lie in 2..7");
  require(max_mult >= 1, "max_mult must be positive");
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    IsomorphismFilter classes;
    std::vector<std::vector<std::pair<int, int>>> reps;
    const std::uint64_t labelled = std::uint64_t{1} << slots.size();
    for (std::uint64_t code = 1; code < labelled; ++code) {
      std::vector<EdgeSpec> edges;
      std::vector<std::pair<int, int>> present;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (((code >> k) & 1U) == 0) continue;
        edges.push_back({slots[k].first, slots[k].second, 1});
        present.push_back(slots[k]);
      }
      const auto g = Multigraph::build(n, edges);
      if (is_connected(g) && classes.insert(g)) reps.push_back(std::move(present));
    }
    for (const auto& present : reps) {
      std::vector<int> mult(present.size(), 1);
      for (;;) {
        std::vector<EdgeSpec> edges;
        for (std::size_t k = 0; k < present.size(); ++k) edges.push_back({present[k].first, present[k].second, mult[k]});
        visit(Multigraph::build(n, edges));
        std::size_t i = 0;
        while (i < mult.size() && mult[i] == max_mult) mult[i++] = 1;
        if (i == mult.size()) break;
        ++mult[i];
      }
    }
  }
}

std::vector<NamedGraph> all_circulants(int max_n) {
  std::vector<NamedGraph> out;
  for (int n = 3; n <= max_n; ++n) {
    const int jumps = n / 2;
    for (unsigned set = 1; set < (1U << jumps); ++set) {
      std::vector<int> s;
      for (int k = 0; k < jumps; ++k) {
        if ((set >> k) & 1U) s.push_back(k + 1);
      }
      auto g = gen_circulant(n, s);
      if (!is_connected(g)) continue;
      std::vector<int> args{n};
      args.insert(args.end(), s.begin(), s.end());
      out.push_back({join("circulant", args), std::move(g)});
    }
  }
  return out;
}

std::optional<NamedGraph> search_xi_violation(std::size_t budget, std::uint64_t seed) {
  for (std::size_t i = 0; i < budget; ++i) {
    const int n = 4 + static_cast<int>(i % 5);
    const std::uint64_t instance_seed = seed * 1000003ULL + i;
    Multigraph g;
    try {
      g = gen_random_multi(n, 0.5, 3, instance_seed);
    } catch (const Error&) {
      continue;
    }
    if (!lambda_prime_defined(g)) continue;
    if (lambda_prime(g).value > xi(g).value) {
      GeneratorSpec spec{Family::RandomMulti, {n, 3}, 0.5, instance_seed};
      return NamedGraph{format_generator_spec(spec), std::move(g)};
    }
  }
  return std::nullopt;
}

}  // namespace edgecut
