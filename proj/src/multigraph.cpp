#include "edgecut/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace edgecut {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(Mask mask) {
  VertexSet s;
  while (mask != 0) {
    s.members_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(n));
  std::iota(s.members_.begin(), s.members_.end(), 0);
  return s;
}

Mask VertexSet::to_mask() const {
  Mask m = 0;
  for (Vertex v : members_) {
    if (v < 0 || v >= 64) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " does not fit a mask");
    m |= Mask{1} << v;
  }
  return m;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexSet VertexSet::complement(int n) const {
  VertexSet s;
  auto it = members_.begin();
  for (Vertex v = 0; v < n; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      s.members_.push_back(v);
    }
  }
  return s;
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool size_then_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

VertexSet canonical_side(const VertexSet& side, int n) {
  VertexSet other = side.complement(n);
  return size_then_lex_less(other, side) ? other : side;
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph Multigraph::build(int n, std::initializer_list<EdgeSpec> edges) {
  return build(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
}

Multigraph Multigraph::build(int n, std::span<const EdgeSpec> edges) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, "negative vertex count");
  Multigraph g;
  g.n_ = n;
  const auto un = static_cast<std::size_t>(n);
  g.mult_.assign(un * un, 0);
  g.degree_.assign(un, 0);
  g.adj_.assign(un, {});
  for (const EdgeSpec& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(e.u));
    if (e.mult < 1) {
      throw Error(ErrorCode::NonPositiveMultiplicity,
                  "multiplicity " + std::to_string(e.mult) + " on (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.mult_[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] += e.mult;
    g.mult_[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] += e.mult;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int m = g.mult_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)];
      if (m == 0) continue;
      g.degree_[static_cast<std::size_t>(u)] += m;
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      if (u < v) {
        g.pairs_.push_back({u, v, m});
        g.total_edges_ += m;
      }
    }
  }
  return g;
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return mult_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
}

int Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[static_cast<std::size_t>(v)];
}

int Multigraph::min_degree() const {
  if (pairs_.empty()) throw Error(ErrorCode::EmptyGraph, "minimum degree of an edgeless graph");
  return *std::min_element(degree_.begin(), degree_.end());
}

int Multigraph::max_degree() const {
  if (pairs_.empty()) throw Error(ErrorCode::EmptyGraph, "maximum degree of an edgeless graph");
  return *std::max_element(degree_.begin(), degree_.end());
}

int Multigraph::max_multiplicity() const {
  if (pairs_.empty()) throw Error(ErrorCode::EmptyGraph, "multiplicity of an edgeless graph");
  int mu = 0;
  for (const auto& p : pairs_) mu = std::max(mu, p.mult);
  return mu;
}

const std::vector<Vertex>& Multigraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Multigraph::is_regular() const {
  return std::adjacent_find(degree_.begin(), degree_.end(), std::not_equal_to<>()) == degree_.end();
}

// ---------------------------------------------------------------------------
// Free functions

namespace {

void require_proper_subset(const Multigraph& g, const VertexSet& a) {
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (a.empty() || a.size() == g.order()) {
    throw Error(ErrorCode::EmptyOrFullSet, "set must be a non-empty proper subset of V");
  }
}

}  // namespace

Boundary boundary(const Multigraph& g, const VertexSet& a) {
  require_proper_subset(g, a);
  Boundary b;
  for (Vertex u : a) {
    for (Vertex v : g.neighbors(u)) {
      if (a.contains(v)) continue;
      const int m = g.multiplicity(u, v);
      b.crossing.push_back({u, v, m});
      b.value += m;
    }
  }
  return b;
}

int boundary_value(const Multigraph& g, Mask a) {
  int value = 0;
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const Vertex u = std::countr_zero(rest);
    for (Vertex v : g.neighbors(u)) {
      if (((a >> v) & 1U) == 0) value += g.multiplicity(u, v);
    }
  }
  return value;
}

Multigraph underlying(const Multigraph& g) {
  std::vector<EdgeSpec> edges;
  edges.reserve(g.pairs().size());
  for (const auto& p : g.pairs()) edges.push_back({p.u, p.v, 1});
  return Multigraph::build(g.order(), edges);
}

Multigraph induced(const Multigraph& g, const VertexSet& a) {
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (a.empty()) throw Error(ErrorCode::EmptyOrFullSet, "induced subgraph of the empty set");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < a.size(); ++i) index[static_cast<std::size_t>(a[i])] = i;
  std::vector<EdgeSpec> edges;
  for (const auto& p : g.pairs()) {
    const int iu = index[static_cast<std::size_t>(p.u)];
    const int iv = index[static_cast<std::size_t>(p.v)];
    if (iu >= 0 && iv >= 0) edges.push_back({iu, iv, p.mult});
  }
  return Multigraph::build(a.size(), edges);
}

bool is_connected_mask(const Multigraph& g, Mask a) {
  if (a == 0) return true;
  Mask seen = a & (~a + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    const Vertex u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (Vertex v : g.neighbors(u)) {
      const Mask bit = Mask{1} << v;
      if ((a & bit) != 0 && (seen & bit) == 0) {
        seen |= bit;
        frontier |= bit;
      }
    }
  }
  return seen == a;
}

bool has_no_isolated_mask(const Multigraph& g, Mask a) {
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const Vertex u = std::countr_zero(rest);
    bool found = false;
    for (Vertex v : g.neighbors(u)) {
      if (((a >> v) & 1U) != 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<VertexSet> components(const Multigraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{s};
    comp[static_cast<std::size_t>(s)] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex v : g.neighbors(members[head])) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = id;
          members.push_back(v);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Multigraph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::optional<Bipartition> bipartition(const Multigraph& g) {
  if (g.order() == 0 || !is_connected(g)) return std::nullopt;
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      auto& cv = colour[static_cast<std::size_t>(v)];
      if (cv < 0) {
        cv = 1 - colour[static_cast<std::size_t>(u)];
        queue.push_back(v);
      } else if (cv == colour[static_cast<std::size_t>(u)]) {
        return std::nullopt;
      }
    }
  }
  std::vector<Vertex> p1;
  std::vector<Vertex> p2;
  for (Vertex v = 0; v < g.order(); ++v) (colour[static_cast<std::size_t>(v)] == 0 ? p1 : p2).push_back(v);
  return Bipartition{VertexSet(std::move(p1)), VertexSet(std::move(p2))};
}

bool is_valid_bipartition(const Multigraph& g, const Bipartition& bip) {
  if (bip.part1.intersects(bip.part2)) return false;
  if (bip.part1.size() + bip.part2.size() != g.order()) return false;
  for (Vertex v : bip.part1) {
    if (v < 0 || v >= g.order()) return false;
  }
  for (Vertex v : bip.part2) {
    if (v < 0 || v >= g.order()) return false;
  }
  for (const auto& p : g.pairs()) {
    if (bip.part1.contains(p.u) == bip.part1.contains(p.v)) return false;
  }
  return true;
}

Multigraph contract(const Multigraph& g, const VertexSet& a) {
  require_proper_subset(g, a);
  const int n = g.order();
  const int merged = n - a.size();
  std::vector<int> index(static_cast<std::size_t>(n), merged);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!a.contains(v)) index[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<EdgeSpec> edges;
  for (const auto& p : g.pairs()) {
    const int iu = index[static_cast<std::size_t>(p.u)];
    const int iv = index[static_cast<std::size_t>(p.v)];
    if (iu != iv) edges.push_back({iu, iv, p.mult});
  }
  return Multigraph::build(merged + 1, edges);
}

SemiRegularity is_semi_regular(const Multigraph& g, const Bipartition& bip) {
  if (!is_valid_bipartition(g, bip)) throw Error(ErrorCode::PreconditionViolated, "bipartition does not fit the graph");
  SemiRegularity r;
  r.semi_regular = true;
  auto common = [&](const VertexSet& part, int& d) {
    if (part.empty()) return;
    d = g.degree(part[0]);
    for (Vertex v : part) {
      if (g.degree(v) != d) r.semi_regular = false;
    }
  };
  common(bip.part1, r.d1);
  common(bip.part2, r.d2);
  if (!r.semi_regular) r.d1 = r.d2 = 0;
  return r;
}

int edge_degree(const Multigraph& g, Vertex u, Vertex v) {
  return g.degree(u) + g.degree(v) - 2 * g.multiplicity(u, v);
}

EdgeDegree xi(const Multigraph& g) {
  if (!g.has_edges()) throw Error(ErrorCode::EmptyGraph, "minimum edge degree of an edgeless graph");
  EdgeDegree best{edge_degree(g, g.pairs().front().u, g.pairs().front().v), g.pairs().front().u, g.pairs().front().v};
  for (const auto& p : g.pairs()) {
    const int value = edge_degree(g, p.u, p.v);
    if (value < best.value) best = {value, p.u, p.v};
  }
  return best;
}

}  // namespace edgecut
