#include "edgecut/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <string>
#include <utility>

#include "edgecut/cut.hpp"

namespace edgecut {

// ---------------------------------------------------------------------------
// Permutation / AutGroup

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (Vertex v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidParameters, "image array is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (q.size() != size()) throw Error(ErrorCode::InvalidParameters, "composing permutations of different degree");
  std::vector<Vertex> image(image_.size());
  for (Vertex v = 0; v < size(); ++v) image[static_cast<std::size_t>(v)] = (*this)(q(v));
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> image(image_.size());
  for (Vertex v = 0; v < size(); ++v) image[static_cast<std::size_t>((*this)(v))] = v;
  return Permutation(std::move(image));
}

VertexSet Permutation::apply(const VertexSet& a) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (Vertex v : a) out.push_back((*this)(v));
  return VertexSet(std::move(out));
}

bool Permutation::preserves(const Multigraph& g) const {
  if (size() != g.order()) return false;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v = u + 1; v < size(); ++v) {
      if (g.multiplicity(u, v) != g.multiplicity((*this)(u), (*this)(v))) return false;
    }
  }
  return true;
}

AutGroup::AutGroup(int n, std::vector<Vertex> flat_images) : n_(n), flat_(std::move(flat_images)) {}

std::span<const Vertex> AutGroup::image(std::size_t i) const {
  return std::span<const Vertex>(flat_).subspan(i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
}

Permutation AutGroup::element(std::size_t i) const {
  const auto img = image(i);
  return Permutation(std::vector<Vertex>(img.begin(), img.end()));
}

bool AutGroup::contains(const Permutation& p) const {
  if (p.size() != n_) return false;
  std::size_t lo = 0;
  std::size_t hi = order();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto img = image(mid);
    const auto cmp = std::lexicographical_compare_three_way(img.begin(), img.end(), p.image().begin(), p.image().end());
    if (cmp == 0) return true;
    if (cmp < 0) lo = mid + 1; else hi = mid;
  }
  return false;
}

int OrbitPartition::orbit_of(Vertex v) const {
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i].contains(v)) return static_cast<int>(i);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Backtracking search for multiplicity-preserving bijections G -> H.

namespace {

/// Colour refinement on the disjoint union of g and h (h's vertices offset by
/// g.order()). Starts from the given labels and iterates
/// (colour, multiset of (neighbour colour, multiplicity)) to a fixpoint.
std::vector<int> refine(const Multigraph& g, const Multigraph& h, std::vector<int> colour) {
  const int ng = g.order();
  const int total = ng + h.order();
  auto graph_of = [&](int x) -> std::pair<const Multigraph*, int> {
    return x < ng ? std::make_pair(&g, x) : std::make_pair(&h, x - ng);
  };
  int classes = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
  for (;;) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(static_cast<std::size_t>(total));
    for (int x = 0; x < total; ++x) {
      const auto [graph, v] = graph_of(x);
      const int offset = x < ng ? 0 : ng;
      auto& s = sig[static_cast<std::size_t>(x)];
      s.first = colour[static_cast<std::size_t>(x)];
      for (Vertex w : graph->neighbors(v)) {
        s.second.emplace_back(colour[static_cast<std::size_t>(w + offset)], graph->multiplicity(v, w));
      }
      std::sort(s.second.begin(), s.second.end());
    }
    std::map<Signature, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int x = 0; x < total; ++x) colour[static_cast<std::size_t>(x)] = ids.at(sig[static_cast<std::size_t>(x)]);
    if (next == classes) return colour;
    classes = next;
  }
}

class Matcher {
 public:
  Matcher(const Multigraph& g, const Multigraph& h, std::vector<int> colour) : g_(g), h_(h), n_(g.order()) {
    colour_ = refine(g, h, std::move(colour));
    feasible_ = g.order() == h.order();
    if (feasible_) {
      std::map<int, int> balance;
      for (int x = 0; x < n_; ++x) {
        ++balance[colour_[static_cast<std::size_t>(x)]];
        --balance[colour_[static_cast<std::size_t>(x + n_)]];
      }
      feasible_ = std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
    }
    if (feasible_) build_order();
  }

  /// Returns false iff the visitor asked to stop.
  bool run(const std::function<bool(std::span<const Vertex>)>& visit) {
    if (!feasible_) return true;
    image_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    visit_ = &visit;
    return extend(0);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  void build_order() {
    std::map<int, int> class_size;
    for (int x = 0; x < n_; ++x) ++class_size[colour_[static_cast<std::size_t>(x)]];
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    std::vector<int> links(static_cast<std::size_t>(n_), 0);
    for (int k = 0; k < n_; ++k) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        const auto key = [&](Vertex x) {
          return std::make_tuple(-links[static_cast<std::size_t>(x)], class_size[colour_[static_cast<std::size_t>(x)]], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[static_cast<std::size_t>(best)] = 1;
      order_.push_back(best);
      for (Vertex w : g_.neighbors(best)) ++links[static_cast<std::size_t>(w)];
    }
  }

  bool extend(int depth) {
    if (depth == n_) return (*visit_)(image_);
    const Vertex v = order_[static_cast<std::size_t>(depth)];
    const int want = colour_[static_cast<std::size_t>(v)];
    for (Vertex w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)] || colour_[static_cast<std::size_t>(w + n_)] != want) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        const Vertex u = order_[static_cast<std::size_t>(j)];
        ok = g_.multiplicity(v, u) == h_.multiplicity(w, image_[static_cast<std::size_t>(u)]);
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      const bool keep_going = extend(depth + 1);
      used_[static_cast<std::size_t>(w)] = 0;
      image_[static_cast<std::size_t>(v)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const Multigraph& g_;
  const Multigraph& h_;
  int n_;
  bool feasible_ = false;
  std::vector<int> colour_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  const std::function<bool(std::span<const Vertex>)>* visit_ = nullptr;
};

void require_automorphism_size(const Multigraph& g, int limit) {
  if (g.order() > limit) {
    throw Error(ErrorCode::TooLargeForExhaustive, std::to_string(g.order()) + " vertices exceed the automorphism limit of " +
                                                      std::to_string(limit));
  }
}

std::vector<int> doubled_labels(const Multigraph& g, std::span<const int> labels) {
  std::vector<int> colour(static_cast<std::size_t>(2 * g.order()), 0);
  if (!labels.empty()) {
    for (int v = 0; v < g.order(); ++v) {
      colour[static_cast<std::size_t>(v)] = labels[static_cast<std::size_t>(v)];
      colour[static_cast<std::size_t>(v + g.order())] = labels[static_cast<std::size_t>(v)];
    }
  }
  return colour;
}

/// Some label-preserving automorphism maps u to v; writes it to `found`.
bool find_mapping(const Multigraph& g, std::span<const int> labels, Vertex u, Vertex v, std::vector<Vertex>& found) {
  auto colour = doubled_labels(g, labels);
  const int pin = 1 + *std::max_element(colour.begin(), colour.end());
  colour[static_cast<std::size_t>(u)] = pin;
  colour[static_cast<std::size_t>(v + g.order())] = pin;
  Matcher m(g, g, std::move(colour));
  bool hit = false;
  m.run([&](std::span<const Vertex> image) {
    found.assign(image.begin(), image.end());
    hit = true;
    return false;
  });
  return hit;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

OrbitPartition partition_from_roots(std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::map<int, std::vector<Vertex>> groups;
  for (int v = 0; v < n; ++v) groups[find_root(parent, v)].push_back(v);
  OrbitPartition p;
  for (auto& [root, members] : groups) p.orbits.emplace_back(std::move(members));
  std::sort(p.orbits.begin(), p.orbits.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return p;
}

std::vector<int> part_labels(int n, const Bipartition& parts) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (Vertex v : parts.part2) labels[static_cast<std::size_t>(v)] = 1;
  return labels;
}

bool each_part_in_one_orbit(const OrbitPartition& orbits, const Bipartition& parts) {
  for (const VertexSet* part : {&parts.part1, &parts.part2}) {
    if (part->empty()) continue;
    const int first = orbits.orbit_of((*part)[0]);
    for (Vertex v : *part) {
      if (orbits.orbit_of(v) != first) return false;
    }
  }
  return true;
}

}  // namespace

bool for_each_automorphism(const Multigraph& g, const std::function<bool(std::span<const Vertex>)>& visit, int limit) {
  require_automorphism_size(g, limit);
  Matcher m(g, g, std::vector<int>(static_cast<std::size_t>(2 * g.order()), 0));
  return m.run(visit);
}

AutGroup automorphisms(const Multigraph& g, int limit) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> flat;
  for_each_automorphism(
      g,
      [&](std::span<const Vertex> image) {
        flat.insert(flat.end(), image.begin(), image.end());
        return true;
      },
      limit);
  if (n > 0) {
    const std::size_t count = flat.size() / n;
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(flat.begin() + static_cast<long>(a * n), flat.begin() + static_cast<long>((a + 1) * n),
                                          flat.begin() + static_cast<long>(b * n), flat.begin() + static_cast<long>((b + 1) * n));
    });
    std::vector<Vertex> sorted;
    sorted.reserve(flat.size());
    for (std::size_t i : idx) sorted.insert(sorted.end(), flat.begin() + static_cast<long>(i * n), flat.begin() + static_cast<long>((i + 1) * n));
    flat = std::move(sorted);
  }
  return AutGroup(g.order(), std::move(flat));
}

std::size_t count_automorphisms(const Multigraph& g, int limit) {
  std::size_t count = 0;
  for_each_automorphism(
      g,
      [&](std::span<const Vertex>) {
        ++count;
        return true;
      },
      limit);
  return count;
}

OrbitPartition orbits(const AutGroup& group, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto img = group.image(i);
    for (int v = 0; v < n; ++v) {
      const int a = find_root(parent, v);
      const int b = find_root(parent, img[static_cast<std::size_t>(v)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  return partition_from_roots(parent);
}

OrbitPartition vertex_orbits(const Multigraph& g, int limit, std::span<const int> labels) {
  require_automorphism_size(g, limit);
  const int n = g.order();
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::InvalidParameters, "label array does not match the vertex count");
  }
  // Vertices with different stable colours can never share an orbit.
  const Matcher base(g, g, doubled_labels(g, labels));
  const auto& colour = base.colours();

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<Vertex> found;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(v)]) continue;
      if (find_root(parent, u) == find_root(parent, v)) continue;
      if (!find_mapping(g, labels, u, v, found)) continue;
      for (Vertex x = 0; x < n; ++x) {
        const int a = find_root(parent, x);
        const int b = find_root(parent, found[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  return partition_from_roots(parent);
}

bool is_vertex_transitive(const Multigraph& g, int limit) { return vertex_orbits(g, limit).orbits.size() <= 1; }

bool is_transitive_on_parts(const Multigraph& g, const Bipartition& parts, HalfTransitivityReading reading, int limit) {
  if (parts.part1.intersects(parts.part2) || parts.part1.size() + parts.part2.size() != g.order()) {
    throw Error(ErrorCode::InvalidParameters, "parts do not partition the vertex set");
  }
  if (reading == HalfTransitivityReading::PartPreserving) {
    const auto labels = part_labels(g.order(), parts);
    return each_part_in_one_orbit(vertex_orbits(g, limit, labels), parts);
  }
  return each_part_in_one_orbit(vertex_orbits(g, limit), parts);
}

HalfTransitivity is_half_transitive(const Multigraph& g, HalfTransitivityReading reading, int limit) {
  auto bip = bipartition(g);
  if (!bip) throw Error(ErrorCode::NotBipartite, "half-transitivity needs a connected bipartite graph");
  HalfTransitivity r;
  r.parts = *bip;
  r.half_transitive = is_transitive_on_parts(g, r.parts, reading, limit);
  return r;
}

bool is_imprimitive_block(const AutGroup& group, const VertexSet& a) {
  const int n = group.degree();
  if (a.size() < 2 || a.size() > n - 1) throw Error(ErrorCode::TrivialSet, "blocks are proper and non-trivial");
  const Mask set = a.to_mask();
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto img = group.image(i);
    Mask moved = 0;
    for (Vertex v : a) moved |= Mask{1} << img[static_cast<std::size_t>(v)];
    if (moved != set && (moved & set) != 0) return false;
  }
  return true;
}

bool is_imprimitive_block(const Multigraph& g, const VertexSet& a, int limit) {
  if (a.size() < 2 || a.size() > g.order() - 1) throw Error(ErrorCode::TrivialSet, "blocks are proper and non-trivial");
  const Mask set = a.to_mask();
  return for_each_automorphism(
      g,
      [&](std::span<const Vertex> img) {
        Mask moved = 0;
        for (Vertex v : a) moved |= Mask{1} << img[static_cast<std::size_t>(v)];
        return moved == set || (moved & set) == 0;
      },
      limit);
}

bool induced_half_transitivity_check(const Multigraph& g, const VertexSet& a, int limit) {
  if (!is_connected(g)) throw Error(ErrorCode::PreconditionViolated, "graph must be connected");
  auto bip = bipartition(g);
  if (!bip) throw Error(ErrorCode::PreconditionViolated, "graph must be bipartite");
  if (!is_transitive_on_parts(g, *bip, HalfTransitivityReading::Orbit, limit)) {
    throw Error(ErrorCode::PreconditionViolated, "graph must be half-transitive");
  }
  if (!a.intersects(bip->part1) || !a.intersects(bip->part2)) {
    throw Error(ErrorCode::PreconditionViolated, "block must meet both parts");
  }
  if (a.size() < 2 || a.size() > g.order() - 1 || !is_imprimitive_block(g, a, limit)) {
    throw Error(ErrorCode::PreconditionViolated, "set is not an imprimitive block");
  }
  const Multigraph h = induced(g, a);
  std::vector<Vertex> p1;
  std::vector<Vertex> p2;
  for (int i = 0; i < a.size(); ++i) (bip->part1.contains(a[i]) ? p1 : p2).push_back(i);
  return is_transitive_on_parts(h, Bipartition{VertexSet(std::move(p1)), VertexSet(std::move(p2))}, HalfTransitivityReading::Orbit,
                                limit);
}

bool are_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.order() != h.order() || g.total_edges() != h.total_edges() || g.pair_count() != h.pair_count()) return false;
  Matcher m(g, h, std::vector<int>(static_cast<std::size_t>(g.order() + h.order()), 0));
  bool hit = false;
  m.run([&](std::span<const Vertex>) {
    hit = true;
    return false;
  });
  return hit;
}

}  // namespace edgecut
