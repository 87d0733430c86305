#include <random>

#include "doctest.h"
#include "edgecut/error.hpp"
#include "edgecut/multigraph.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace edgecut;
namespace fx = edgecut::fixtures;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvariantViolated;
}
}  // namespace

TEST_CASE("build sums repeated pairs and rejects malformed edges") {
  const auto g = Multigraph::build(2, {{0, 1, 3}});
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 3);
  CHECK(g.max_multiplicity() == 3);

  const auto h = Multigraph::build(3, {{0, 1, 1}, {1, 0, 2}});
  CHECK(h.multiplicity(0, 1) == 3);
  CHECK(h.pair_count() == 1);

  CHECK(code_of([] { Multigraph::build(3, {{0, 0, 1}}); }) == ErrorCode::LoopRejected);
  CHECK(code_of([] { Multigraph::build(3, {{0, 3, 1}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { Multigraph::build(3, {{0, 1, 0}}); }) == ErrorCode::NonPositiveMultiplicity);
}

TEST_CASE("degrees of the doubled-opposite four-cycle") {
  const auto g = Multigraph::build(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 0, 1}});
  CHECK(g == fx::doubled_c4());
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.min_degree() == 3);
  CHECK(g.max_multiplicity() == 2);
  CHECK(g.is_regular());

  const auto c6 = fx::cycle(6);
  CHECK(c6.min_degree() == 2);
  CHECK(c6.max_multiplicity() == 1);

  const auto heavy = Multigraph::build(2, {{0, 1, 5}});
  CHECK(heavy.min_degree() == 5);
  CHECK(heavy.max_multiplicity() == 5);
  CHECK(code_of([] { Multigraph{}.min_degree(); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("underlying graph strips multiplicities") {
  CHECK(underlying(Multigraph::build(2, {{0, 1, 5}})) == Multigraph::build(2, {{0, 1, 1}}));
  CHECK(underlying(fx::cycle(6)) == fx::cycle(6));
  CHECK(underlying(fx::doubled_c4()) == fx::cycle(4));
}

TEST_CASE("boundary counts crossing multiplicity") {
  const auto g = fx::doubled_c4();
  CHECK(boundary(g, {0, 1}).value == 2);
  CHECK(boundary(g, {0, 1}).crossing.size() == 2);
  for (int v = 0; v < 4; ++v) CHECK(boundary(g, {v}).value == g.degree(v));
  CHECK(boundary(fx::k23(), {0, 1}).value == 6);
  CHECK(code_of([&] { boundary(g, {}); }) == ErrorCode::EmptyOrFullSet);
  CHECK(code_of([&] { boundary(g, {0, 1, 2, 3}); }) == ErrorCode::EmptyOrFullSet);
}

TEST_CASE("induced subgraph, bipartition and contraction") {
  const auto h = induced(fx::doubled_c4(), {0, 1});
  CHECK(h == Multigraph::build(2, {{0, 1, 2}}));

  const auto bip = bipartition(fx::cycle(6));
  REQUIRE(bip.has_value());
  CHECK(bip->part1 == VertexSet{0, 2, 4});
  CHECK(bip->part2 == VertexSet{1, 3, 5});
  CHECK_FALSE(bipartition(fx::complete(3)).has_value());

  // Contracting a singleton only relabels: v moves to the end.
  const auto g = fx::doubled_c4();
  const auto c = contract(g, {1});
  CHECK(c.order() == 4);
  CHECK(c.multiplicity(0, 3) == 2);  // old 0-1
  CHECK(c.multiplicity(1, 3) == 1);  // old 2-1
  CHECK(c.multiplicity(1, 2) == 2);  // old 2-3

  const auto merged = contract(g, {0, 1});
  CHECK(merged.order() == 3);
  CHECK(merged.multiplicity(0, 2) == 1);
  CHECK(merged.multiplicity(1, 2) == 1);
  CHECK(merged.multiplicity(0, 1) == 2);
}

TEST_CASE("semi-regularity of bipartite graphs") {
  const auto k = fx::k23();
  const auto s = is_semi_regular(k, *bipartition(k));
  CHECK(s.semi_regular);
  CHECK(s.d1 == 3);
  CHECK(s.d2 == 2);

  const auto st = fx::star(4);
  const auto t = is_semi_regular(st, *bipartition(st));
  CHECK(t.semi_regular);
  CHECK(t.d1 == 4);
  CHECK(t.d2 == 1);

  const auto p = fx::path(4);
  CHECK_FALSE(is_semi_regular(p, *bipartition(p)).semi_regular);
  CHECK(code_of([&] { is_semi_regular(p, Bipartition{{0, 1}, {2, 3}}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("minimum edge degree") {
  for (int n = 3; n <= 9; ++n) CHECK(xi(fx::cycle(n)).value == 2);
  CHECK(xi(Multigraph::build(2, {{0, 1, 3}})).value == 0);
  CHECK(xi(fx::doubled_c4()).value == 2);
  CHECK(edge_degree(fx::doubled_c4(), 1, 2) == 4);
}

TEST_CASE("connectivity helpers agree with direct relaxation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) edges.push_back({u, v, 1 + static_cast<int>(rng() % 3)});
      }
    }
    const auto g = Multigraph::build(n, edges);
    const unsigned full = (1U << n) - 1;
    CHECK(is_connected(g) == oracle::connected(g, full));
    std::size_t covered = 0;
    for (const auto& c : components(g)) {
      CHECK(oracle::connected(g, static_cast<unsigned>(c.to_mask())));
      covered += static_cast<std::size_t>(c.size());
    }
    CHECK(covered == static_cast<std::size_t>(n));
    for (unsigned a = 1; a < full; ++a) {
      CHECK(boundary_value(g, a) == oracle::cut_value(g, a));
      CHECK(is_connected_mask(g, a) == oracle::connected(g, a));
      CHECK(has_no_isolated_mask(g, a) == oracle::no_isolated(g, a));
    }
    // Handshake: Σ d(v) = 2·|E|.
    long sum = 0;
    for (int v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.total_edges());
  }
}
