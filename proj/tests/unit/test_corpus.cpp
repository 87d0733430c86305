#include "doctest.h"
#include "edgecut/corpus.hpp"
#include "edgecut/cut.hpp"
#include "edgecut/restricted_cut.hpp"
#include "edgecut/symmetry.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace edgecut;
namespace fx = edgecut::fixtures;

namespace {
bool contains_iso(const HalfTransitiveCorpus& c, const Multigraph& g) {
  for (const auto& ng : c.graphs) {
    if (are_isomorphic(ng.graph, g)) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("structured generators") {
  CHECK(gen_multiplied_cycle(4, 2, 1) == Multigraph::build(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 0, 1}}));
  CHECK(gen_multiplied_cycle(6, 1, 1) == fx::cycle(6));
  const auto m3 = gen_multiplied_cycle(4, 3, 1);
  CHECK(edge_connectivity(m3).value == 2);
  CHECK(oracle::lambda(m3) == 2);
  CHECK_THROWS_AS(gen_multiplied_cycle(5, 2, 1), Error);

  const auto k = gen_km_x_k2(4);
  CHECK(k.order() == 8);
  CHECK(k.min_degree() == 4);
  CHECK(gen_complete_bipartite(2, 3, 1) == fx::k23());

  const auto circ = gen_circulant(8, {1, 2});
  CHECK(circ.is_regular());
  CHECK(circ.min_degree() == 4);
  CHECK(circ.max_multiplicity() == 1);
  CHECK(is_vertex_transitive(circ));
}

TEST_CASE("seeded random generators") {
  for (std::uint64_t s = 0; s < 5; ++s) CHECK(are_isomorphic(gen_random_bipartite_multi(2, 2, 1.0, 1, s), fx::cycle(4)));

  const auto a = gen_random_bipartite_multi(3, 3, 0.8, 3, 42);
  CHECK(a == gen_random_bipartite_multi(3, 3, 0.8, 3, 42));
  CHECK(is_connected(a));
  CHECK(a.max_multiplicity() <= 3);

  const auto st = gen_random_bipartite_multi(1, 5, 1.0, 2, 9);
  CHECK(are_isomorphic(underlying(st), fx::star(5)));
  CHECK_FALSE(lambda_prime_defined(st));

  const auto r = gen_random_multi(9, 0.4, 3, 123);
  CHECK(r == gen_random_multi(9, 0.4, 3, 123));
  CHECK(is_connected(r));
}

TEST_CASE("generator specs round-trip") {
  for (const char* text : {"cycle 6", "multiplied_cycle 4 2 1", "complete_bipartite 2 3 1", "km_x_k2 3",
                           "circulant 8 1 2", "random_bipartite_multi 3 3 0.8 3 42", "random_multi 7 0.5 2 9"}) {
    const auto spec = parse_generator_spec(text);
    CHECK(generate(parse_generator_spec(format_generator_spec(spec))) == generate(spec));
  }
  CHECK_THROWS_AS(parse_generator_spec("hypercube 3"), Error);
}

TEST_CASE("half-transitive enumeration") {
  const auto c = enumerate_half_transitive(8, 2);
  for (int n = 4; n <= 8; n += 2) CHECK(contains_iso(c, fx::cycle(n)));
  for (int m = 1; m <= 2; ++m) {
    CHECK(contains_iso(c, gen_complete_bipartite(2, 3, m)));
    CHECK(contains_iso(c, gen_complete_bipartite(1, 4, m)));
  }
  CHECK_FALSE(contains_iso(c, fx::path(4)));
  for (const auto& ng : c.graphs) {
    CHECK(is_connected(ng.graph));
    CHECK(ng.graph.max_multiplicity() <= 2);
    if (ng.graph.order() <= 8) CHECK(oracle::half_transitive(ng.graph));
  }
}

TEST_CASE("small multigraph enumeration covers every isomorphism class once") {
  // Connected graphs on 4 vertices with multiplicity 1: six classes.
  int simple4 = 0;
  for_each_small_multigraph(4, 1, [&](const Multigraph& g) {
    if (g.order() == 4) ++simple4;
  });
  CHECK(simple4 == 6);
}

TEST_CASE("search for a restricted cut above the minimum edge degree") {
  CHECK_FALSE(search_xi_violation(0).has_value());
  const auto found = search_xi_violation();
  REQUIRE(found.has_value());
  const auto& g = found->graph;
  CHECK(lambda_prime(g).value > xi(g).value);
  CHECK(*oracle::lambda_prime(g) > xi(g).value);
  CHECK_FALSE(g.is_regular());
}
