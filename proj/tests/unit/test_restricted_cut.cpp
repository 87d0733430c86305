#include <algorithm>

#include "doctest.h"
#include "edgecut/error.hpp"
#include "edgecut/restricted_cut.hpp"
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

TEST_CASE("when the restricted cut exists") {
  CHECK_FALSE(lambda_prime_defined(fx::star(5)));
  CHECK_FALSE(lambda_prime_defined(fx::star(5, 3)));
  CHECK(lambda_prime_defined(fx::cycle(4)));
  CHECK_FALSE(lambda_prime_defined(Multigraph::build(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 3}})));
  CHECK_FALSE(lambda_prime_undefined_reason(fx::star(4)).empty());
  CHECK(code_of([] { lambda_prime(fx::star(4)); }) == ErrorCode::NotDefined);
}

TEST_CASE("restricted edge connectivity values") {
  for (int n = 4; n <= 10; ++n) CHECK(lambda_prime(fx::cycle(n)).value == 2);

  CHECK(lambda_prime(fx::k23()).value == 3);
  CHECK(oracle::lambda_prime(fx::k23()) == 3);
  CHECK(xi(fx::k23()).value == 3);

  CHECK(lambda_prime(fx::doubled_c4()).value == 2);
  CHECK(oracle::lambda_prime(fx::doubled_c4()) == 2);

  const auto r = lambda_prime(fx::k23());
  const int n = 5;
  const unsigned side = static_cast<unsigned>(r.certificate.side.to_mask());
  CHECK(oracle::cut_value(fx::k23(), side) == r.value);
  CHECK(oracle::no_isolated(fx::k23(), side));
  CHECK(oracle::no_isolated(fx::k23(), ((1U << n) - 1) & ~side));
}

TEST_CASE("restricted atoms") {
  const auto c6 = lambda_prime_atoms(fx::cycle(6));
  CHECK(c6.size == 2);
  std::vector<VertexSet> got;
  for (const auto& a : c6.atoms) got.push_back(a.side);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<VertexSet>{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

  CHECK(lambda_prime_atoms(fx::k23()).size == 2);

  // Path with a doubled middle edge: compare against enumeration.
  const auto p = Multigraph::build(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
  const auto atoms = lambda_prime_atoms(p);
  const auto frags = oracle::restricted_fragments(p);
  int smallest = 99;
  for (unsigned m : frags) smallest = std::min(smallest, __builtin_popcount(m));
  CHECK(atoms.size == smallest);
  CHECK(lambda_prime(p).value == *oracle::lambda_prime(p));
  CHECK_THROWS_AS(lambda_prime_atoms(fx::cycle(17)), Error);
}

TEST_CASE("restricted cut bounded by minimum edge degree on symmetric graphs") {
  CHECK(check_xi_bound(fx::k23()).holds);
  CHECK(check_xi_bound(fx::doubled_c4()).holds);
  CHECK(check_xi_bound(gen_km_x_k2(4)).holds);

  // A path whose middle edge is heavy: λ' = 3 exceeds ξ = 2.
  const auto g = Multigraph::build(4, {{0, 1, 1}, {1, 2, 3}, {2, 3, 1}});
  const auto b = check_xi_bound(g);
  CHECK_FALSE(b.holds);
  CHECK(b.lambda_prime == 3);
  CHECK(b.xi == 2);
  CHECK(oracle::lambda_prime(g) == 3);
}

TEST_CASE("restricted optimality") {
  CHECK(is_lambda_prime_optimal(fx::cycle(6)));
  CHECK(is_lambda_prime_optimal(fx::k23()));
  CHECK(is_lambda_prime_optimal(gen_complete_bipartite(3, 4, 1)));
  CHECK(code_of([] { is_lambda_prime_optimal(fx::path(5)); }) == ErrorCode::NotSemiRegular);
}

TEST_CASE("atom degree check preconditions") {
  // δ < 2μ on the doubled cycle.
  CHECK(code_of([] { atom_min_degree_check(fx::doubled_c4(), {0, 1}); }) == ErrorCode::PreconditionViolated);
  // Two-vertex atoms are outside the claim.
  CHECK(code_of([] { atom_min_degree_check(fx::cycle(6), {0, 1}); }) == ErrorCode::PreconditionViolated);
  // K3 x K2 has λ'-atoms of size 3 (a triangle): 2 neighbours inside each.
  const auto k = gen_km_x_k2(3);
  const auto atoms = lambda_prime_atoms(k);
  if (atoms.size >= 3) {
    for (const auto& a : atoms.atoms) CHECK(atom_min_degree_check(k, a.side));
  }
}
