#include <random>

#include "doctest.h"
#include "eisenlab/error.hpp"
#include "eisenlab/massey/cochain.hpp"
#include "eisenlab/massey/group.hpp"
#include "eisenlab/massey/massey.hpp"

using namespace eisenlab;
using namespace eisenlab::massey;

namespace {

const Modulus F5(5, 1);

// x -> alpha i + beta j on Z/5 x Z/5 (element index 5 i + j).
Cochain linear(u64 alpha, u64 beta) {
  Cochain c(25, 1, 1);
  for (std::size_t x = 0; x < 25; ++x) c.value(x)[0] = (alpha * (x / 5) + beta * (x % 5)) % 5;
  return c;
}

// A 1-cochain with values in End(chi1 + chi2), one entry filled.
Cochain matrix_cochain(std::size_t s, std::size_t t, const Cochain& entry) {
  Cochain c(entry.group_order(), 4, 1);
  for (std::size_t x = 0; x < entry.group_order(); ++x) c.value(x)[s * 2 + t] = entry.value(x)[0];
  return c;
}

}  // namespace

TEST_CASE("group constructions") {
  auto z5 = FiniteGroup::cyclic(5);
  CHECK(z5.order() == 5);
  CHECK(z5.mul(3, 4) == 2);
  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3.order() == 6);
  bool abelian = true;
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) abelian &= s3.mul(x, y) == s3.mul(y, x);
  CHECK_FALSE(abelian);
  CHECK(FiniteGroup::product(z5, z5).order() == 25);
  CHECK(all_characters(z5, F5).size() == 1);  // mu_5 in F_5 is trivial
  CHECK(all_characters(FiniteGroup::cyclic(4), F5).size() == 4);
}

TEST_CASE("homomorphisms are cocycles and constants have no coboundary") {
  auto z5 = FiniteGroup::cyclic(5);
  auto v = CoeffModule::trivial(z5, F5);
  Cochain a(5, 1, 1);
  for (std::size_t x = 0; x < 5; ++x) a.value(x)[0] = 2 * x % 5;
  CHECK(coboundary(z5, v, a).is_zero());
  Cochain c0(5, 1, 0);
  c0.value(0)[0] = 3;
  CHECK(coboundary(z5, v, c0).is_zero());
}

TEST_CASE("d o d = 0 on random cochains") {
  std::mt19937_64 rng(3);
  auto s3 = FiniteGroup::symmetric3();
  for (const auto& chi : all_characters(s3, Modulus(7, 1))) {
    auto v = CoeffModule::character(s3, Modulus(7, 1), chi);
    for (unsigned deg = 0; deg <= 1; ++deg) {
      auto c = random_cochain(s3, v, deg, rng);
      CHECK(coboundary(s3, v, coboundary(s3, v, c)).is_zero());
    }
  }
}

TEST_CASE("cup square of the identity of Z/5 is a coboundary") {
  auto z5 = FiniteGroup::cyclic(5);
  auto v = CoeffModule::trivial(z5, F5);
  Cochain a(5, 1, 1);
  for (std::size_t x = 0; x < 5; ++x) a.value(x)[0] = x;
  CHECK(vanishes_in_h2(z5, v, cup(z5, v, a, a)).has_value());
  CHECK(vanishes_in_h2(z5, v, Cochain(5, 1, 2)).has_value());
}

TEST_CASE("<a>^k on Z/5 vanishes exactly for k <= 4") {
  auto z5 = FiniteGroup::cyclic(5);
  auto v = CoeffModule::trivial(z5, F5);
  CoboundarySolver solver(z5, v);
  Cochain a(5, 1, 1);
  for (std::size_t x = 0; x < 5; ++x) a.value(x)[0] = x;
  for (std::size_t k = 2; k <= 4; ++k) CHECK(massey_power_vanishes(solver, a, k));
  CHECK_FALSE(massey_power_vanishes(solver, a, 5));
  // The defining system for k = 5 exists; only its Massey power is non-zero.
  auto d = find_defining_system(solver, a, 4);
  REQUIRE(d.has_value());
  auto c = massey_power(z5, v, *d);
  CHECK_FALSE(vanishes_in_h2(solver, c).has_value());
  Cochain not_closed(5, 1, 2);
  not_closed.value(not_closed.cell({1, 1}))[0] = 1;
  REQUIRE_FALSE(coboundary(z5, v, not_closed).is_zero());
  CHECK_THROWS(vanishes_in_h2(solver, not_closed));
}

TEST_CASE("a broken defining system is rejected") {
  auto z5 = FiniteGroup::cyclic(5);
  auto v = CoeffModule::trivial(z5, F5);
  Cochain a(5, 1, 1);
  for (std::size_t x = 0; x < 5; ++x) a.value(x)[0] = x;
  DefiningSystem d{{a, Cochain(5, 1, 1)}};  // d(0) != a u a
  CHECK_FALSE(satisfies_law(z5, v, d));
  CHECK_THROWS_AS(massey_power(z5, v, d), InvalidDefiningSystem);
}

TEST_CASE("index shift: the shifted power can vanish without the (2,1) relation") {
  // M_1 = [[0,0],[u,0]], M_2 = [[v,0],[0,0]] with u, v independent
  // homomorphisms of Z/5 x Z/5 and trivial characters. The (2,1) coordinate
  // of <M_1>^3 is u u v, non-zero in H^2, yet M'_1 = 0.
  auto z5 = FiniteGroup::cyclic(5);
  auto g = FiniteGroup::product(z5, z5);
  auto one = trivial_character(g, F5);
  CoordinateContext ctx(g, F5, one, one);
  const Cochain u = linear(1, 0), v = linear(0, 1);
  const Cochain m1 = scale(F5, 4, matrix_cochain(1, 0, u));
  const Cochain m2 = scale(F5, 4, matrix_cochain(0, 0, v));
  DefiningSystem d{{m1, m2}};
  REQUIRE(satisfies_law(g, ctx.end_module(), d));

  CHECK_FALSE(coordinate_relation(ctx, d, 1, 0));

  IndexShift shift = index_shift(ctx, d);
  REQUIRE(shift.d_prime.chain.size() == 1);  // r - 2 entries for r = 3
  CHECK(shift.d_prime.a().is_zero());
  auto end_prime = CoeffModule::endomorphisms(g, shift.nu_prime);
  CHECK(satisfies_law(g, end_prime, shift.d_prime));
  CoboundarySolver solver(g, end_prime);
  CHECK(vanishes_in_h2(solver, massey_power(g, end_prime, shift.d_prime)).has_value());
}

TEST_CASE("unipotent concatenation on Z/5") {
  auto z5 = FiniteGroup::cyclic(5);
  auto v = CoeffModule::trivial(z5, F5);
  CoboundarySolver solver(z5, v);
  Cochain a(5, 1, 1);
  for (std::size_t x = 0; x < 5; ++x) a.value(x)[0] = x;
  auto d3 = find_defining_system(solver, a, 3);
  REQUIRE(d3.has_value());
  auto ps = ProductSystem::from_power(*d3);
  REQUIRE(ps.length() == 4);
  // Blocks [1, 3] and [2, 4] overlap in the middle; <a>^4 vanishes, so the corner lifts.
  auto nu1 = unipotent_block(z5, v, ps, 1, 3), nu2 = unipotent_block(z5, v, ps, 2, 4);
  CHECK(nu1.is_homomorphism(z5));
  CHECK(nu2.is_homomorphism(z5));
  auto glued = unipotent_concatenation(z5, v, nu1, nu2);
  REQUIRE(glued.has_value());
  CHECK(glued->dim == 5);
  CHECK(glued->is_homomorphism(z5));
  CHECK(concatenation_exists_brute_force(z5, v, nu1, nu2));
}
