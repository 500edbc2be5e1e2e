#include <numeric>

#include "doctest.h"
#include "eisenlab/corering/arith.hpp"
#include "eisenlab/corering/dlog.hpp"
#include "eisenlab/error.hpp"
#include "eisenlab/invariants/invariants.hpp"

using namespace eisenlab;

namespace {

// prod_{i <= (N-1)/2} i^i mod N by repeated multiplication, no powmod.
u64 merel_by_hand(u64 N) {
  u64 acc = 1;
  for (u64 i = 1; i <= (N - 1) / 2; ++i)
    for (u64 k = 0; k < i; ++k) acc = acc * i % N;
  return acc;
}

}  // namespace

TEST_CASE("merel number") {
  CHECK(merel_number(337) == 227);
  CHECK(merel_number(5) == 4);
  CHECK(merel_number(3) == 1);
  for (u64 N : {11u, 31u, 41u, 61u, 181u, 211u}) CHECK(merel_number(N) == merel_by_hand(N));
}

TEST_CASE("merel report") {
  auto r337 = merel_report(337, 7, 1);
  CHECK(r337.merel_value == 227);
  CHECK_FALSE(r337.is_power.at(1));
  auto r181 = merel_report(181, 5, 1);
  CHECK(r181.is_power.at(1));
  CHECK(r181.log_sum.at(1) == 0);
  CHECK_THROWS_AS(merel_report(13, 5, 1), DomainError);
}

TEST_CASE("zeta element coefficients for N = 11, p = 5") {
  // B2(i/11) = (i^2 - 11 i + 121/6) / 121, reduced mod 5 with exact rationals.
  auto z = zeta_element(11, 5, 1);
  for (u64 i = 1; i < 11; ++i) {
    // numerator 6 i^2 - 66 i + 121 over 726.
    const i64 num = 6 * static_cast<i64>(i * i) - 66 * static_cast<i64>(i) + 121;
    const u64 n5 = static_cast<u64>(((num % 5) + 5) % 5);
    const u64 expected = n5 * invmod(726 % 5, 5) % 5;
    CHECK(z.coeff(i) == expected);
  }
  CHECK(z.augmentation() == 0);
  CHECK_THROWS(zeta_element(13, 3, 1));
}

TEST_CASE("augmentation of zeta vanishes for every s <= t") {
  for (auto [N, p] : {std::pair<u64, u64>{3001, 5}, {181, 5}, {337, 7}, {1321, 11}})
    for (unsigned s = 1; s <= tval(N, p); ++s) CHECK(zeta_element(N, p, s).augmentation() == 0);
}

TEST_CASE("ord of zeta") {
  auto dlog = build_dlog_table(181);
  CHECK(ord_zeta(181, 5, 1, 10, dlog).ord == OrdValue{3, false});
  CHECK(ord_zeta(11, 5, 1, 10).ord == OrdValue{1, false});
  for (u64 N : {31u, 41u, 61u, 71u, 101u, 131u, 151u})
    CHECK(ord_zeta(N, 5, 1, 10).ord.value >= 1);
}

TEST_CASE("ord_1 >= 2 exactly when Merel's number is a p-th power") {
  for (u64 p : {5u, 7u}) {
    for (u64 N = p + 1; N < 1200; N += p) {
      if (!is_prime(N)) continue;
      auto dlog = build_dlog_table(N);
      const bool power = merel_report(N, p, 1, dlog).is_power.at(1);
      const auto ord = zeta_report(N, p, 1, dlog).ord.at(1);
      CHECK_MESSAGE((ord.value >= 2) == power, "N=" << N << " p=" << p);
    }
  }
}

TEST_CASE("good primes") {
  CHECK(is_good_prime(2, 11, 5));
  CHECK_FALSE(is_good_prime(11, 31, 5));  // 11 = 1 mod 5
  // A p-th power residue that is not 1 mod p.
  const u64 N = 31, p = 5;
  for (u64 l = 2; l < 60; ++l) {
    if (!is_prime(l) || l == N || l % p == 1) continue;
    CHECK(is_good_prime(l, N, p) == !is_power(l % N, N, p));
  }
  auto g = good_primes(181, 5, 2);
  REQUIRE(g.size() == 2);
  CHECK(g[0] < g[1]);
  CHECK(is_good_prime(g[0], 181, 5));
}

TEST_CASE("lecouturier identities") {
  CHECK(lecouturier_check(181, 5, 1));
  CHECK(lecouturier_check(3001, 5, 3));
  CHECK(lecouturier_check(337, 7, 1));
}

TEST_CASE("tval") {
  CHECK(tval(3001, 5) == 3);
  CHECK(tval(13, 5) == 0);
  CHECK(tval(337, 7) == 1);
}
