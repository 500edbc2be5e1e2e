#include <random>
#include <set>

#include "doctest.h"
#include "eisenlab/corering/arith.hpp"
#include "eisenlab/corering/charpoly.hpp"
#include "eisenlab/corering/dlog.hpp"
#include "eisenlab/corering/hensel.hpp"
#include "eisenlab/corering/howell.hpp"
#include "eisenlab/corering/matrix.hpp"
#include "eisenlab/corering/newton.hpp"
#include "eisenlab/error.hpp"
#include "oracles.hpp"

using namespace eisenlab;

TEST_CASE("valuation_p") {
  CHECK(valuation_p(3000, 5) == Valuation::finite(3));
  CHECK(valuation_p(0, 7) == Valuation::infinite());
  CHECK(valuation_p(336, 7) == Valuation::finite(1));
  CHECK(valuation_p(-125, 5) == Valuation::finite(3));
}

TEST_CASE("residue valuations cap at the precision") {
  Modulus m(5, 3);
  CHECK(m.valuation(0) == Valuation::at_least(3));
  CHECK(m.valuation(25) == Valuation::finite(2));
  CHECK(m.valuation(7) == Valuation::finite(0));
  CHECK(Valuation::at_least(3).to_string() == ">=3");
}

TEST_CASE("dlog tables") {
  auto t7 = build_dlog_table(7);
  CHECK(t7.generator() == 3);
  CHECK(t7.log(3) == 1);
  CHECK(t7.log(2) == 2);
  CHECK(build_dlog_table(5).log(1) == 0);
  auto t11 = build_dlog_table(11);
  CHECK(t11.generator() == 2);
  CHECK(t11.log(10) == 5);

  // Round trip and injectivity on a larger prime.
  const u64 N = 1009;
  auto t = build_dlog_table(N);
  std::vector<bool> seen(N - 1, false);
  for (u64 x = 1; x < N; ++x) {
    u64 k = t.log(x);
    REQUIRE(k < N - 1);
    CHECK(powmod(t.generator(), k, N) == x);
    CHECK_FALSE(seen[k]);
    seen[k] = true;
  }
  CHECK_THROWS_AS(build_dlog_table(15), DomainError);
}

TEST_CASE("is_power") {
  CHECK_FALSE(is_power(227, 337, 7));
  CHECK(is_power(1, 337, 7));
  CHECK(is_power(4, 5, 2));
  // Brute-force squares mod 13.
  for (u64 x = 1; x < 13; ++x) {
    bool square = false;
    for (u64 y = 1; y < 13; ++y) square |= (y * y) % 13 == x;
    CHECK(is_power(x, 13, 2) == square);
  }
  CHECK_THROWS(is_power(2, 13, 5));
}

TEST_CASE("howell membership") {
  Modulus m3(5, 3), m2(5, 2);
  ZmodMatrix a(m3, 1, 1);
  a.at(0, 0) = 5;
  std::vector<u64> b{25};
  auto r = howell_membership(a, b);
  REQUIRE(r.member);
  CHECK(a.apply(r.witness) == b);

  ZmodMatrix a2(m2, 1, 1);
  a2.at(0, 0) = 5;
  std::vector<u64> one{1};
  CHECK_FALSE(howell_membership(a2, one).member);

  std::mt19937_64 rng(7);
  ZmodMatrix id = ZmodMatrix::identity(m3, 4);
  std::vector<u64> v(4);
  for (auto& x : v) x = rng() % 125;
  auto w = howell_membership(id, v);
  REQUIRE(w.member);
  CHECK(w.witness == v);
}

TEST_CASE("howell membership agrees with exhaustive span over Z/25") {
  Modulus m(5, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ZmodMatrix a(m, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a.at(i, j) = 5 * (rng() % 5) + (rng() % 3 == 0 ? rng() % 5 : 0);
    std::vector<std::vector<bool>> span(25, std::vector<bool>(25, false));
    for (u64 x = 0; x < 25; ++x)
      for (u64 y = 0; y < 25; ++y) {
        auto v = a.apply(std::vector<u64>{x, y});
        span[v[0]][v[1]] = true;
      }
    for (u64 b0 = 0; b0 < 25; b0 += 3)
      for (u64 b1 = 0; b1 < 25; b1 += 2) CHECK(howell_membership(a, std::vector<u64>{b0, b1}).member == span[b0][b1]);
  }
}

TEST_CASE("unit-pivot kernel with non-unit entries in skipped columns") {
  // Column 0 has no unit, so elimination must still clear it in later rows.
  Modulus m(5, 2);
  const std::vector<i64> e{5, 1, 0, 10, 2, 0, 0, 0, 1};
  ZmodMatrix a = ZmodMatrix::from_integers(m, 3, 3, e);
  FreeBasis k = unit_pivot_kernel(a);
  REQUIRE(k.rank() == 1);
  CHECK((a * k.vectors) == ZmodMatrix(m, 3, 1));
}

TEST_CASE("kernel generators span the kernel") {
  Modulus m(5, 2);
  const std::vector<i64> e{5, 0, 0, 1};
  ZmodMatrix a = ZmodMatrix::from_integers(m, 2, 2, e);
  ZmodMatrix k = kernel_generators(a);
  CHECK((a * k) == ZmodMatrix(m, 2, k.cols()));
  // Kernel of diag(5, 1) over Z/25 is {(5x, 0)}: 5 elements, all reachable.
  std::set<std::pair<u64, u64>> reached;
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (u64 c = 0; c < 25; ++c) reached.insert({k.at(0, j) * c % 25, k.at(1, j) * c % 25});
  CHECK(reached.size() == 5);
}

TEST_CASE("berkowitz small cases") {
  Modulus m(5, 2);
  auto id = ZmodMatrix::identity(m, 2);
  CHECK(berkowitz_charpoly(id) == PadicPoly(m, {1, 23, 1}));
  const std::vector<i64> d{2, 0, 0, 3};
  CHECK(berkowitz_charpoly(ZmodMatrix::from_integers(m, 2, 2, d)) == PadicPoly(m, {6, 20, 1}));
}

TEST_CASE("berkowitz agrees with the integer Leibniz oracle") {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<std::vector<i64>> a(n, std::vector<i64>(n));
      std::vector<i64> flat;
      for (auto& row : a)
        for (auto& x : row) {
          x = static_cast<i64>(rng() % 41) - 20;
          flat.push_back(x);
        }
      const auto ref = oracle::integer_charpoly(a);
      for (u64 p : {5u, 7u}) {
        Modulus m(p, 3);
        auto cp = berkowitz_charpoly(ZmodMatrix::from_integers(m, n, n, flat));
        REQUIRE(cp.degree() == static_cast<int>(n));
        for (std::size_t k = 0; k <= n; ++k) CHECK(cp.coeff(k) == oracle::reduce(ref[k], m.value()));
      }
    }
  }
}

TEST_CASE("hensel split") {
  Modulus m(5, 4);
  PadicPoly a(m, {m.reduce(-5), 1});  // y - 5
  PadicPoly b(m, {m.reduce(-1), 1});  // y - 1
  auto s = hensel_split_distinguished(a * b);
  CHECK(s.f == a);
  CHECK(s.u == b);

  PadicPoly y3 = PadicPoly::monomial(m, 3);
  auto s2 = hensel_split_distinguished(y3);
  CHECK(s2.f == y3);
  CHECK(s2.u == PadicPoly::constant(m, 1));

  auto s3 = hensel_split_distinguished(b);
  CHECK(s3.f.degree() == 0);
  CHECK(s3.u == b);

  CHECK_THROWS(hensel_split_distinguished(PadicPoly(m, {1, 5})));
}

TEST_CASE("hensel split on random products") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 p = trial % 2 ? 7 : 5;
    Modulus m(p, 4);
    const unsigned ef = 1 + rng() % 3, eu = 1 + rng() % 3;
    std::vector<u64> fc(ef + 1), uc(eu + 1);
    for (unsigned i = 0; i < ef; ++i) fc[i] = p * (rng() % m.value()) % m.value();
    fc[ef] = 1;
    for (unsigned i = 0; i <= eu; ++i) uc[i] = rng() % m.value();
    uc[eu] = 1;
    if (uc[0] % p == 0) uc[0] += 1;
    PadicPoly f(m, fc), u(m, uc);
    auto s = hensel_split_distinguished(f * u);
    CHECK(s.f * s.u == f * u);
    CHECK(s.f.degree() == static_cast<int>(ef));
    CHECK(s.f == f);  // the factorization is unique
  }
}

TEST_CASE("lower convex hull") {
  auto pts = [](std::vector<std::pair<unsigned, unsigned>> v) {
    std::vector<NPPoint> out;
    for (auto [i, t] : v) out.push_back(NPPoint{i, t});
    return out;
  };
  auto hull = lower_convex_hull(pts({{0, 3}, {1, 2}, {2, 2}, {3, 1}, {4, 1}, {5, 1}, {6, 0}}));
  CHECK(hull.vertices() == std::vector<Vertex>{{0, 3}, {1, 2}, {3, 1}, {6, 0}});
  CHECK(lower_convex_hull(pts({{0, 2}, {1, 1}, {2, 0}})).vertices() == std::vector<Vertex>{{0, 2}, {2, 0}});
  std::vector<NPPoint> with_inf{{0, std::nullopt}, {1, 3u}, {2, 0u}};
  CHECK(lower_convex_hull(with_inf).vertices() == std::vector<Vertex>{{1, 3}, {2, 0}});
}

TEST_CASE("t-sequences of the quadratic example") {
  Modulus m(5, 4);
  CHECK(t_sequence(PadicPoly(m, {25 * 2, 5 * 3, 1})) ==
        std::vector<Valuation>{Valuation::finite(2), Valuation::finite(1), Valuation::finite(0)});
  CHECK(t_sequence(PadicPoly(m, {25 * 2, 25, 1})) ==
        std::vector<Valuation>{Valuation::finite(2), Valuation::finite(2), Valuation::finite(0)});
  CHECK(t_sequence(PadicPoly(m, {25 * 2, 0, 1})) ==
        std::vector<Valuation>{Valuation::finite(2), Valuation::finite(2), Valuation::finite(0)});
  CHECK(t_sequence(PadicPoly::monomial(m, 1)) == std::vector<Valuation>{Valuation::at_least(4), Valuation::finite(0)});
  CHECK_THROWS(t_sequence(PadicPoly(m, {1, 1})));
}

TEST_CASE("t-sequence matches the surjection oracle on a few polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const u64 p = 5;
    const unsigned M = 2, deg = 1 + rng() % 3;
    Modulus m(p, M);
    std::vector<i64> g(deg + 1);
    std::vector<u64> gc(deg + 1);
    for (unsigned i = 0; i < deg; ++i) {
      g[i] = static_cast<i64>(p * (rng() % (m.value() / p)));
      gc[i] = static_cast<u64>(g[i]);
    }
    g[deg] = 1;
    gc[deg] = 1;
    auto t = t_sequence(PadicPoly(m, gc));
    auto ref = oracle::brute_force_t(g, p, M);
    REQUIRE(t.size() == ref.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (ref[i] == M)
        CHECK(t[i].at_least_value(M));
      else
        CHECK(t[i] == Valuation::finite(ref[i]));
    }
  }
}

TEST_CASE("modular arithmetic helpers") {
  CHECK(is_prime(337));
  CHECK_FALSE(is_prime(341));
  CHECK(powmod(3, 6, 7) == 1);
  CHECK(invmod(3, 7) == 5);
  CHECK(prime_factors(3000) == std::vector<u64>{2, 3, 5});
  Modulus m(7, 2);
  CHECK(m.mul(m.inv(10), 10) == 1);
  CHECK_THROWS(Modulus(4, 2));
}
