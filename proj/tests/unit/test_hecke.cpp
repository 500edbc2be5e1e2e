#include "doctest.h"
#include "eisenlab/corering/charpoly.hpp"
#include "eisenlab/corering/hensel.hpp"
#include "eisenlab/error.hpp"
#include "eisenlab/hecke/eisenstein.hpp"
#include "eisenlab/hecke/manin.hpp"
#include "eisenlab/invariants/invariants.hpp"

using namespace eisenlab;

TEST_CASE("genus and Manin dimensions") {
  CHECK(genus_x0(11) == 1);
  CHECK(genus_x0(37) == 2);
  CHECK(genus_x0(181) == 14);
  for (u64 N : {11u, 37u, 61u, 101u}) {
    Modulus m(5, 2);
    ManinSpace full(N, m, ManinSpace::Sign::full);
    ManinSpace plus(N, m, ManinSpace::Sign::plus);
    // Cuspidal symbols have dimension 2g, plus one boundary dimension.
    CHECK(full.dimension() == 2 * genus_x0(N) + 1);
    CHECK(plus.dimension() == genus_x0(N) + 1);
    CHECK(hecke_matrix(full, 2).rows() == 2 * genus_x0(N));
  }
}

TEST_CASE("T_2 on X_0(11) has eigenvalue -2") {
  Modulus m(7, 3);
  ManinSpace s(11, m, ManinSpace::Sign::full);
  auto t2 = hecke_matrix(s, 2);
  auto cp = berkowitz_charpoly(t2);
  // (y + 2)^2 on the two-dimensional cuspidal space.
  CHECK(cp == PadicPoly(m, {4, 4, 1}));
}

TEST_CASE("T_l has eigenvalue l + 1 on the Eisenstein line") {
  Modulus m(5, 3);
  ManinSpace s(61, m);
  for (u64 l : {2u, 3u, 7u}) {
    auto t = hecke_matrix_full(s, l);
    // The boundary functional is an eigenvector of the transpose.
    const auto& phi = s.boundary();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      u64 lhs = 0;
      for (std::size_t i = 0; i < t.rows(); ++i) lhs = m.add(lhs, m.mul(phi[i], t.at(i, j)));
      CHECK(lhs == m.mul(m.reduce_u(l + 1), phi[j]));
    }
  }
}

TEST_CASE("Hecke operators commute") {
  Modulus m(5, 3);
  ManinSpace s(131, m);
  auto t2 = hecke_matrix(s, 2), t3 = hecke_matrix(s, 3), t7 = hecke_matrix(s, 7);
  CHECK((t2 * t3) == (t3 * t2));
  CHECK((t3 * t7) == (t7 * t3));
  CHECK_THROWS(hecke_matrix(s, 131));
}

TEST_CASE("Eichler-Shimura: trace of T_l agrees between sign components") {
  // On the full cuspidal space every eigenvalue appears twice.
  Modulus m(7, 2);
  ManinSpace full(67, m, ManinSpace::Sign::full), plus(67, m);
  for (u64 l : {2u, 3u}) {
    auto tf = hecke_matrix(full, l), tp = hecke_matrix(plus, l);
    u64 trf = 0, trp = 0;
    for (std::size_t i = 0; i < tf.rows(); ++i) trf = m.add(trf, tf.at(i, i));
    for (std::size_t i = 0; i < tp.rows(); ++i) trp = m.add(trp, tp.at(i, i));
    CHECK(trf == m.mul(2, trp));
  }
}

TEST_CASE("trivial report when p does not divide N - 1") {
  auto r = eisenstein_local_factor(13, 5);
  CHECK(r.e == 0);
  CHECK_THROWS_AS(eisenstein_local_factor(15, 5), DomainError);
}

TEST_CASE("rank is at least 2 exactly when Merel's number is a p-th power") {
  for (u64 N : {11u, 31u, 41u, 61u, 71u, 101u, 131u, 151u, 181u, 191u, 211u, 241u}) {
    auto r = eisenstein_local_factor(N, 5);
    const bool power = merel_report(N, 5, 1).is_power.at(1);
    CHECK_MESSAGE((r.e >= 2) == power, "N=" << N << " e=" << r.e);
    CHECK(r.t_seq.front() == Valuation::finite(tval(N, 5)));
    CHECK(r.t_seq.back() == Valuation::finite(0));
    CHECK(r.diagnostics.f0_valuation == Valuation::finite(tval(N, 5)));
    unsigned total = 0;
    for (const auto& c : r.components) total += c.degree;
    CHECK(total == r.e);
  }
}

TEST_CASE("report for N = 181") {
  HeckeContext ctx(181, 5, working_precision(181, 5));
  auto r = eisenstein_local_factor(ctx);
  CHECK(r.e == 3);
  CHECK(r.ell == good_primes(181, 5, 1).front());
  CHECK(rank_consistency_check(ctx, r).ok);
  CHECK(generator_check(ctx, r, r.ell));
  // The next good prime also generates; a prime = 1 mod 5 does not.
  auto gp = good_primes(181, 5, 2);
  CHECK(generator_check(ctx, r, gp[1]));
  CHECK_FALSE(generator_check(ctx, r, 11));
  // A 5th power residue that is not 1 mod 5.
  for (u64 l = 2; l < 200; ++l) {
    if (!is_prime(l) || l == 181 || l % 5 == 1 || !is_power(l, 181, 5)) continue;
    CHECK_FALSE(generator_check(ctx, r, l));
    break;
  }
}

TEST_CASE("t-sequence does not depend on the good prime or the precision") {
  auto a = eisenstein_local_factor(751, 5);
  auto gp = good_primes(751, 5, 2);
  EisensteinOptions opts;
  opts.ell = gp[1];
  auto b = eisenstein_local_factor(751, 5, opts);
  CHECK(a.e == 2);
  CHECK(a.t_seq == b.t_seq);
  CHECK(a.np == b.np);
  CHECK(a.components == b.components);
  EisensteinOptions hi;
  hi.precision = working_precision(751, 5) + 2;
  auto c = eisenstein_local_factor(751, 5, hi);
  CHECK(c.t_seq == a.t_seq);
}

TEST_CASE("component slopes") {
  Modulus m(5, 6);
  // Segment data only depends on the hull; f is used to split integral slopes.
  NewtonPolygon np({{0, 3}, {1, 2}, {3, 1}, {6, 0}});
  // f = (y - 5) (y^2 - 5) (y^3 - 5): slopes 1, 1/2, 1/3.
  PadicPoly f = PadicPoly(m, {m.reduce(-5), 1}) * PadicPoly(m, {m.reduce(-5), 0, 1}) *
                PadicPoly(m, {m.reduce(-5), 0, 0, 1});
  auto c = component_slopes(np, f);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Component{Slope{1, 1}, 1, true});
  CHECK(c[1] == Component{Slope{1, 2}, 2, true});
  CHECK(c[2] == Component{Slope{1, 3}, 3, true});

  NewtonPolygon single({{0, 1}, {3, 0}});
  auto s = component_slopes(single, PadicPoly(m, {m.reduce(-5), 0, 0, 1}));
  REQUIRE(s.size() == 1);
  CHECK(s[0] == Component{Slope{1, 3}, 3, true});
}
