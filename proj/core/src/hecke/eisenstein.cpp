#include "eisenlab/hecke/eisenstein.hpp"

#include "eisenlab/corering/charpoly.hpp"
#include "eisenlab/corering/hensel.hpp"
#include "eisenlab/corering/howell.hpp"
#include "eisenlab/error.hpp"
#include "eisenlab/invariants/invariants.hpp"

namespace eisenlab {

unsigned working_precision(u64 N, u64 p) { return tval(N, p) + 3; }

HeckeContext::HeckeContext(u64 N, u64 p, unsigned M)
    : n_(N), p_(p), mod_(p, M), space_(std::make_unique<ManinSpace>(N, mod_, ManinSpace::Sign::plus)) {
  cusp_ = cuspidal_basis(*space_);
}

const ZmodMatrix& HeckeContext::hecke_full(u64 ell) {
  auto it = full_.find(ell);
  if (it == full_.end()) it = full_.emplace(ell, hecke_matrix_full(*space_, ell)).first;
  return it->second;
}

ZmodMatrix HeckeContext::hecke_cuspidal(u64 ell) { return restrict_to_cuspidal(*space_, *cusp_, hecke_full(ell)); }

namespace {

// Kernel of A^K for K a power of two >= bound: the Fitting-zero summand,
// provided A is nilpotent of rank <= bound/M mod p on it.
FreeBasis fitting_zero(const ZmodMatrix& a, std::size_t bound) {
  ZmodMatrix power = a;
  for (std::size_t k = 1; k < bound; k *= 2) power = power * power;
  return unit_pivot_kernel(power);
}

std::vector<u64> first_primes_except(u64 N, unsigned count) {
  std::vector<u64> out;
  for (u64 q = 2; out.size() < count; ++q) {
    if (q != N && is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<Valuation> t_values_of(const PadicPoly& f) {
  PadicPoly g = f.shift_up(1);
  auto z = t_sequence(g);
  return std::vector<Valuation>(z.begin() + 1, z.end());
}

PadicPoly local_charpoly(HeckeContext& ctx, const ZmodMatrix& full_operator) {
  if (!ctx.local_summand()) throw DomainError("local_charpoly: Eisenstein summand not computed");
  return berkowitz_charpoly(restrict_to(full_operator, *ctx.local_summand()));
}

std::vector<Component> component_slopes(const NewtonPolygon& np, const PadicPoly& f) {
  const Modulus& m = f.modulus();
  const Modulus mp = m.with_exponent(1);
  std::vector<Component> out;
  for (const Segment& seg : np.segments()) {
    const unsigned L = seg.length();
    const Slope s = seg.slope();
    if (s.den == L) {
      out.push_back({s, L, true});
      continue;
    }
    if (s.den != 1) {
      out.push_back({s, L, false});
      continue;
    }
    // Integral slope h: the residual polynomial sum_k (a_{i0+k} / p^{v0-hk} mod p) z^k.
    std::vector<u64> res(L + 1, 0);
    for (unsigned k = 0; k <= L; ++k) {
      u64 c = f.coeff(seg.from.i + k);
      i64 target = static_cast<i64>(seg.from.v) - static_cast<i64>(s.num) * k;
      if (c == 0 || target < 0) continue;
      Valuation v = m.valuation(c);
      if (v.is_finite() && v.value() == static_cast<unsigned>(target)) res[k] = (c / m.p_pow(v.value())) % m.p();
    }
    auto shape = fp::factor_shape(PadicPoly(mp, std::move(res)));
    if (shape.empty()) {
      out.push_back({s, L, false});
      continue;
    }
    for (const auto& fs : shape) out.push_back({s, fs.degree * fs.multiplicity, fs.multiplicity == 1});
  }
  return out;
}

EisensteinReport eisenstein_local_factor(HeckeContext& ctx, const EisensteinOptions& opts) {
  const u64 N = ctx.N(), p = ctx.p();
  const Modulus& m = ctx.modulus();
  const unsigned M = m.exponent();
  const unsigned t = tval(N, p);
  if (t == 0) throw DomainError("eisenstein_local_factor: p must divide N-1 for the full pipeline");

  EisensteinReport rep;
  rep.N = N;
  rep.p = p;
  rep.M = M;
  if (opts.ell) {
    if (!is_good_prime(*opts.ell, N, p)) throw DomainError("eisenstein_local_factor: requested l is not a good prime");
    rep.ell = *opts.ell;
  } else {
    rep.ell = good_primes(N, p, 1).front();
  }
  rep.diagnostics.genus = genus_x0(N);

  const ZmodMatrix a_full = ctx.hecke_full(rep.ell).shifted(m.reduce_u(rep.ell + 1));
  const ZmodMatrix a_cusp = ctx.hecke_cuspidal(rep.ell).shifted(m.reduce_u(rep.ell + 1));

  const PadicPoly q = berkowitz_charpoly(a_cusp);
  auto [big_f, unit_part] = hensel_split_distinguished(q);
  const unsigned e_gen = static_cast<unsigned>(big_f.degree());
  rep.diagnostics.zero_multiplicity = e_gen;

  // Generalized kernel of A on the plus quotient: rank e'+1 (the Eisenstein
  // line adds one), and A restricted there has charpoly y * F.
  FreeBasis v = fitting_zero(a_full, static_cast<std::size_t>(e_gen + 1) * M);
  if (v.rank() != e_gen + 1) throw MismatchError("eisenstein_local_factor: generalized kernel has unexpected rank");
  if (!(berkowitz_charpoly(restrict_to(a_full, v)) == big_f.shift_up(1)))
    throw MismatchError("eisenstein_local_factor: local charpoly differs from the Hensel factor");

  for (u64 aux : first_primes_except(N, opts.aux_primes)) {
    if (aux == rep.ell) continue;
    ZmodMatrix b = restrict_to(ctx.hecke_full(aux).shifted(m.reduce_u(aux + 1)), v);
    FreeBasis w = fitting_zero(b, v.rank() * M);
    if (w.rank() < v.rank()) {
      v = normalize_free_basis(v.vectors * w.vectors);
      rep.diagnostics.refined = true;
    }
  }
  ctx.set_local_summand(v);

  PadicPoly local = berkowitz_charpoly(restrict_to(a_full, v)).shift_down(1);
  if (!rep.diagnostics.refined && !(local == big_f))
    throw MismatchError("eisenstein_local_factor: joint summand charpoly differs from the Hensel factor");
  rep.f = rep.diagnostics.refined ? local : big_f;
  rep.e = static_cast<unsigned>(rep.f.degree());
  if (rep.e == 0) throw MismatchError("eisenstein_local_factor: p | N-1 but the Eisenstein part is empty");

  rep.t_seq = t_values_of(rep.f);
  for (const auto& tv : rep.t_seq) {
    if (!tv.is_finite()) throw PrecisionExhausted("eisenstein_local_factor: t-sequence reached the working precision");
  }
  rep.np = lower_convex_hull(points_of(rep.t_seq, 0));
  rep.components = component_slopes(rep.np, rep.f);
  rep.diagnostics.f0_valuation = m.valuation(rep.f.coeff(0));
  if (!rep.diagnostics.f0_valuation.is_finite())
    throw PrecisionExhausted("eisenstein_local_factor: f(0) vanishes at the working precision");

  generator_check(ctx, rep, rep.ell);
  return rep;
}

EisensteinReport eisenstein_local_factor(u64 N, u64 p, const EisensteinOptions& opts) {
  if (!is_prime(N)) throw DomainError("eisenstein_local_factor: N must be prime");
  if (!is_prime(p) || p <= 3) throw DomainError("eisenstein_local_factor: p must be a prime > 3");
  if ((N - 1) % p != 0) {
    EisensteinReport rep;
    rep.N = N;
    rep.p = p;
    rep.M = opts.precision.value_or(3);
    rep.f = PadicPoly::constant(Modulus(p, rep.M), 1);
    rep.t_seq = {Valuation::finite(0)};
    rep.np = NewtonPolygon({{0, 0}});
    rep.diagnostics.f0_valuation = Valuation::finite(0);
    return rep;
  }
  HeckeContext ctx(N, p, opts.precision.value_or(working_precision(N, p)));
  return eisenstein_local_factor(ctx, opts);
}

bool generator_check(HeckeContext& ctx, EisensteinReport& report, u64 ell_prime) {
  if (!ctx.local_summand()) throw DomainError("generator_check: Eisenstein summand not computed");
  if (ell_prime == ctx.N()) throw DomainError("generator_check: l' must differ from N");
  const Modulus& m = ctx.modulus();
  const FreeBasis& v = *ctx.local_summand();
  const std::size_t k = v.rank();
  ZmodMatrix a = restrict_to(ctx.hecke_full(report.ell).shifted(m.reduce_u(report.ell + 1)), v);
  ZmodMatrix y2 = restrict_to(ctx.hecke_full(ell_prime).shifted(m.reduce_u(ell_prime + 1)), v);

  // A cyclic vector for A on the local summand: Krylov matrix invertible mod p.
  std::optional<ZmodMatrix> krylov;
  std::vector<u64> cyc;
  u64 state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t attempt = 0; attempt < k + 32 && !krylov; ++attempt) {
    std::vector<u64> cand(k, 0);
    if (attempt < k) {
      cand[attempt] = 1;
    } else {
      for (auto& x : cand) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        x = m.reduce_u(state >> 17);
      }
    }
    ZmodMatrix kr(m, k, k);
    std::vector<u64> w = cand;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) kr.at(i, j) = w[i];
      w = a.apply(w);
    }
    if (rank_mod_p(kr) == k) {
      krylov = std::move(kr);
      cyc = std::move(cand);
    }
  }
  if (!krylov) throw MismatchError("generator_check: local summand is not cyclic for T_l");

  auto h = HowellBasis(*krylov).solve(y2.apply(cyc));
  if (!h) throw MismatchError("generator_check: Krylov system is not solvable");
  if ((*h)[0] != 0) throw MismatchError("generator_check: T_l' - l' - 1 is not in the ideal generated by y");
  const bool generates = m.is_unit((*h)[1]);
  const bool good = is_good_prime(ell_prime, ctx.N(), ctx.p());
  report.diagnostics.generator_checks[ell_prime] = generates;
  if (generates != good) throw MismatchError("generator_check: generator criterion disagrees with the good-prime test");
  return generates;
}

RankConsistency rank_consistency_check(HeckeContext& ctx, const EisensteinReport& report, unsigned aux_primes) {
  RankConsistency rc;
  const unsigned t = tval(report.N, report.p);
  rc.f0_matches = report.diagnostics.f0_valuation == Valuation::finite(t);
  rc.t1_matches = !report.t_seq.empty() && report.t_seq.front() == Valuation::finite(t);
  rc.last_zero = !report.t_seq.empty() && report.t_seq.back() == Valuation::finite(0);

  // Joint generalized 0-eigenspace mod p of T_q - q - 1 on the cuspidal
  // quotient: first for T_l by squaring until the rank stabilises, then cut
  // down by the auxiliary operators.
  const Modulus mp = ctx.modulus().with_exponent(1);
  auto shifted_mod_p = [&](u64 q) { return ctx.hecke_cuspidal(q).with_modulus_reduced(1).shifted(mp.reduce_u(q + 1)); };
  ZmodMatrix b = shifted_mod_p(report.ell);
  std::size_t r = rank_mod_p(b);
  while (true) {
    b = b * b;
    std::size_t r2 = rank_mod_p(b);
    if (r2 == r) break;
    r = r2;
  }
  rc.single_operator_kernel = static_cast<unsigned>(b.rows() - r);
  FreeBasis v = unit_pivot_kernel(b);
  for (u64 aux : first_primes_except(report.N, aux_primes)) {
    if (aux == report.ell || v.rank() == 0) continue;
    ZmodMatrix c = restrict_to(shifted_mod_p(aux), v);
    FreeBasis w = fitting_zero(c, v.rank());
    if (w.rank() < v.rank()) v = normalize_free_basis(v.vectors * w.vectors);
  }
  rc.kernel_dimension = static_cast<unsigned>(v.rank());
  rc.e_matches_kernel = rc.kernel_dimension == report.e;
  rc.ok = rc.f0_matches && rc.t1_matches && rc.last_zero && rc.e_matches_kernel;
  if (!rc.f0_matches) rc.message += "v_p(f(0)) != v_p(N-1); ";
  if (!rc.t1_matches) rc.message += "t_1 != v_p(N-1); ";
  if (!rc.last_zero) rc.message += "t_{e+1} != 0; ";
  if (!rc.e_matches_kernel)
    rc.message += "e != dim of generalized 0-eigenspace mod p (" + std::to_string(rc.kernel_dimension) + "); ";
  return rc;
}

}  // namespace eisenlab
