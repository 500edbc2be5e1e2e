#include "eisenlab/invariants/invariants.hpp"

#include <algorithm>

#include "eisenlab/corering/howell.hpp"
#include "eisenlab/corering/matrix.hpp"
#include "eisenlab/error.hpp"

namespace eisenlab {

unsigned tval(u64 N, u64 p) {
  Valuation v = valuation_p(static_cast<i64>(N - 1), p);
  return v.is_finite() ? v.value() : 0;
}

namespace {

void require_divides(u64 N, u64 p, const char* what) {
  if (!is_prime(N) || N < 3) throw DomainError(std::string(what) + ": N must be an odd prime");
  if (!is_prime(p)) throw DomainError(std::string(what) + ": p must be prime");
  if ((N - 1) % p != 0) throw DomainError(std::string(what) + ": p must divide N-1");
}

}  // namespace

u64 merel_number(u64 N) {
  if (!is_prime(N) || N < 3) throw DomainError("merel_number: N must be an odd prime");
  u64 acc = 1;
  for (u64 i = 1; i <= (N - 1) / 2; ++i) acc = mulmod(acc, powmod(i, i, N), N);
  return acc;
}

MerelReport merel_report(u64 N, u64 p, unsigned s_max, const DlogTable& dlog) {
  require_divides(N, p, "merel_report");
  const unsigned t = tval(N, p);
  if (s_max == 0 || s_max > t) throw DomainError("merel_report: need 1 <= s_max <= v_p(N-1)");
  MerelReport r;
  r.N = N;
  r.p = p;
  r.merel_value = merel_number(N);
  for (unsigned s = 1; s <= s_max; ++s) {
    const u64 q = ipow(p, s);
    u64 sum = 0;
    for (u64 i = 1; i <= (N - 1) / 2; ++i) sum = (sum + (i % q) * (dlog.log(i) % q)) % q;
    const bool by_exponent = is_power(r.merel_value, N, q);
    if (by_exponent != (sum == 0)) throw MismatchError("merel_report: exponent test and log-sum test disagree");
    r.log_sum[s] = sum;
    r.is_power[s] = by_exponent;
  }
  return r;
}

MerelReport merel_report(u64 N, u64 p, unsigned s_max) {
  return merel_report(N, p, s_max, build_dlog_table(N));
}

u64 GroupRingElement::augmentation() const {
  u64 acc = 0;
  for (u64 c : c_) acc = mod_.add(acc, c);
  return acc;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r(a.n_, a.mod_);
  const u64 N = a.n_;
  for (u64 i = 1; i < N; ++i) {
    u64 ai = a.c_[i - 1];
    if (ai == 0) continue;
    for (u64 j = 1; j < N; ++j) {
      u64 bj = b.c_[j - 1];
      if (bj == 0) continue;
      u64 k = i * j % N;
      r.c_[k - 1] = a.mod_.add(r.c_[k - 1], a.mod_.mul(ai, bj));
    }
  }
  return r;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r(a.n_, a.mod_);
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.mod_.add(a.c_[k], b.c_[k]);
  return r;
}

GroupRingElement zeta_element(u64 N, u64 p, unsigned s) {
  if (p <= 3) throw DomainError("zeta_element: p must exceed 3");
  require_divides(N, p, "zeta_element");
  Modulus m(p, s);
  const u64 invN = m.inv(m.reduce_u(N));
  const u64 invN2 = m.mul(invN, invN);
  const u64 inv6 = m.inv(6);
  GroupRingElement z(N, m);
  for (u64 i = 1; i < N; ++i) {
    u64 ii = m.reduce_u(i);
    u64 c = m.add(m.sub(m.mul(m.mul(ii, ii), invN2), m.mul(ii, invN)), inv6);
    z.set(i, c);
  }
  return z;
}

unsigned default_ord_cap(u64 N, u64 p) { return static_cast<unsigned>(ipow(p, tval(N, p)) + 1); }

namespace {

// Largest r < cap with y in ((x-1)^r) inside (Z/p^s)[x]/(x^P - 1), or
// capped at cap. y is a coefficient vector of length P.
OrdValue cyclic_order(const std::vector<u64>& y, const Modulus& m, unsigned cap) {
  const std::size_t P = y.size();
  std::vector<u64> gen(P, 0);  // (x-1)^r, r = 0 initially
  gen[0] = 1;
  for (unsigned r = 1; r <= cap; ++r) {
    // gen *= (x - 1) cyclically.
    std::vector<u64> next(P);
    for (std::size_t k = 0; k < P; ++k) next[k] = m.sub(gen[(k + P - 1) % P], gen[k]);
    gen.swap(next);
    ZmodMatrix cols(m, P, P);
    for (std::size_t k = 0; k < P; ++k)
      for (std::size_t i = 0; i < P; ++i) cols.at((i + k) % P, k) = gen[i];
    if (!HowellBasis(cols).contains(y)) return {r - 1, false};
  }
  return {cap, true};
}

}  // namespace

OrdResult augmentation_order(const GroupRingElement& x, unsigned cap, const DlogTable& dlog,
                             u64 full_path_limit) {
  const u64 N = x.N();
  const Modulus& m = x.modulus();
  const u64 P = ipow(m.p(), tval(N, m.p()));
  if (dlog.N() != N) throw DomainError("augmentation_order: dlog table for the wrong N");

  OrdResult res;
  std::vector<u64> proj(P, 0);
  for (u64 i = 1; i < N; ++i) {
    u64 k = dlog.log(i) % P;
    proj[k] = m.add(proj[k], x.coeff(i));
  }
  bool zero = std::all_of(proj.begin(), proj.end(), [](u64 c) { return c == 0; });
  if (zero) {
    res.degenerate = true;
    res.ord = {cap, true};
  } else {
    res.ord = cyclic_order(proj, m, cap);
  }

  if (N - 1 <= full_path_limit) {
    std::vector<u64> full(N - 1, 0);
    for (u64 i = 1; i < N; ++i) full[dlog.log(i)] = x.coeff(i);
    OrdValue f = cyclic_order(full, m, cap);
    if (!(f == res.ord)) throw MismatchError("ord_zeta: Sylow projection and full group ring disagree");
    res.full_path_checked = true;
  }
  return res;
}

OrdResult ord_zeta(u64 N, u64 p, unsigned s, unsigned cap, const DlogTable& dlog, u64 full_path_limit) {
  require_divides(N, p, "ord_zeta");
  return augmentation_order(zeta_element(N, p, s), cap, dlog, full_path_limit);
}

OrdResult ord_zeta(u64 N, u64 p, unsigned s, unsigned cap) {
  return ord_zeta(N, p, s, cap, build_dlog_table(N));
}

ZetaReport zeta_report(u64 N, u64 p, unsigned s_max, const DlogTable& dlog) {
  ZetaReport r;
  r.N = N;
  r.p = p;
  r.cap = default_ord_cap(N, p);
  for (unsigned s = 1; s <= s_max; ++s) {
    OrdResult o = ord_zeta(N, p, s, r.cap, dlog);
    r.ord[s] = o.ord;
    r.degenerate = r.degenerate || o.degenerate;
  }
  return r;
}

bool is_good_prime(u64 ell, u64 N, u64 p) {
  if (ell == N) throw DomainError("is_good_prime: ell must differ from N");
  if (ell % p == 1 % p) return false;
  return !is_power(ell % N, N, p);
}

std::vector<u64> good_primes(u64 N, u64 p, std::size_t count, u64 from, u64 bound) {
  std::vector<u64> out;
  for (u64 ell = std::max<u64>(from, 2); ell < bound && out.size() < count; ++ell) {
    if (ell == N || !is_prime(ell)) continue;
    if (is_good_prime(ell, N, p)) out.push_back(ell);
  }
  if (out.size() < count) throw NoGoodPrime("no good prime below the search bound");
  return out;
}

LecouturierResult lecouturier_identities(u64 N, u64 p, unsigned s, const DlogTable& dlog) {
  require_divides(N, p, "lecouturier_check");
  if (p <= 3) throw DomainError("lecouturier_check: p must exceed 3");
  if (s == 0 || s > tval(N, p)) throw DomainError("lecouturier_check: need 1 <= s <= v_p(N-1)");
  Modulus m(p, s);
  u64 s2 = 0, s1 = 0, s0 = 0, half = 0;
  for (u64 i = 1; i < N; ++i) {
    u64 l = m.reduce_u(dlog.log(i));
    u64 ii = m.reduce_u(i);
    u64 il = m.mul(ii, l);
    s0 = m.add(s0, l);
    s1 = m.add(s1, il);
    s2 = m.add(s2, m.mul(ii, il));
    if (i <= (N - 1) / 2) half = m.add(half, il);
  }
  const u64 minus_four_thirds = m.neg(m.mul(4, m.inv(3)));
  LecouturierResult r;
  r.main_identity = s2 == m.mul(minus_four_thirds, half);
  r.sum_log_zero = s0 == 0;
  r.sum_ilog_zero = s1 == 0;
  return r;
}

bool lecouturier_check(u64 N, u64 p, unsigned s, const DlogTable& dlog) {
  return lecouturier_identities(N, p, s, dlog).ok();
}

bool lecouturier_check(u64 N, u64 p, unsigned s) { return lecouturier_check(N, p, s, build_dlog_table(N)); }

}  // namespace eisenlab
