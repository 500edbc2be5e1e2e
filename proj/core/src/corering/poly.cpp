#include "eisenlab/corering/poly.hpp"

#include <algorithm>
#include <sstream>

#include "eisenlab/error.hpp"

namespace eisenlab {

PadicPoly::PadicPoly(Modulus m, std::vector<u64> coeffs) : mod_(m), c_(std::move(coeffs)) {
  for (auto& x : c_) x = mod_.reduce_u(x);
  trim();
}

PadicPoly PadicPoly::from_integers(Modulus m, std::span<const i64> coeffs) {
  std::vector<u64> c;
  c.reserve(coeffs.size());
  for (i64 x : coeffs) c.push_back(m.reduce(x));
  return PadicPoly(m, std::move(c));
}

PadicPoly PadicPoly::constant(Modulus m, u64 c) { return PadicPoly(m, {c}); }

PadicPoly PadicPoly::monomial(Modulus m, unsigned k, u64 c) {
  std::vector<u64> v(k + 1, 0);
  v[k] = c;
  return PadicPoly(m, std::move(v));
}

void PadicPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PadicPoly PadicPoly::reduce(unsigned k) const { return with_exponent(k); }

PadicPoly PadicPoly::with_exponent(unsigned k) const {
  if (k > mod_.exponent()) throw DomainError("PadicPoly::with_exponent: cannot raise precision");
  Modulus m = mod_.with_exponent(k);
  return PadicPoly(m, c_);
}

PadicPoly PadicPoly::lift_to(unsigned k) const {
  if (k < mod_.exponent()) throw DomainError("PadicPoly::lift_to: cannot lower precision");
  return PadicPoly(mod_.with_exponent(k), c_);
}

u64 PadicPoly::evaluate(u64 x) const {
  u64 acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = mod_.add(mod_.mul(acc, x), c_[i]);
  return acc;
}

PadicPoly PadicPoly::derivative() const {
  std::vector<u64> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mod_.mul(c_[i], mod_.reduce_u(i)));
  return PadicPoly(mod_, std::move(d));
}

PadicPoly PadicPoly::shift_up(unsigned k) const {
  if (is_zero()) return *this;
  std::vector<u64> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return PadicPoly(mod_, std::move(v));
}

PadicPoly PadicPoly::shift_down(unsigned k) const {
  for (unsigned i = 0; i < k && i < c_.size(); ++i) {
    if (c_[i] != 0) throw DomainError("PadicPoly::shift_down: low coefficients are not zero");
  }
  if (k >= c_.size()) return PadicPoly(mod_);
  return PadicPoly(mod_, std::vector<u64>(c_.begin() + k, c_.end()));
}

PadicPoly PadicPoly::scaled(u64 s) const {
  std::vector<u64> v(c_);
  for (auto& x : v) x = mod_.mul(x, s);
  return PadicPoly(mod_, std::move(v));
}

PadicPoly PadicPoly::truncated(unsigned k) const {
  if (k >= c_.size()) return *this;
  return PadicPoly(mod_, std::vector<u64>(c_.begin(), c_.begin() + k));
}

std::pair<PadicPoly, PadicPoly> PadicPoly::divmod(const PadicPoly& d) const {
  if (!d.is_monic()) throw DomainError("PadicPoly::divmod: divisor must be monic");
  std::vector<u64> r(c_);
  const std::size_t dd = d.c_.size() - 1;
  if (r.size() <= dd) return {PadicPoly(mod_), *this};
  std::vector<u64> q(r.size() - dd, 0);
  for (std::size_t i = r.size(); i-- > dd;) {
    u64 lead = r[i];
    if (lead == 0) continue;
    q[i - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      r[i - dd + j] = mod_.sub(r[i - dd + j], mod_.mul(lead, d.c_[j]));
    }
  }
  r.resize(dd);
  return {PadicPoly(mod_, std::move(q)), PadicPoly(mod_, std::move(r))};
}

int PadicPoly::unit_index() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (mod_.is_unit(c_[i])) return static_cast<int>(i);
  }
  return -1;
}

PadicPoly operator+(const PadicPoly& a, const PadicPoly& b) {
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.mod_.add(a.coeff(i), b.coeff(i));
  return PadicPoly(a.mod_, std::move(v));
}

PadicPoly operator-(const PadicPoly& a, const PadicPoly& b) {
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.mod_.sub(a.coeff(i), b.coeff(i));
  return PadicPoly(a.mod_, std::move(v));
}

PadicPoly operator*(const PadicPoly& a, const PadicPoly& b) {
  if (a.is_zero() || b.is_zero()) return PadicPoly(a.mod_);
  std::vector<u64> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = a.mod_.add(v[i + j], a.mod_.mul(a.c_[i], b.c_[j]));
    }
  }
  return PadicPoly(a.mod_, std::move(v));
}

std::string PadicPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
      continue;
    }
    if (c_[i] != 1) os << c_[i] << "*";
    os << "y";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace fp {

namespace {
void require_field(const PadicPoly& a) {
  if (a.modulus().exponent() != 1) throw DomainError("fp: polynomial must be over F_p");
}
}  // namespace

PadicPoly make_monic(const PadicPoly& a) {
  require_field(a);
  if (a.is_zero()) return a;
  return a.scaled(a.modulus().inv(a.leading()));
}

std::pair<PadicPoly, PadicPoly> divmod(const PadicPoly& a, const PadicPoly& b) {
  require_field(a);
  if (b.is_zero()) throw DomainError("fp::divmod: division by zero");
  const Modulus& m = a.modulus();
  u64 li = m.inv(b.leading());
  auto [q, r] = a.divmod(b.scaled(li));
  return {q.scaled(li), r};
}

PadicPoly gcd(PadicPoly a, PadicPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Xgcd xgcd(const PadicPoly& a, const PadicPoly& b) {
  const Modulus& m = a.modulus();
  PadicPoly r0 = a, r1 = b;
  PadicPoly s0 = PadicPoly::constant(m, 1), s1(m);
  PadicPoly t0(m), t1 = PadicPoly::constant(m, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PadicPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PadicPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  u64 li = m.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

PadicPoly powmod(const PadicPoly& base, u64 e, const PadicPoly& mod) {
  const Modulus& m = base.modulus();
  PadicPoly result = divmod(PadicPoly::constant(m, 1), mod).second;
  PadicPoly b = divmod(base, mod).second;
  while (e > 0) {
    if (e & 1) result = divmod(result * b, mod).second;
    b = divmod(b * b, mod).second;
    e >>= 1;
  }
  return result;
}

namespace {

// Distinct-degree factorization of a squarefree monic polynomial: degree of
// each irreducible factor.
std::vector<unsigned> distinct_degrees(PadicPoly f) {
  const Modulus& m = f.modulus();
  std::vector<unsigned> out;
  PadicPoly x = PadicPoly::monomial(m, 1);
  PadicPoly h = x;
  for (unsigned d = 1; f.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, m.p(), f);
    PadicPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / static_cast<int>(d); ++k) out.push_back(d);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.push_back(static_cast<unsigned>(f.degree()));
  return out;
}

}  // namespace

std::vector<FactorShape> factor_shape(const PadicPoly& a) {
  require_field(a);
  if (a.is_zero()) throw DomainError("fp::factor_shape: zero polynomial");
  if (static_cast<u64>(a.degree()) >= a.modulus().p()) return {};
  // Yun's squarefree decomposition; valid because deg < p.
  std::vector<FactorShape> out;
  PadicPoly f = make_monic(a);
  if (f.degree() == 0) return out;
  PadicPoly d = f.derivative();
  PadicPoly g = gcd(f, d);
  PadicPoly b = divmod(f, g).first;
  PadicPoly c = divmod(d, g).first;
  PadicPoly dd = c - b.derivative();
  unsigned mult = 1;
  while (b.degree() > 0) {
    PadicPoly h = gcd(b, dd);
    if (h.degree() > 0) {
      for (unsigned deg : distinct_degrees(h)) out.push_back({deg, mult});
    }
    b = divmod(b, h).first;
    c = divmod(dd, h).first;
    dd = c - b.derivative();
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const FactorShape& x, const FactorShape& y) {
    return x.degree * x.multiplicity < y.degree * y.multiplicity ||
           (x.degree * x.multiplicity == y.degree * y.multiplicity && x.multiplicity < y.multiplicity);
  });
  return out;
}

}  // namespace fp

}  // namespace eisenlab
