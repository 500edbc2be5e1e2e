#include "eisenlab/corering/zmod.hpp"

#include "eisenlab/error.hpp"

namespace eisenlab {

Valuation Valuation::min(Valuation a, Valuation b) {
  if (a.kind_ == Kind::infinite) return b;
  if (b.kind_ == Kind::infinite) return a;
  if (a.kind_ == Kind::finite && b.kind_ == Kind::finite) return a.value_ <= b.value_ ? a : b;
  if (a.kind_ == Kind::finite) return a;
  if (b.kind_ == Kind::finite) return b;
  return a.value_ <= b.value_ ? a : b;
}

bool Valuation::at_least_value(unsigned r) const {
  switch (kind_) {
    case Kind::infinite:
      return true;
    case Kind::finite:
    case Kind::at_least:
      return value_ >= r;
  }
  return false;
}

std::string Valuation::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return std::to_string(value_);
    case Kind::at_least:
      return ">=" + std::to_string(value_);
    case Kind::infinite:
      return "inf";
  }
  return "?";
}

Valuation valuation_p(i64 x, u64 p) {
  if (p < 2 || !is_prime(p)) throw DomainError("valuation_p: p must be prime");
  if (x == 0) return Valuation::infinite();
  u64 a = x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x);
  unsigned k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return Valuation::finite(k);
}

Modulus::Modulus(u64 p, unsigned exponent) : p_(p), exponent_(exponent), q_(1) {
  if (!is_prime(p) || p <= 3) throw DomainError("Modulus: p must be a prime > 3");
  if (exponent == 0) throw DomainError("Modulus: exponent must be >= 1");
  for (unsigned i = 0; i < exponent; ++i) {
    if (q_ > (u64{1} << 62) / p) throw DomainError("Modulus: p^M does not fit a machine word");
    q_ *= p;
  }
  small_ = q_ < (u64{1} << 32);
}

u64 Modulus::reduce(i64 x) const {
  i64 r = x % static_cast<i64>(q_);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(q_) : r);
}

u64 Modulus::pow(u64 a, u64 e) const {
  u64 r = 1 % q_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Modulus::inv(u64 a) const {
  if (!is_unit(a)) throw DomainError("Modulus::inv: residue is not a unit");
  return invmod(a, q_);
}

u64 Modulus::p_pow(unsigned k) const {
  if (k >= exponent_) return 0;
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p_;
  return r;
}

Valuation Modulus::valuation(u64 a) const {
  a %= q_;
  if (a == 0) return Valuation::at_least(exponent_);
  unsigned k = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++k;
  }
  return Valuation::finite(k);
}

i64 Modulus::centered(u64 a) const {
  a %= q_;
  return a > q_ / 2 ? static_cast<i64>(a) - static_cast<i64>(q_) : static_cast<i64>(a);
}

}  // namespace eisenlab
