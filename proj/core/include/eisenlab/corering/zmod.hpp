#pragma once

#include <compare>
#include <optional>
#include <string>

#include "eisenlab/corering/arith.hpp"

namespace eisenlab {

/// A p-adic valuation read off an integer or a residue mod p^M.
///
/// Three distinct states: an exact finite value, a value known only to be
/// at least the working precision (the residue was 0 mod p^M), and infinity
/// (an exact integer zero). The capped state is never folded into a number.
class Valuation {
 public:
  enum class Kind { finite, at_least, infinite };

  static constexpr Valuation finite(unsigned v) { return Valuation(Kind::finite, v); }
  static constexpr Valuation at_least(unsigned cap) { return Valuation(Kind::at_least, cap); }
  static constexpr Valuation infinite() { return Valuation(Kind::infinite, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  /// The finite value, or the cap for at_least. Meaningless for infinite.
  constexpr unsigned value() const { return value_; }

  /// Smallest of two valuations. min(finite k, >=M) is only well defined
  /// when k < M, which holds for every residue read at precision M.
  static Valuation min(Valuation a, Valuation b);

  /// True when this valuation is certainly >= r.
  bool at_least_value(unsigned r) const;

  friend constexpr bool operator==(Valuation, Valuation) = default;

  /// "3", ">=6" or "inf".
  std::string to_string() const;

 private:
  constexpr Valuation(Kind k, unsigned v) : kind_(k), value_(v) {}
  Kind kind_;
  unsigned value_;
};

/// v_p of an exact integer; infinite for 0.
Valuation valuation_p(i64 x, u64 p);

/// The ring Z/p^M for a prime p > 3. Values are canonical representatives in
/// [0, p^M) stored in 64-bit words; p^M must stay below 2^62.
class Modulus {
 public:
  Modulus(u64 p, unsigned exponent);

  u64 p() const { return p_; }
  unsigned exponent() const { return exponent_; }
  u64 value() const { return q_; }

  u64 reduce(i64 x) const;
  u64 reduce_u(u64 x) const { return x % q_; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q_ - a; }
  u64 mul(u64 a, u64 b) const {
    if (small_) return (a * b) % q_;
    return static_cast<u64>((static_cast<u128>(a) * b) % q_);
  }
  u64 pow(u64 a, u64 e) const;
  bool is_unit(u64 a) const { return a % p_ != 0; }
  /// Inverse of a unit; throws DomainError otherwise.
  u64 inv(u64 a) const;
  /// p^k reduced mod p^M (0 when k >= M).
  u64 p_pow(unsigned k) const;
  /// v_p of a residue; at_least(M) for 0.
  Valuation valuation(u64 a) const;
  /// Representative in (-q/2, q/2].
  i64 centered(u64 a) const;

  /// The same prime at another precision.
  Modulus with_exponent(unsigned exponent) const { return Modulus(p_, exponent); }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.p_ == b.p_ && a.exponent_ == b.exponent_;
  }

 private:
  u64 p_;
  unsigned exponent_;
  u64 q_;
  bool small_;
};

/// A single residue carrying its modulus.
class ZmodElem {
 public:
  ZmodElem(Modulus m, i64 v) : mod_(m), value_(m.reduce(v)) {}

  const Modulus& modulus() const { return mod_; }
  u64 value() const { return value_; }
  bool is_unit() const { return mod_.is_unit(value_); }
  Valuation valuation() const { return mod_.valuation(value_); }
  ZmodElem inverse() const { return from_residue(mod_, mod_.inv(value_)); }

  friend ZmodElem operator+(const ZmodElem& a, const ZmodElem& b) {
    return from_residue(a.mod_, a.mod_.add(a.value_, b.value_));
  }
  friend ZmodElem operator-(const ZmodElem& a, const ZmodElem& b) {
    return from_residue(a.mod_, a.mod_.sub(a.value_, b.value_));
  }
  friend ZmodElem operator*(const ZmodElem& a, const ZmodElem& b) {
    return from_residue(a.mod_, a.mod_.mul(a.value_, b.value_));
  }
  friend bool operator==(const ZmodElem& a, const ZmodElem& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  static ZmodElem from_residue(const Modulus& m, u64 v) {
    ZmodElem z(m, 0);
    z.value_ = v;
    return z;
  }
  Modulus mod_;
  u64 value_;
};

}  // namespace eisenlab
