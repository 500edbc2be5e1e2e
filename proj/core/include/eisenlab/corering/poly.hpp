#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eisenlab/corering/zmod.hpp"

namespace eisenlab {

/// Polynomial over Z/p^M, constant term first. Leading zeros are trimmed, so
/// the zero polynomial has no coefficients and degree -1.
class PadicPoly {
 public:
  explicit PadicPoly(Modulus m) : mod_(m) {}
  PadicPoly(Modulus m, std::vector<u64> coeffs);
  /// Coefficients given as signed integers, reduced mod p^M.
  static PadicPoly from_integers(Modulus m, std::span<const i64> coeffs);
  static PadicPoly constant(Modulus m, u64 c);
  /// c * y^k
  static PadicPoly monomial(Modulus m, unsigned k, u64 c = 1);

  const Modulus& modulus() const { return mod_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<u64>& coeffs() const { return c_; }

  /// f mod p^k, computed by reducing every coefficient (k <= M).
  PadicPoly reduce(unsigned k) const;
  /// The same coefficients read at precision k (k <= M). Lower precision only.
  PadicPoly with_exponent(unsigned k) const;
  /// Lifts the canonical representatives to precision k >= M.
  PadicPoly lift_to(unsigned k) const;

  u64 evaluate(u64 x) const;
  PadicPoly derivative() const;
  /// Multiplies by y^k.
  PadicPoly shift_up(unsigned k) const;
  /// Divides by y^k; the k lowest coefficients must be zero.
  PadicPoly shift_down(unsigned k) const;
  PadicPoly scaled(u64 s) const;
  /// Truncation mod y^k.
  PadicPoly truncated(unsigned k) const;

  /// Quotient and remainder by a monic divisor.
  std::pair<PadicPoly, PadicPoly> divmod(const PadicPoly& monic_divisor) const;

  /// Multiplicity of y dividing f mod p, i.e. the index of the first unit coefficient.
  /// Returns degree+1 style sentinel -1 when f == 0 mod p.
  int unit_index() const;

  friend PadicPoly operator+(const PadicPoly& a, const PadicPoly& b);
  friend PadicPoly operator-(const PadicPoly& a, const PadicPoly& b);
  friend PadicPoly operator*(const PadicPoly& a, const PadicPoly& b);
  friend bool operator==(const PadicPoly& a, const PadicPoly& b) {
    return a.mod_ == b.mod_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void trim();
  Modulus mod_;
  std::vector<u64> c_;
};

namespace fp {

// Helpers over the residue field; every argument must have exponent 1.

std::pair<PadicPoly, PadicPoly> divmod(const PadicPoly& a, const PadicPoly& b);
PadicPoly make_monic(const PadicPoly& a);
PadicPoly gcd(PadicPoly a, PadicPoly b);
/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct Xgcd {
  PadicPoly g, s, t;
};
Xgcd xgcd(const PadicPoly& a, const PadicPoly& b);
/// base^e mod m (m monic).
PadicPoly powmod(const PadicPoly& base, u64 e, const PadicPoly& m);

/// Degrees and multiplicities of the irreducible factors of a nonzero
/// polynomial whose degree is below p; empty when deg >= p (shape unknown).
struct FactorShape {
  unsigned degree;
  unsigned multiplicity;
};
std::vector<FactorShape> factor_shape(const PadicPoly& a);

}  // namespace fp

}  // namespace eisenlab
