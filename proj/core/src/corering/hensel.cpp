#include "eisenlab/corering/hensel.hpp"

#include "eisenlab/error.hpp"

namespace eisenlab {

DistinguishedSplit hensel_split_distinguished(const PadicPoly& q) {
  if (!q.is_monic()) throw DomainError("hensel_split_distinguished: Q must be monic");
  const Modulus& m = q.modulus();
  const PadicPoly one = PadicPoly::constant(m, 1);

  const int e_signed = q.unit_index();
  const unsigned e = static_cast<unsigned>(e_signed);  // Q monic, so some coefficient is a unit
  if (e == 0) return {one, q};
  if (static_cast<int>(e) == q.degree()) return {q, one};

  // Mod-p factorisation and Bezout relation s*ubar + t*y^e = 1.
  const PadicPoly qbar = q.with_exponent(1);
  const Modulus mp = qbar.modulus();
  PadicPoly ubar = qbar.shift_down(e);
  PadicPoly fbar = PadicPoly::monomial(mp, e);
  auto bez = fp::xgcd(ubar, fbar);
  if (bez.g.degree() != 0) throw MismatchError("hensel_split_distinguished: mod-p factors not coprime");

  // Lift every residue to Z/p^M by its canonical representative and iterate
  // the quadratic step; each round doubles the p-adic precision of
  // Q = u*f and s*u + t*f = 1.
  PadicPoly u = ubar.lift_to(m.exponent());
  PadicPoly f = fbar.lift_to(m.exponent());
  PadicPoly s = bez.s.lift_to(m.exponent());
  PadicPoly t = bez.t.lift_to(m.exponent());

  for (unsigned prec = 1; prec < m.exponent(); prec *= 2) {
    PadicPoly err = q - u * f;
    auto [qq, r] = (s * err).divmod(f);
    PadicPoly u2 = u + t * err + qq * u;
    PadicPoly f2 = f + r;
    PadicPoly b = s * u2 + t * f2 - one;
    auto [c, d] = (s * b).divmod(f2);
    s = s - d;
    t = t - t * b - c * u2;
    u = std::move(u2);
    f = std::move(f2);
  }

  if (!(f * u == q)) throw MismatchError("hensel_split_distinguished: f*u != Q");
  if (!f.is_monic() || f.degree() != static_cast<int>(e) || f.unit_index() != static_cast<int>(e))
    throw MismatchError("hensel_split_distinguished: f is not distinguished of degree e");
  if (!m.is_unit(u.coeff(0))) throw MismatchError("hensel_split_distinguished: u(0) is not a unit");
  return {std::move(f), std::move(u)};
}

}  // namespace eisenlab
