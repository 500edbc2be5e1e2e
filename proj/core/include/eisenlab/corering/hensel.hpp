#pragma once

#include "eisenlab/corering/poly.hpp"

namespace eisenlab {

struct DistinguishedSplit {
  PadicPoly f;  // monic, f == y^e (mod p)
  PadicPoly u;  // monic, u(0) a unit
};

/// Splits a monic Q over Z/p^M as Q = f * u, where f collects the roots of
/// positive valuation. Quadratic Hensel lifting from Q mod p = y^e * ubar.
/// The three defining properties are checked before returning.
DistinguishedSplit hensel_split_distinguished(const PadicPoly& q);

}  // namespace eisenlab
