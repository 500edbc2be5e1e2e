#pragma once

#include "eisenlab/corering/matrix.hpp"
#include "eisenlab/corering/poly.hpp"

namespace eisenlab {

/// det(yI - A) over Z/p^M without any division (Berkowitz). O(n^4) ring
/// operations, dominated by the matrix-vector products r A^j c.
PadicPoly berkowitz_charpoly(const ZmodMatrix& a);

}  // namespace eisenlab
