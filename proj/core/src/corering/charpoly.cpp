#include "eisenlab/corering/charpoly.hpp"

#include <algorithm>

#include "eisenlab/error.hpp"

namespace eisenlab {

PadicPoly berkowitz_charpoly(const ZmodMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DomainError("berkowitz_charpoly: need a nonempty square matrix");
  const Modulus& m = a.modulus();
  const std::size_t n = a.rows();

  // poly holds the coefficients of det(yI - A_k), highest degree first,
  // where A_k is the leading k x k block.
  std::vector<u64> poly{1, m.neg(a.at(0, 0))};
  std::vector<u64> toeplitz, cur, next, col;

  for (std::size_t k = 1; k < n; ++k) {
    // A_{k+1} = [[A_k, c], [r, a_kk]] with c = A[0..k, k], r = A[k, 0..k].
    col.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) col[i] = a.at(i, k);
    const u64* r = &a.row(k)[0];

    toeplitz.assign(k + 2, 0);
    toeplitz[0] = 1;
    toeplitz[1] = m.neg(a.at(k, k));
    cur = col;
    for (std::size_t j = 0; j < k; ++j) {
      toeplitz[j + 2] = m.neg(dot_mod(m, r, cur.data(), k));
      if (j + 1 == k) break;
      next.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) next[i] = dot_mod(m, &a.row(i)[0], cur.data(), k);
      cur.swap(next);
    }

    // New coefficients: lower-triangular Toeplitz (k+2) x (k+1) times poly.
    std::vector<u64> out(k + 2, 0);
    for (std::size_t i = 0; i < k + 2; ++i) {
      u128 acc = 0;
      std::size_t jmax = std::min(i, k);
      for (std::size_t j = 0; j <= jmax; ++j) {
        acc += static_cast<u128>(toeplitz[i - j]) * poly[j];
        if ((j & 7) == 7) acc %= m.value();
      }
      out[i] = static_cast<u64>(acc % m.value());
    }
    poly.swap(out);
  }

  std::reverse(poly.begin(), poly.end());
  return PadicPoly(m, std::move(poly));
}

}  // namespace eisenlab
