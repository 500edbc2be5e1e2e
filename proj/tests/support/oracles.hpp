#pragma once

// Slow, independent reference computations used only by the tests. Nothing
// here calls into the library's linear algebra or polynomial code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// det(yI - A) over Z by the Leibniz formula, coefficients low to high.
/// Only sensible for n <= 6 with small entries.
inline std::vector<i64> integer_charpoly(const std::vector<std::vector<i64>>& a) {
  const std::size_t n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<i64> total(n + 1, 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    // Product of entries (y*delta - a)(i, perm[i]) as a polynomial in y.
    std::vector<i64> prod{1};
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = static_cast<std::size_t>(perm[i]);
      std::vector<i64> next(prod.size() + 1, 0);
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k] -= prod[k] * a[i][j];
        if (i == j) next[k + 1] += prod[k];
      }
      prod = std::move(next);
    }
    const i64 sign = inversions % 2 ? -1 : 1;
    for (std::size_t k = 0; k < prod.size() && k <= n; ++k) total[k] += sign * prod[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline u64 reduce(i64 x, u64 q) {
  i64 r = x % static_cast<i64>(q);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(q) : r);
}

/// Truncated polynomial ring (Z/q)[eps]/(eps^{len}).
struct Truncated {
  u64 q;
  std::size_t len;
  std::vector<u64> mul(const std::vector<u64>& x, const std::vector<u64>& y) const {
    std::vector<u64> z(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; i + j < len; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % q;
    }
    return z;
  }
  /// g(w) with g given by integer coefficients, low to high (Horner).
  std::vector<u64> eval(const std::vector<i64>& g, const std::vector<u64>& w) const {
    std::vector<u64> acc(len, 0);
    for (std::size_t k = g.size(); k-- > 0;) {
      acc = mul(acc, w);
      acc[0] = (acc[0] + reduce(g[k], q)) % q;
    }
    return acc;
  }
};

/// Whether a ring map Z[x]/(g) -> (Z/p^r)[eps]/(eps^{i+1}) sending x to a
/// generator of the ideal (eps) exists: x -> w_1 eps + ... + w_i eps^i with
/// w_1 a unit and g(w) = 0. Any such map is onto. Depth-first over w_k,
/// pruning on the eps^k coefficient, which only involves w_1..w_k.
inline bool surjection_exists(const std::vector<i64>& g, u64 p, unsigned r, unsigned i) {
  u64 q = 1;
  for (unsigned k = 0; k < r; ++k) q *= p;
  if (q == 1) return true;
  std::vector<u64> w(i + 1, 0);
  auto prefix_ok = [&](std::size_t k) {
    const Truncated cut{q, k + 1};
    std::vector<u64> wk(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k + 1));
    auto v = cut.eval(g, wk);
    return std::all_of(v.begin(), v.end(), [](u64 c) { return c == 0; });
  };
  if (!prefix_ok(0)) return false;  // g(0) = 0 mod p^r
  if (i == 0) return true;
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k > i) return true;
    for (u64 c = 0; c < q; ++c) {
      if (k == 1 && c % p == 0) continue;
      w[k] = c;
      if (prefix_ok(k) && self(self, k + 1)) return true;
    }
    w[k] = 0;
    return false;
  };
  return dfs(dfs, 1);
}

/// t_i for i = 0..deg g: the largest r <= cap admitting such a map; cap
/// itself means "at least cap".
inline std::vector<unsigned> brute_force_t(const std::vector<i64>& g, u64 p, unsigned cap) {
  std::vector<unsigned> t;
  for (unsigned i = 0; i < g.size(); ++i) {
    unsigned best = 0;
    for (unsigned r = cap; r >= 1; --r) {
      if (surjection_exists(g, p, r, i)) {
        best = r;
        break;
      }
    }
    t.push_back(best);
  }
  return t;
}

}  // namespace oracle
