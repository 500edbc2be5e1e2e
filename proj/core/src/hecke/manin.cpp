#include "eisenlab/hecke/manin.hpp"

#include <algorithm>
#include <numeric>

#include "eisenlab/error.hpp"

namespace eisenlab {

namespace {

i64 legendre(i64 a, u64 N) {
  u64 x = static_cast<u64>(((a % static_cast<i64>(N)) + static_cast<i64>(N)) % static_cast<i64>(N));
  if (x == 0) return 0;
  return powmod(x, (N - 1) / 2, N) == 1 ? 1 : -1;
}

// Union-find over symbols with a sign: x_i = sign[i] * x_parent[i].
struct SignedUnionFind {
  std::vector<std::size_t> parent;
  std::vector<int> sign;
  std::vector<bool> zero;  // meaningful on roots

  explicit SignedUnionFind(std::size_t n) : parent(n), sign(n, 1), zero(n, false) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<std::size_t, int> find(std::size_t i) {
    int s = 1;
    std::size_t r = i;
    while (parent[r] != r) {
      s *= sign[r];
      r = parent[r];
    }
    // Path compression with sign bookkeeping.
    std::size_t x = i;
    int sx = s;
    while (parent[x] != x) {
      std::size_t next = parent[x];
      int snext = sx * sign[x];
      parent[x] = r;
      sign[x] = sx;
      x = next;
      sx = snext;
    }
    return {r, s};
  }

  // Impose x_i = s * x_j.
  void relate(std::size_t i, std::size_t j, int s) {
    auto [ri, a] = find(i);
    auto [rj, b] = find(j);
    int rel = a * s * b;  // x_ri = rel * x_rj
    if (ri == rj) {
      if (rel == -1) zero[ri] = true;
      return;
    }
    parent[ri] = rj;
    sign[ri] = rel;
    zero[rj] = zero[rj] || zero[ri];
  }
};

}  // namespace

unsigned genus_x0(u64 N) {
  if (!is_prime(N)) throw DomainError("genus_x0: N must be prime");
  if (N == 2 || N == 3) return 0;
  i64 nu2 = 1 + legendre(-1, N);
  i64 nu3 = 1 + legendre(-3, N);
  i64 twelve_g = static_cast<i64>(N) + 1 - 3 * nu2 - 4 * nu3;
  return static_cast<unsigned>(twelve_g / 12);
}

std::size_t ManinSpace::symbol_index(i64 c, i64 d) const {
  const i64 n = static_cast<i64>(n_);
  u64 cc = static_cast<u64>(((c % n) + n) % n);
  u64 dd = static_cast<u64>(((d % n) + n) % n);
  if (dd != 0) return static_cast<std::size_t>(cc * inv_[dd] % n_);
  if (cc == 0) throw DomainError("ManinSpace: (0:0) is not a point of P^1");
  return static_cast<std::size_t>(n_);
}

std::pair<u64, u64> ManinSpace::symbol(std::size_t index) const {
  if (index == n_) return {1, 0};
  return {index, 1};
}

std::size_t ManinSpace::act(std::size_t x, const Mat2& g) const {
  auto [c, d] = symbol(x);
  const i64 n = static_cast<i64>(n_);
  i64 ci = static_cast<i64>(c), di = static_cast<i64>(d);
  i64 a = ((g[0] % n) + n) % n, b = ((g[1] % n) + n) % n, cp = ((g[2] % n) + n) % n, dp = ((g[3] % n) + n) % n;
  return symbol_index((ci * a + di * cp) % n, (ci * b + di * dp) % n);
}

ManinSpace::ManinSpace(u64 N, Modulus m, Sign sign) : n_(N), mod_(m), sign_(sign) {
  if (!is_prime(N) || N < 11) throw DomainError("ManinSpace: N must be a prime >= 11");
  inv_.assign(N, 0);
  for (u64 x = 1; x < N; ++x) inv_[x] = invmod(x, N);

  const std::size_t ns = N + 1;
  const Mat2 sigma{0, -1, 1, 0};
  const Mat2 tau{0, -1, 1, -1};
  const Mat2 eta{-1, 0, 0, 1};

  SignedUnionFind uf(ns);
  for (std::size_t x = 0; x < ns; ++x) {
    uf.relate(x, act(x, sigma), -1);
    if (sign_ == Sign::plus) uf.relate(x, act(x, eta), 1);
  }

  // Surviving classes.
  std::vector<long> class_of(ns, -1);
  std::vector<std::size_t> class_rep;
  for (std::size_t x = 0; x < ns; ++x) {
    auto [r, s] = uf.find(x);
    if (r == x && !uf.zero[r]) {
      class_of[x] = static_cast<long>(class_rep.size());
      class_rep.push_back(x);
    }
  }
  const std::size_t nc = class_rep.size();
  auto class_term = [&](std::size_t x) -> std::pair<long, int> {
    auto [r, s] = uf.find(x);
    if (uf.zero[r]) return {-1, 0};
    return {class_of[r], s};
  };

  // Three-term relations, one per tau-orbit.
  std::vector<bool> seen(ns, false);
  std::vector<std::vector<std::pair<std::size_t, i64>>> rels;
  for (std::size_t x = 0; x < ns; ++x) {
    if (seen[x]) continue;
    std::size_t y = act(x, tau), z = act(y, tau);
    seen[x] = seen[y] = seen[z] = true;
    std::vector<std::pair<std::size_t, i64>> rel;
    for (std::size_t w : {x, y, z}) {
      if (x == y && w != x) break;  // fixed point of tau: relation is 3x = 0
      auto [c, s] = class_term(w);
      if (c < 0) continue;
      auto it = std::find_if(rel.begin(), rel.end(), [&](auto& t) { return t.first == static_cast<std::size_t>(c); });
      if (it == rel.end()) rel.emplace_back(static_cast<std::size_t>(c), s);
      else it->second += s;
    }
    if (x == y) {
      for (auto& t : rel) t.second *= 3;
    }
    std::erase_if(rel, [](auto& t) { return t.second == 0; });
    if (!rel.empty()) rels.push_back(std::move(rel));
  }

  // Unit-pivot reduced echelon form of the relation matrix. Over Z_p with
  // p > 3 the quotient is free, so every pivot can be a unit.
  const std::size_t nr = rels.size();
  std::vector<u64> R(nr * nc, 0);
  for (std::size_t i = 0; i < nr; ++i)
    for (auto [c, v] : rels[i]) R[i * nc + c] = mod_.reduce(v);

  std::vector<long> pivot_row_of_col(nc, -1);
  std::vector<std::size_t> nz;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < nc && cur < nr; ++col) {
    std::size_t found = nr;
    for (std::size_t i = cur; i < nr; ++i) {
      if (mod_.is_unit(R[i * nc + col])) {
        found = i;
        break;
      }
    }
    if (found == nr) continue;
    if (found != cur) std::swap_ranges(R.begin() + found * nc, R.begin() + (found + 1) * nc, R.begin() + cur * nc);
    u64* pr = R.data() + cur * nc;
    u64 inv = mod_.inv(pr[col]);
    nz.clear();
    for (std::size_t j = 0; j < nc; ++j) {
      if (pr[j] != 0) {
        pr[j] = mod_.mul(pr[j], inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == cur) continue;
      u64* ri = R.data() + i * nc;
      u64 f = ri[col];
      if (f == 0) continue;
      for (std::size_t j : nz) ri[j] = mod_.sub(ri[j], mod_.mul(f, pr[j]));
    }
    pivot_row_of_col[col] = static_cast<long>(cur);
    ++cur;
  }
  for (std::size_t i = cur; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (R[i * nc + j] != 0) throw DomainError("ManinSpace: relation module has non-unit elementary divisors");
    }
  }

  std::vector<long> free_index(nc, -1);
  for (std::size_t c = 0; c < nc; ++c) {
    if (pivot_row_of_col[c] < 0) {
      free_index[c] = static_cast<long>(basis_reps_.size());
      basis_reps_.push_back(class_rep[c]);
    }
  }
  const std::size_t dim = basis_reps_.size();

  coords_.assign(ns * dim, 0);
  for (std::size_t x = 0; x < ns; ++x) {
    auto [c, s] = class_term(x);
    if (c < 0) continue;
    u64* out = coords_.data() + x * dim;
    if (free_index[c] >= 0) {
      out[free_index[c]] = s > 0 ? 1 : mod_.neg(1);
      continue;
    }
    const u64* row = R.data() + static_cast<std::size_t>(pivot_row_of_col[c]) * nc;
    for (std::size_t j = 0; j < nc; ++j) {
      if (row[j] == 0 || free_index[j] < 0) continue;
      u64 v = mod_.neg(row[j]);
      out[free_index[j]] = s > 0 ? v : mod_.neg(v);
    }
  }

  // Boundary: (0:1) -> [inf] - [0], (1:0) -> [0] - [inf]; other symbols -> 0.
  boundary_.assign(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t x = basis_reps_[j];
    if (x == 0) boundary_[j] = 1;
    else if (x == N) boundary_[j] = mod_.neg(1);
  }
  // Cross-check against the coordinates of the two cusp-carrying symbols:
  // phi(x) computed from coordinates must reproduce the direct value.
  auto phi_of = [&](std::size_t x) {
    u64 acc = 0;
    auto v = coordinates(x);
    for (std::size_t j = 0; j < dim; ++j) acc = mod_.add(acc, mod_.mul(v[j], boundary_[j]));
    return acc;
  };
  if (phi_of(0) != 1 || phi_of(N) != mod_.neg(1)) throw MismatchError("ManinSpace: boundary map is not well defined");

  const unsigned g = genus_x0(N);
  const std::size_t expected = sign_ == Sign::plus ? g + 1 : 2 * g + 1;
  if (dim != expected) throw MismatchError("ManinSpace: dimension does not match the genus formula");
}

std::vector<Mat2> heilbronn_merel(u64 ell) {
  std::vector<Mat2> out;
  const i64 l = static_cast<i64>(ell);
  for (i64 a = 1; a <= l; ++a) {
    for (i64 d = 1; d <= l; ++d) {
      i64 bc = a * d - l;
      if (bc < 0) continue;
      if (bc == 0) {
        for (i64 c = 0; c < d; ++c) out.push_back({a, 0, c, d});
        for (i64 b = 1; b < a; ++b) out.push_back({a, b, 0, d});
        continue;
      }
      for (i64 b = 1; b < a; ++b) {
        if (bc % b != 0) continue;
        i64 c = bc / b;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

ZmodMatrix hecke_matrix_full(const ManinSpace& space, u64 ell) {
  if (ell == space.N()) throw DomainError("hecke_matrix: ell must differ from N");
  if (!is_prime(ell)) throw DomainError("hecke_matrix: ell must be prime");
  const Modulus& m = space.modulus();
  const std::size_t dim = space.dimension();
  const auto hs = heilbronn_merel(ell);
  ZmodMatrix t(m, dim, dim);
  std::vector<u64> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(col.begin(), col.end(), 0);
    std::size_t x = space.basis_symbol(j);
    for (const Mat2& h : hs) {
      auto v = space.coordinates(space.act(x, h));
      for (std::size_t i = 0; i < dim; ++i) {
        if (v[i] != 0) col[i] = m.add(col[i], v[i]);
      }
    }
    for (std::size_t i = 0; i < dim; ++i) t.at(i, j) = col[i];
  }
  // phi o T = (l + 1) phi.
  const auto& phi = space.boundary();
  const u64 lp1 = m.reduce_u(ell + 1);
  for (std::size_t j = 0; j < dim; ++j) {
    u64 acc = 0;
    for (std::size_t i = 0; i < dim; ++i) acc = m.add(acc, m.mul(phi[i], t.at(i, j)));
    if (acc != m.mul(lp1, phi[j])) throw MismatchError("hecke_matrix: boundary eigenvalue is not l+1");
  }
  return t;
}

CuspidalBasis cuspidal_basis(const ManinSpace& space) {
  const auto& phi = space.boundary();
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (space.modulus().is_unit(phi[j])) return {j};
  }
  throw MismatchError("cuspidal_basis: boundary map vanishes mod p");
}

ZmodMatrix restrict_to_cuspidal(const ManinSpace& space, const CuspidalBasis& cb, const ZmodMatrix& t) {
  const Modulus& m = space.modulus();
  const auto& phi = space.boundary();
  const std::size_t dim = space.dimension();
  const std::size_t j0 = cb.pivot;
  const u64 inv0 = m.inv(phi[j0]);
  ZmodMatrix out(m, dim - 1, dim - 1);
  std::size_t jj = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    if (j == j0) continue;
    // T s_j = T b_j - phi(b_j)/phi(b_j0) T b_j0; read coordinates off b_i, i != j0.
    u64 c = m.mul(phi[j], inv0);
    std::size_t ii = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == j0) continue;
      out.at(ii, jj) = m.sub(t.at(i, j), m.mul(c, t.at(i, j0)));
      ++ii;
    }
    ++jj;
  }
  return out;
}

ZmodMatrix hecke_matrix(const ManinSpace& space, u64 ell) {
  return restrict_to_cuspidal(space, cuspidal_basis(space), hecke_matrix_full(space, ell));
}

}  // namespace eisenlab
