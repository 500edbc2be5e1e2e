#include "eisenlab/massey/massey.hpp"

#include <functional>

#include "eisenlab/error.hpp"

namespace eisenlab::massey {

namespace {

ZmodMatrix matrix_value(const Modulus& m, const Cochain& c, std::size_t cell, std::size_t n) {
  ZmodMatrix x(m, n, n);
  auto v = c.value(cell);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) x.at(s, t) = v[s * n + t];
  return x;
}

void require_one_cochain(const FiniteGroup& g, const CoeffModule& v, const Cochain& c) {
  if (c.degree() != 1 || c.group_order() != g.order() || c.rank() != v.rank())
    throw DomainError("expected a 1-cochain on this group and module");
}

// Odometer over every table of a 1-cochain with values in (Z/p^s)^k.
template <typename Visit>
bool for_each_table(const FiniteGroup& g, const CoeffModule& v, Visit&& visit) {
  constexpr double limit = 2e6;
  double count = 1;
  for (std::size_t i = 0; i < g.order() * v.rank(); ++i) count *= static_cast<double>(v.modulus().value());
  if (count > limit) throw DomainError("brute force: cochain space too large to enumerate");
  Cochain c(g.order(), v.rank(), 1);
  auto& t = c.table();
  const u64 q = v.modulus().value();
  while (true) {
    if (visit(c)) return true;
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == q) t[i++] = 0;
    if (i == t.size()) return false;
  }
}

}  // namespace

Cochain power_law_rhs(const FiniteGroup& g, const CoeffModule& v, const std::vector<Cochain>& chain,
                      std::size_t i) {
  if (i < 1 || i > chain.size() + 1) throw DomainError("power_law_rhs: index out of range");
  Cochain sum(g.order(), v.rank(), 2);
  for (std::size_t j = 1; j < i; ++j) sum = add(v.modulus(), sum, cup(g, v, chain[j - 1], chain[i - j - 1]));
  return sum;
}

bool satisfies_law(const FiniteGroup& g, const CoeffModule& v, const DefiningSystem& d) {
  if (d.chain.empty()) return false;
  for (const Cochain& m : d.chain) require_one_cochain(g, v, m);
  for (std::size_t i = 1; i <= d.chain.size(); ++i)
    if (!(coboundary(g, v, d.chain[i - 1]) == power_law_rhs(g, v, d.chain, i))) return false;
  return true;
}

Cochain massey_power(const FiniteGroup& g, const CoeffModule& v, const DefiningSystem& d) {
  if (!satisfies_law(g, v, d)) throw InvalidDefiningSystem("massey_power: defining-system law fails");
  Cochain c = power_law_rhs(g, v, d.chain, d.power());
  if (!coboundary(g, v, c).is_zero()) throw MismatchError("massey_power: c(D) is not a cocycle");
  return c;
}

std::optional<DefiningSystem> find_defining_system(const CoboundarySolver& solver, const Cochain& a,
                                                   std::size_t length, std::size_t cocycle_limit) {
  const FiniteGroup& g = solver.group();
  const CoeffModule& v = solver.module();
  require_one_cochain(g, v, a);
  if (length < 1) throw DomainError("find_defining_system: length must be >= 1");
  if (!coboundary(g, v, a).is_zero()) throw InvalidDefiningSystem("find_defining_system: a is not a cocycle");
  const std::vector<Cochain> z1 = length > 2 ? solver.all_cocycles(cocycle_limit) : std::vector<Cochain>{};

  DefiningSystem d{{a}};
  // The last level only needs one primitive; earlier ones branch over Z^1
  // because the choice of m_i changes whether later levels are solvable.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i > length) return true;
    auto x = solver.primitive(power_law_rhs(g, v, d.chain, i));
    if (!x) return false;
    if (i == length) {
      d.chain.push_back(std::move(*x));
      return true;
    }
    for (const Cochain& z : z1) {
      d.chain.push_back(add(v.modulus(), *x, z));
      if (search(i + 1)) return true;
      d.chain.pop_back();
    }
    return false;
  };
  if (!search(2)) return std::nullopt;
  return d;
}

bool massey_power_vanishes(const CoboundarySolver& solver, const Cochain& a, std::size_t k,
                           std::size_t cocycle_limit) {
  if (k < 2) throw DomainError("massey_power_vanishes: k must be >= 2");
  return find_defining_system(solver, a, k, cocycle_limit).has_value();
}

bool massey_power_vanishes_brute_force(const FiniteGroup& g, const CoeffModule& v, const Cochain& a,
                                       std::size_t k) {
  require_one_cochain(g, v, a);
  if (k < 2) throw DomainError("massey_power_vanishes_brute_force: k must be >= 2");
  if (!coboundary(g, v, a).is_zero()) throw InvalidDefiningSystem("a is not a cocycle");
  std::vector<Cochain> chain{a};
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    const Cochain rhs = power_law_rhs(g, v, chain, i);
    return for_each_table(g, v, [&](const Cochain& c) {
      if (!(coboundary(g, v, c) == rhs)) return false;
      if (i == k) return true;
      chain.push_back(c);
      bool found = search(i + 1);
      chain.pop_back();
      return found;
    });
  };
  return search(2);
}

// ---------------------------------------------------------------------------

void ProductSystem::set(std::size_t i, std::size_t j, Cochain c) {
  if (i < 1 || i > j || j > n_ || (i == 1 && j == n_)) throw DomainError("ProductSystem: index out of range");
  entries_.insert_or_assign({i, j}, std::move(c));
}

const Cochain& ProductSystem::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  if (it == entries_.end()) throw DomainError("ProductSystem: missing entry");
  return it->second;
}

ProductSystem ProductSystem::from_power(const DefiningSystem& d) {
  const std::size_t n = d.power();
  ProductSystem s(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      if (!(i == 1 && j == n)) s.set(i, j, d.chain[j - i]);
  return s;
}

Cochain product_law_rhs(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d, std::size_t i,
                        std::size_t j) {
  Cochain sum(g.order(), v.rank(), 2);
  for (std::size_t k = i; k < j; ++k) sum = add(v.modulus(), sum, cup(g, v, d.at(i, k), d.at(k + 1, j)));
  return sum;
}

bool satisfies_law(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d) {
  const std::size_t n = d.length();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      if (!d.has(i, j)) return false;
      require_one_cochain(g, v, d.at(i, j));
      if (!(coboundary(g, v, d.at(i, j)) == product_law_rhs(g, v, d, i, j))) return false;
    }
  return true;
}

Cochain massey_product(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d) {
  if (!satisfies_law(g, v, d)) throw InvalidDefiningSystem("massey_product: defining-system law fails");
  Cochain c = product_law_rhs(g, v, d, 1, d.length());
  if (!coboundary(g, v, c).is_zero()) throw MismatchError("massey_product: c(D) is not a cocycle");
  return c;
}

namespace {

void require_scalar_trivial(const CoeffModule& v) {
  if (v.rank() != 1 || !v.action_is_trivial())
    throw DomainError("unipotent matrices need a rank-one module with trivial action");
}

bool is_upper_unipotent(const MatrixRep& r) {
  for (const auto& x : r.images)
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (x.at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

}  // namespace

MatrixRep unipotent_block(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d, std::size_t first,
                          std::size_t last) {
  require_scalar_trivial(v);
  const Modulus& m = v.modulus();
  const std::size_t n = last - first + 2;
  MatrixRep rep{m, n, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    ZmodMatrix u = ZmodMatrix::identity(m, n);
    for (std::size_t i = first; i <= last; ++i)
      for (std::size_t j = i; j <= last; ++j) u.at(i - first, j - first + 1) = m.neg(d.at(i, j).value(x)[0]);
    rep.images.push_back(std::move(u));
  }
  return rep;
}

namespace {

// a(i,j) entries read off nu_1 and nu_2; nullopt if they are inconsistent.
std::optional<ProductSystem> read_system(const FiniteGroup& g, const CoeffModule& v, const MatrixRep& nu1,
                                         const MatrixRep& nu2) {
  const Modulus& m = v.modulus();
  const std::size_t n = nu1.dim;
  ProductSystem d(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      Cochain c(g.order(), 1, 1);
      for (std::size_t x = 0; x < g.order(); ++x) {
        std::optional<u64> from1, from2;
        if (j <= n - 1) from1 = m.neg(nu1.images[x].at(i - 1, j));
        if (i >= 2) from2 = m.neg(nu2.images[x].at(i - 2, j - 1));
        if (from1 && from2 && *from1 != *from2) return std::nullopt;
        c.value(x)[0] = from1 ? *from1 : *from2;
      }
      d.set(i, j, std::move(c));
    }
  return d;
}

MatrixRep with_corner(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d, const Cochain& corner) {
  const Modulus& m = v.modulus();
  const std::size_t n = d.length();
  MatrixRep nu{m, n + 1, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    ZmodMatrix u = ZmodMatrix::identity(m, n + 1);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        const Cochain& c = (i == 1 && j == n) ? corner : d.at(i, j);
        u.at(i - 1, j) = m.neg(c.value(x)[0]);
      }
    nu.images.push_back(std::move(u));
  }
  return nu;
}

void check_concatenation_inputs(const FiniteGroup& g, const CoeffModule& v, const MatrixRep& nu1,
                                const MatrixRep& nu2) {
  require_scalar_trivial(v);
  if (nu1.dim != nu2.dim || nu1.dim < 2) throw DomainError("unipotent_concatenation: size mismatch");
  if (!(nu1.modulus == v.modulus()) || !(nu2.modulus == v.modulus()))
    throw DomainError("unipotent_concatenation: modulus mismatch");
  if (!is_upper_unipotent(nu1) || !is_upper_unipotent(nu2))
    throw DomainError("unipotent_concatenation: inputs must be upper unipotent");
  if (!nu1.is_homomorphism(g) || !nu2.is_homomorphism(g))
    throw DomainError("unipotent_concatenation: inputs must be homomorphisms");
}

}  // namespace

std::optional<MatrixRep> unipotent_concatenation(const FiniteGroup& g, const CoeffModule& v,
                                                 const MatrixRep& nu1, const MatrixRep& nu2) {
  check_concatenation_inputs(g, v, nu1, nu2);
  auto d = read_system(g, v, nu1, nu2);
  if (!d) throw DomainError("unipotent_concatenation: nu1 and nu2 disagree on the shared block");
  // nu_1, nu_2 homomorphisms make every a(i,j) other than the corner obey the law.
  const Cochain c = massey_product(g, v, *d);
  auto corner = vanishes_in_h2(g, v, c);
  if (!corner) return std::nullopt;
  MatrixRep nu = with_corner(g, v, *d, *corner);
  if (!nu.is_homomorphism(g)) throw MismatchError("unipotent_concatenation: lift is not a homomorphism");
  return nu;
}

bool concatenation_exists_brute_force(const FiniteGroup& g, const CoeffModule& v, const MatrixRep& nu1,
                                      const MatrixRep& nu2) {
  check_concatenation_inputs(g, v, nu1, nu2);
  auto d = read_system(g, v, nu1, nu2);
  if (!d) return false;
  return for_each_table(g, v, [&](const Cochain& corner) { return with_corner(g, v, *d, corner).is_homomorphism(g); });
}

// ---------------------------------------------------------------------------

bool TruncatedRep::is_homomorphism(const FiniteGroup& g) const {
  if (images.size() != g.order()) return false;
  const std::size_t r = order;
  for (std::size_t j = 0; j <= r; ++j) {
    ZmodMatrix expect = j == 0 ? ZmodMatrix::identity(modulus, dim) : ZmodMatrix(modulus, dim, dim);
    if (!(images[g.identity()][j] == expect)) return false;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto& ab = images[g.mul(a, b)];
      for (std::size_t j = 0; j <= r; ++j) {
        ZmodMatrix prod(modulus, dim, dim);
        for (std::size_t i = 0; i <= j; ++i) prod = prod + images[a][i] * images[b][j - i];
        if (!(prod == ab[j])) return false;
      }
    }
  return true;
}

TruncatedRep deformation(const FiniteGroup& g, const MatrixRep& nu, const std::vector<Cochain>& chain) {
  const Modulus& m = nu.modulus;
  const std::size_t n = nu.dim;
  TruncatedRep rep{m, n, chain.size(), {}};
  for (const Cochain& c : chain)
    if (c.degree() != 1 || c.rank() != n * n || c.group_order() != g.order())
      throw DomainError("deformation: cochains must be End(nu)-valued 1-cochains");
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<ZmodMatrix> coeffs{nu.images[x]};
    for (const Cochain& c : chain) {
      ZmodMatrix mj = matrix_value(m, c, x, n) * nu.images[x];
      coeffs.push_back(ZmodMatrix(m, n, n) - mj);
    }
    rep.images.push_back(std::move(coeffs));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Cochain matrix_entry(const Cochain& c, std::size_t s, std::size_t t) {
  if (c.rank() != 4) throw DomainError("matrix_entry: expected a 2x2-matrix-valued cochain");
  Cochain e(c.group_order(), 1, c.degree());
  for (std::size_t cell = 0; cell < c.cells(); ++cell) e.value(cell)[0] = c.value(cell)[s * 2 + t];
  return e;
}

CoordinateContext::CoordinateContext(const FiniteGroup& g, const Modulus& m, Character chi1, Character chi2)
    : group_(&g),
      chi1_(std::move(chi1)),
      chi2_(std::move(chi2)),
      end_(CoeffModule::endomorphisms(g, diagonal_rep(g, m, chi1_, chi2_))),
      end_solver_(g, end_) {
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      Character psi = character_product(m, chi(s), character_inverse(m, chi(t)));
      entry_.emplace_back(g, CoeffModule::character(g, m, psi));
    }
}

bool coordinate_relation(const CoordinateContext& ctx, const DefiningSystem& d, std::size_t s, std::size_t t) {
  if (s > 1 || t > 1) throw DomainError("coordinate_relation: coordinates are 0 or 1");
  const Cochain c = massey_power(ctx.group(), ctx.end_module(), d);
  const Cochain entry = matrix_entry(c, s, t);
  return vanishes_in_h2(ctx.entry_solver(s, t), entry).has_value();
}

namespace {

// The paper's M'_i(x) for i = 1..count, as matrices over A; if `last` is
// given it fills the (2,1) slot of M'_count instead of a21^(count+1).
struct ShiftData {
  MatrixRep nu_prime;
  std::vector<std::vector<ZmodMatrix>> m_prime;  // [x][i-1]
};

ShiftData shift_matrices(const CoordinateContext& ctx, const DefiningSystem& d, std::size_t count,
                         const Cochain* last) {
  const FiniteGroup& g = ctx.group();
  const Modulus& m = ctx.end_module().modulus();
  // a^{(i)}_{st}(x) = -m_i(x)_{st}: the matrices M_i = a^{(i)} nu of the deformation nu + sum M_i eps^i.
  auto a = [&](std::size_t i, std::size_t s, std::size_t t, std::size_t x) -> u64 {
    if (i == 0) return 0;
    return m.neg(d.chain[i - 1].value(x)[s * 2 + t]);
  };
  const Character& chi1 = ctx.chi(0);
  const Character& chi2 = ctx.chi(1);

  ShiftData out{MatrixRep{m, 2, {}}, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    ZmodMatrix u(m, 2, 2);
    u.at(0, 0) = chi1[x];
    u.at(1, 0) = m.mul(chi1[x], a(1, 1, 0, x));
    u.at(1, 1) = chi2[x];
    out.nu_prime.images.push_back(std::move(u));

    std::vector<ZmodMatrix> ms;
    for (std::size_t i = 1; i <= count; ++i) {
      ZmodMatrix big(m, 2, 2);
      big.at(0, 0) = m.mul(chi1[x], a(i, 0, 0, x));
      big.at(0, 1) = m.mul(chi2[x], a(i - 1, 0, 1, x));
      const u64 lower = (last && i == count) ? last->value(x)[0] : a(i + 1, 1, 0, x);
      big.at(1, 0) = m.mul(chi1[x], lower);
      big.at(1, 1) = m.mul(chi2[x], a(i, 1, 1, x));
      ms.push_back(std::move(big));
    }
    out.m_prime.push_back(std::move(ms));
  }
  if (!out.nu_prime.is_homomorphism(g)) throw MismatchError("index shift: nu' is not a homomorphism");
  return out;
}

}  // namespace

IndexShift index_shift(const CoordinateContext& ctx, const DefiningSystem& d) {
  const FiniteGroup& g = ctx.group();
  const Modulus& m = ctx.end_module().modulus();
  const std::size_t r = d.power();
  if (r < 3) throw DomainError("index_shift: needs r >= 3");
  if (!satisfies_law(g, ctx.end_module(), d)) throw InvalidDefiningSystem("index_shift: D is not a defining system");

  ShiftData data = shift_matrices(ctx, d, r - 2, nullptr);
  DefiningSystem shifted;
  for (std::size_t i = 1; i + 2 <= r; ++i) {
    Cochain mi(g.order(), 4, 1);
    for (std::size_t x = 0; x < g.order(); ++x) {
      // m'_i = -M'_i nu'^{-1}
      ZmodMatrix val = ZmodMatrix(m, 2, 2) - data.m_prime[x][i - 1] * data.nu_prime.images[g.inverse(x)];
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t) mi.value(x)[s * 2 + t] = val.at(s, t);
    }
    shifted.chain.push_back(std::move(mi));
  }
  return IndexShift{std::move(data.nu_prime), std::move(shifted)};
}

TruncatedRep shifted_deformation(const CoordinateContext& ctx, const DefiningSystem& d, const Cochain& a) {
  const FiniteGroup& g = ctx.group();
  const std::size_t r = d.power();
  if (r < 2) throw DomainError("shifted_deformation: needs r >= 2");
  if (a.degree() != 1 || a.rank() != 1 || a.group_order() != g.order())
    throw DomainError("shifted_deformation: a must be a scalar 1-cochain");
  ShiftData data = shift_matrices(ctx, d, r - 1, &a);
  TruncatedRep rep{data.nu_prime.modulus, 2, r - 1, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<ZmodMatrix> coeffs{data.nu_prime.images[x]};
    for (auto& mp : data.m_prime[x]) coeffs.push_back(std::move(mp));
    rep.images.push_back(std::move(coeffs));
  }
  return rep;
}

}  // namespace eisenlab::massey
