#include "eisenlab/massey/cochain.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "eisenlab/error.hpp"

namespace eisenlab::massey {

bool MatrixRep::is_homomorphism(const FiniteGroup& g) const {
  if (images.size() != g.order()) return false;
  if (!(images[g.identity()] == ZmodMatrix::identity(modulus, dim))) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(images[g.mul(a, b)] == images[a] * images[b])) return false;
  return true;
}

MatrixRep diagonal_rep(const FiniteGroup& g, const Modulus& m, const Character& chi1,
                       const Character& chi2) {
  MatrixRep rep{m, 2, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    ZmodMatrix d(m, 2, 2);
    d.at(0, 0) = chi1[x];
    d.at(1, 1) = chi2[x];
    rep.images.push_back(std::move(d));
  }
  if (!rep.is_homomorphism(g)) throw DomainError("diagonal_rep: inputs are not characters");
  return rep;
}

// ---------------------------------------------------------------------------

CoeffModule::CoeffModule(const FiniteGroup& g, Modulus m, std::size_t rank,
                         std::vector<ZmodMatrix> action, std::vector<u64> pairing)
    : mod_(m), rank_(rank), action_(std::move(action)), pairing_(std::move(pairing)) {
  if (rank_ == 0) throw DomainError("CoeffModule: rank must be positive");
  if (action_.size() != g.order()) throw DomainError("CoeffModule: need one action matrix per element");
  if (pairing_.size() != rank_ * rank_ * rank_) throw DomainError("CoeffModule: pairing tensor has wrong size");
  for (auto& x : pairing_) x = mod_.reduce_u(x);
  for (const auto& a : action_)
    if (a.rows() != rank_ || a.cols() != rank_ || !(a.modulus() == mod_))
      throw DomainError("CoeffModule: action matrix has wrong shape");
  // A homomorphism from a group sends e to I and is then automatically invertible.
  const ZmodMatrix id = ZmodMatrix::identity(mod_, rank_);
  if (!(action_[g.identity()] == id)) throw DomainError("CoeffModule: identity does not act trivially");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(action_[g.mul(a, b)] == action_[a] * action_[b]))
        throw DomainError("CoeffModule: action is not a homomorphism");
  trivial_action_ = std::all_of(action_.begin(), action_.end(), [&](const ZmodMatrix& a) { return a == id; });
}

CoeffModule CoeffModule::trivial(const FiniteGroup& g, const Modulus& m) {
  return character(g, m, trivial_character(g, m));
}

CoeffModule CoeffModule::character(const FiniteGroup& g, const Modulus& m, const Character& chi) {
  if (chi.size() != g.order()) throw DomainError("CoeffModule::character: wrong table size");
  std::vector<ZmodMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    ZmodMatrix a(m, 1, 1);
    a.at(0, 0) = m.reduce_u(chi[x]);
    action.push_back(std::move(a));
  }
  return CoeffModule(g, m, 1, std::move(action), {1});
}

CoeffModule CoeffModule::endomorphisms(const FiniteGroup& g, const MatrixRep& nu) {
  if (!nu.is_homomorphism(g)) throw DomainError("CoeffModule::endomorphisms: nu is not a homomorphism");
  const Modulus& m = nu.modulus;
  const std::size_t n = nu.dim, k = n * n;
  std::vector<ZmodMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const ZmodMatrix& a = nu.images[x];
    const ZmodMatrix& ainv = nu.images[g.inverse(x)];
    // (a X a^-1)_{st} = sum_{u,v} a_{su} X_{uv} ainv_{vt}
    ZmodMatrix act(m, k, k);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) act.at(s * n + t, u * n + v) = m.mul(a.at(s, u), ainv.at(v, t));
    action.push_back(std::move(act));
  }
  std::vector<u64> pairing(k * k * k, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t t = 0; t < n; ++t) pairing[((s * n + u) * k + (u * n + t)) * k + (s * n + t)] = 1;
  return CoeffModule(g, m, k, std::move(action), std::move(pairing));
}

u64 CoeffModule::size() const {
  u64 total = 1;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (total > std::numeric_limits<u64>::max() / mod_.value()) return std::numeric_limits<u64>::max();
    total *= mod_.value();
  }
  return total;
}

void CoeffModule::act(std::size_t g, std::span<const u64> x, std::span<u64> out) const {
  if (trivial_action_) {
    std::copy(x.begin(), x.end(), out.begin());
    return;
  }
  const ZmodMatrix& a = action_[g];
  for (std::size_t i = 0; i < rank_; ++i) out[i] = dot_mod(mod_, a.row(i).data(), x.data(), rank_);
}

void CoeffModule::pair(std::span<const u64> x, std::span<const u64> y, std::span<u64> out) const {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      const u64 xy = mod_.mul(x[i], y[j]);
      const u64* coeffs = pairing_.data() + (i * rank_ + j) * rank_;
      for (std::size_t l = 0; l < rank_; ++l)
        if (coeffs[l] != 0) out[l] = mod_.add(out[l], mod_.mul(coeffs[l], xy));
    }
  }
}

// ---------------------------------------------------------------------------

Cochain::Cochain(std::size_t group_order, std::size_t rank, unsigned degree)
    : n_(group_order), rank_(rank), degree_(degree), cells_(1) {
  if (degree_ > max_degree) throw DomainError("Cochain: degree above 3 is not supported");
  for (unsigned i = 0; i < degree_; ++i) cells_ *= n_;
  table_.assign(cells_ * rank_, 0);
}

std::size_t Cochain::cell(std::initializer_list<std::size_t> args) const {
  if (args.size() != degree_) throw DomainError("Cochain: wrong number of arguments");
  std::size_t c = 0;
  for (std::size_t a : args) c = c * n_ + a;
  return c;
}

bool Cochain::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](u64 x) { return x == 0; });
}

namespace {

void check_same_shape(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || a.rank() != b.rank() || a.group_order() != b.group_order())
    throw DomainError("cochain shapes differ");
}

void check_fits(const FiniteGroup& g, const CoeffModule& v, const Cochain& c) {
  if (c.group_order() != g.order() || c.rank() != v.rank())
    throw DomainError("cochain does not match the group or module");
}

// Digits of a cell index, most significant first.
void split_cell(std::size_t cell, std::size_t n, unsigned degree, std::size_t* digits) {
  for (unsigned i = degree; i-- > 0;) {
    digits[i] = cell % n;
    cell /= n;
  }
}

std::size_t join_cell(const std::size_t* digits, std::size_t n, unsigned degree) {
  std::size_t c = 0;
  for (unsigned i = 0; i < degree; ++i) c = c * n + digits[i];
  return c;
}

}  // namespace

Cochain add(const Modulus& m, const Cochain& a, const Cochain& b) {
  check_same_shape(a, b);
  Cochain r = a;
  for (std::size_t i = 0; i < r.table().size(); ++i) r.table()[i] = m.add(a.table()[i], b.table()[i]);
  return r;
}

Cochain sub(const Modulus& m, const Cochain& a, const Cochain& b) {
  check_same_shape(a, b);
  Cochain r = a;
  for (std::size_t i = 0; i < r.table().size(); ++i) r.table()[i] = m.sub(a.table()[i], b.table()[i]);
  return r;
}

Cochain scale(const Modulus& m, u64 c, const Cochain& a) {
  Cochain r = a;
  c = m.reduce_u(c);
  for (auto& x : r.table()) x = m.mul(c, x);
  return r;
}

Cochain coboundary(const FiniteGroup& g, const CoeffModule& v, const Cochain& c) {
  check_fits(g, v, c);
  const unsigned n = c.degree();
  if (n > 2) throw DomainError("coboundary: degree must be <= 2");
  const Modulus& m = v.modulus();
  const std::size_t ord = g.order(), k = v.rank();
  Cochain out(ord, k, n + 1);
  std::size_t args[4];
  std::size_t sub_args[3];
  std::vector<u64> tmp(k);
  for (std::size_t cell = 0; cell < out.cells(); ++cell) {
    split_cell(cell, ord, n + 1, args);
    auto dst = out.value(cell);
    // g_1 . c(g_2, ..., g_{n+1})
    v.act(args[0], c.value(join_cell(args + 1, ord, n)), dst);
    // (-1)^i c(g_1, ..., g_i g_{i+1}, ..., g_{n+1})
    for (unsigned i = 1; i <= n; ++i) {
      unsigned w = 0;
      for (unsigned j = 0; j <= n; ++j) {
        if (j + 1 == i) {
          sub_args[w++] = g.mul(args[j], args[j + 1]);
          ++j;
        } else {
          sub_args[w++] = args[j];
        }
      }
      auto src = c.value(join_cell(sub_args, ord, n));
      for (std::size_t l = 0; l < k; ++l) dst[l] = (i % 2) ? m.sub(dst[l], src[l]) : m.add(dst[l], src[l]);
    }
    // (-1)^{n+1} c(g_1, ..., g_n)
    auto last = c.value(join_cell(args, ord, n));
    for (std::size_t l = 0; l < k; ++l) dst[l] = ((n + 1) % 2) ? m.sub(dst[l], last[l]) : m.add(dst[l], last[l]);
  }
  return out;
}

Cochain cup(const FiniteGroup& g, const CoeffModule& right, const Cochain& a, const Cochain& b) {
  if (a.group_order() != g.order() || b.group_order() != g.order()) throw DomainError("cup: group mismatch");
  if (a.rank() != right.rank() || b.rank() != right.rank()) throw DomainError("cup: module rank mismatch");
  const unsigned i = a.degree(), j = b.degree();
  if (i + j > Cochain::max_degree) throw DomainError("cup: total degree above 3");
  const std::size_t ord = g.order(), k = right.rank();
  Cochain out(ord, k, i + j);
  std::size_t args[3];
  std::vector<u64> moved(k);
  for (std::size_t cell = 0; cell < out.cells(); ++cell) {
    split_cell(cell, ord, i + j, args);
    auto left = a.value(join_cell(args, ord, i));
    std::size_t prefix = g.identity();
    for (unsigned t = 0; t < i; ++t) prefix = g.mul(prefix, args[t]);
    right.act(prefix, b.value(join_cell(args + i, ord, j)), moved);
    right.pair(left, moved, out.value(cell));
  }
  return out;
}

ZmodMatrix coboundary_matrix(const FiniteGroup& g, const CoeffModule& v, unsigned degree) {
  if (degree > 2) throw DomainError("coboundary_matrix: degree must be <= 2");
  Cochain probe(g.order(), v.rank(), degree);
  const std::size_t cols = probe.table().size();
  std::size_t rows = cols * g.order();
  ZmodMatrix d(v.modulus(), rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    probe.table()[c] = 1;
    Cochain img = coboundary(g, v, probe);
    for (std::size_t r = 0; r < rows; ++r) d.at(r, c) = img.table()[r];
    probe.table()[c] = 0;
  }
  return d;
}

Cochain random_cochain(const FiniteGroup& g, const CoeffModule& v, unsigned degree, std::mt19937_64& rng) {
  Cochain c(g.order(), v.rank(), degree);
  std::uniform_int_distribution<u64> dist(0, v.modulus().value() - 1);
  for (auto& x : c.table()) x = dist(rng);
  return c;
}

// ---------------------------------------------------------------------------

CoboundarySolver::CoboundarySolver(const FiniteGroup& g, const CoeffModule& v)
    : group_(&g), module_(v), image_(coboundary_matrix(g, v, 1)) {
  ZmodMatrix ker = kernel_generators(coboundary_matrix(g, v, 1));
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Cochain z(g.order(), v.rank(), 1);
    for (std::size_t r = 0; r < ker.rows(); ++r) z.table()[r] = ker.at(r, c);
    if (!z.is_zero()) cocycles_.push_back(std::move(z));
  }
}

std::optional<Cochain> CoboundarySolver::primitive(const Cochain& z) const {
  if (z.degree() != 2 || z.rank() != module_.rank() || z.group_order() != group_->order())
    throw DomainError("CoboundarySolver: expected a 2-cochain on this group and module");
  auto x = image_.solve(z.table());
  if (!x) return std::nullopt;
  Cochain c(group_->order(), module_.rank(), 1);
  c.table() = std::move(*x);
  return c;
}

Cochain CoboundarySolver::random_cocycle(std::mt19937_64& rng) const {
  const Modulus& m = module_.modulus();
  Cochain z(group_->order(), module_.rank(), 1);
  std::uniform_int_distribution<u64> dist(0, m.value() - 1);
  for (const Cochain& gen : cocycles_) z = add(m, z, scale(m, dist(rng), gen));
  return z;
}

std::vector<Cochain> CoboundarySolver::all_cocycles(std::size_t limit) const {
  const Modulus& m = module_.modulus();
  double combos = 1;
  for (std::size_t i = 0; i < cocycles_.size(); ++i) combos *= static_cast<double>(m.value());
  if (combos > static_cast<double>(limit)) throw DomainError("all_cocycles: too many combinations to enumerate");
  std::set<std::vector<u64>> seen;
  std::vector<Cochain> out;
  std::vector<u64> coeff(cocycles_.size(), 0);
  while (true) {
    Cochain z(group_->order(), module_.rank(), 1);
    for (std::size_t i = 0; i < coeff.size(); ++i)
      if (coeff[i] != 0) z = add(m, z, scale(m, coeff[i], cocycles_[i]));
    if (seen.insert(z.table()).second) out.push_back(std::move(z));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == m.value()) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

std::optional<Cochain> vanishes_in_h2(const CoboundarySolver& solver, const Cochain& z) {
  if (!coboundary(solver.group(), solver.module(), z).is_zero())
    throw DomainError("vanishes_in_h2: input is not a 2-cocycle");
  return solver.primitive(z);
}

std::optional<Cochain> vanishes_in_h2(const FiniteGroup& g, const CoeffModule& v, const Cochain& z) {
  return vanishes_in_h2(CoboundarySolver(g, v), z);
}

}  // namespace eisenlab::massey
