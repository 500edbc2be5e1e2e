#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "eisenlab/corering/howell.hpp"
#include "eisenlab/corering/matrix.hpp"
#include "eisenlab/massey/group.hpp"

namespace eisenlab::massey {

/// A representation G -> GL_n(Z/p^s), one matrix per group element.
struct MatrixRep {
  Modulus modulus;
  std::size_t dim;
  std::vector<ZmodMatrix> images;

  bool is_homomorphism(const FiniteGroup& g) const;
};

/// diag(chi1, chi2).
MatrixRep diagonal_rep(const FiniteGroup& g, const Modulus& m, const Character& chi1,
                       const Character& chi2);

/// A free Z/p^s-module of rank k with a G-action and a bilinear pairing
/// V x V -> V. Elements are coordinate vectors of length k.
class CoeffModule {
 public:
  /// `action[g]` is the k x k matrix of g; `pairing[(i*k + j)*k + l]` is the
  /// e_l-coefficient of e_i . e_j. The action is checked to be a homomorphism
  /// into invertible matrices.
  CoeffModule(const FiniteGroup& g, Modulus m, std::size_t rank, std::vector<ZmodMatrix> action,
              std::vector<u64> pairing);

  /// Z/p^s with trivial action and multiplication.
  static CoeffModule trivial(const FiniteGroup& g, const Modulus& m);
  /// Z/p^s(chi): g acts by chi(g); the pairing is still multiplication, which
  /// is the right one for a cup product whose second factor lives here.
  static CoeffModule character(const FiniteGroup& g, const Modulus& m, const Character& chi);
  /// End(nu) = n x n matrices with g.X = nu(g) X nu(g)^-1 and matrix product
  /// as pairing. Coordinate (s,t) is stored at index s*n + t.
  static CoeffModule endomorphisms(const FiniteGroup& g, const MatrixRep& nu);

  const Modulus& modulus() const { return mod_; }
  std::size_t rank() const { return rank_; }
  /// Total number of elements, |Z/p^s|^rank (saturating at 2^64-1).
  u64 size() const;
  bool action_is_trivial() const { return trivial_action_; }

  void act(std::size_t g, std::span<const u64> x, std::span<u64> out) const;
  void pair(std::span<const u64> x, std::span<const u64> y, std::span<u64> out) const;

 private:
  Modulus mod_;
  std::size_t rank_;
  std::vector<ZmodMatrix> action_;
  std::vector<u64> pairing_;
  bool trivial_action_ = false;
};

/// An inhomogeneous n-cochain G^n -> V. Values of (g_1, ..., g_n) live at
/// cell ((g_1 |G| + g_2) |G| + ...) and occupy `rank` consecutive entries.
class Cochain {
 public:
  static constexpr unsigned max_degree = 3;

  Cochain(std::size_t group_order, std::size_t rank, unsigned degree);

  unsigned degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  std::size_t group_order() const { return n_; }
  std::size_t cells() const { return cells_; }

  std::size_t cell(std::initializer_list<std::size_t> args) const;
  std::span<u64> value(std::size_t cell) { return {table_.data() + cell * rank_, rank_}; }
  std::span<const u64> value(std::size_t cell) const { return {table_.data() + cell * rank_, rank_}; }
  std::span<const u64> operator()(std::initializer_list<std::size_t> args) const {
    return value(cell(args));
  }

  std::vector<u64>& table() { return table_; }
  const std::vector<u64>& table() const { return table_; }
  bool is_zero() const;

  friend bool operator==(const Cochain& a, const Cochain& b) = default;

 private:
  std::size_t n_;
  std::size_t rank_;
  unsigned degree_;
  std::size_t cells_;
  std::vector<u64> table_;
};

Cochain add(const Modulus& m, const Cochain& a, const Cochain& b);
Cochain sub(const Modulus& m, const Cochain& a, const Cochain& b);
Cochain scale(const Modulus& m, u64 c, const Cochain& a);

/// (dc)(g_1..g_{n+1}) = g_1.c(g_2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(g_1..g_n).
/// Degree of c must be <= 2.
Cochain coboundary(const FiniteGroup& g, const CoeffModule& v, const Cochain& c);

/// (a u b)(g_1..g_{i+j}) = a(g_1..g_i) . ((g_1...g_i) . b(g_{i+1}..)), with the
/// action and pairing of `right`, the module b takes values in. i + j <= 3.
Cochain cup(const FiniteGroup& g, const CoeffModule& right, const Cochain& a, const Cochain& b);

/// Matrix of d: C^n -> C^{n+1} in the cell-major coordinates of Cochain.
ZmodMatrix coboundary_matrix(const FiniteGroup& g, const CoeffModule& v, unsigned degree);

Cochain random_cochain(const FiniteGroup& g, const CoeffModule& v, unsigned degree, std::mt19937_64& rng);

/// Caches the Howell form of d: C^1 -> C^2 for repeated membership tests in B^2.
class CoboundarySolver {
 public:
  CoboundarySolver(const FiniteGroup& g, const CoeffModule& v);

  /// A 1-cochain x with dx = z, if one exists. Does not check dz = 0.
  std::optional<Cochain> primitive(const Cochain& z) const;
  /// Generators of Z^1(G, V) (kernel of d on C^1).
  const std::vector<Cochain>& cocycle_generators() const { return cocycles_; }
  /// A random element of Z^1 as a random combination of the generators.
  Cochain random_cocycle(std::mt19937_64& rng) const;
  /// Every element of Z^1, when |Z^1| <= limit; throws DomainError otherwise.
  std::vector<Cochain> all_cocycles(std::size_t limit) const;

  const FiniteGroup& group() const { return *group_; }
  const CoeffModule& module() const { return module_; }

 private:
  const FiniteGroup* group_;
  CoeffModule module_;
  HowellBasis image_;
  std::vector<Cochain> cocycles_;
};

/// Decides z in B^2(G, V); returns a primitive when it is. Throws DomainError
/// if z is not a 2-cocycle.
std::optional<Cochain> vanishes_in_h2(const FiniteGroup& g, const CoeffModule& v, const Cochain& z);
std::optional<Cochain> vanishes_in_h2(const CoboundarySolver& solver, const Cochain& z);

}  // namespace eisenlab::massey
