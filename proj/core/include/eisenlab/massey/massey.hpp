#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eisenlab/massey/cochain.hpp"

namespace eisenlab::massey {

// Sign conventions. With the differential and cup product of cochain.hpp the
// defining-system law reads d m_i = sum_{j<i} m_j u m_{i-j}. The matching
// deformation of a representation nu is
//     nu_r(g) = (I - sum_{j=1}^r m_j(g) eps^j) nu(g)    over A[eps]/(eps^{r+1}),
// and the matching unipotent matrix has entry -a(i,j) in position (i, j+1).
// The minus signs are forced: with +m_j the homomorphism condition is
// d m_i = -sum m_j u m_{i-j}.

/// Defining system for the Massey power <a>^k: chain = (m_1 = a, ..., m_{k-1}).
struct DefiningSystem {
  std::vector<Cochain> chain;

  const Cochain& a() const { return chain.front(); }
  /// The k of <a>^k this system defines.
  std::size_t power() const { return chain.size() + 1; }
};

/// sum_{j=1}^{i-1} m_j u m_{i-j} for the first i-1 entries of `chain`.
Cochain power_law_rhs(const FiniteGroup& g, const CoeffModule& v, const std::vector<Cochain>& chain,
                      std::size_t i);
bool satisfies_law(const FiniteGroup& g, const CoeffModule& v, const DefiningSystem& d);

/// c(D) = sum_{j=1}^{k-1} m_j u m_{k-j}. Throws InvalidDefiningSystem if the
/// law fails; asserts d c(D) = 0.
Cochain massey_power(const FiniteGroup& g, const CoeffModule& v, const DefiningSystem& d);

/// A chain m_1 = a, ..., m_length obeying the law at every level, found by
/// solving each level as a coboundary problem and branching over Z^1.
/// <a>^k vanishes exactly when such a chain of length k exists.
std::optional<DefiningSystem> find_defining_system(const CoboundarySolver& solver, const Cochain& a,
                                                   std::size_t length, std::size_t cocycle_limit = 4096);

/// Whether some defining system D for <a>^k has c(D) in B^2. Solves each
/// level by coboundary membership and branches over all of Z^1, so it is only
/// meant for modules with small Z^1 (cocycle_limit bounds the enumeration).
bool massey_power_vanishes(const CoboundarySolver& solver, const Cochain& a, std::size_t k,
                           std::size_t cocycle_limit = 4096);

/// Same question answered by enumerating every 1-cochain table at each level
/// (no linear algebra). Feasible only when |V|^|G| is small, e.g. G = Z/5, V = Z/5.
bool massey_power_vanishes_brute_force(const FiniteGroup& g, const CoeffModule& v, const Cochain& a,
                                       std::size_t k);

// ---------------------------------------------------------------------------

/// Defining system {a(i,j)} for <a_1, ..., a_n>: every 1 <= i <= j <= n except (1, n).
class ProductSystem {
 public:
  explicit ProductSystem(std::size_t n) : n_(n) {}

  std::size_t length() const { return n_; }
  void set(std::size_t i, std::size_t j, Cochain c);
  const Cochain& at(std::size_t i, std::size_t j) const;
  bool has(std::size_t i, std::size_t j) const { return entries_.count({i, j}) != 0; }

  /// The system with a(i,j) = m_{j-i+1}, i.e. <a>^k read as <a, ..., a>.
  static ProductSystem from_power(const DefiningSystem& d);

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, Cochain> entries_;
};

/// sum_{k=i}^{j-1} a(i,k) u a(k+1,j).
Cochain product_law_rhs(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d, std::size_t i,
                        std::size_t j);
bool satisfies_law(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d);
/// c(D) = sum_{k=1}^{n-1} a(1,k) u a(k+1,n).
Cochain massey_product(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d);

/// Upper unipotent matrices with -a(i,j) at (i, j+1) (1-based) for the
/// entries of the block [first, last] of a product system. Trivial action only.
MatrixRep unipotent_block(const FiniteGroup& g, const CoeffModule& v, const ProductSystem& d, std::size_t first,
                          std::size_t last);

/// Reads the a(i,j) back from nu_1 (entries 1..n-1) and nu_2 (entries 2..n),
/// which must agree on the shared block, and returns the (n+1)x(n+1)
/// concatenation with a primitive of c(D) in the corner when one exists.
std::optional<MatrixRep> unipotent_concatenation(const FiniteGroup& g, const CoeffModule& v,
                                                 const MatrixRep& nu1, const MatrixRep& nu2);

/// Every corner 1-cochain tried; true if one of them makes the concatenation a
/// homomorphism. Only for tiny |A|^|G|.
bool concatenation_exists_brute_force(const FiniteGroup& g, const CoeffModule& v, const MatrixRep& nu1,
                                      const MatrixRep& nu2);

// ---------------------------------------------------------------------------

/// A representation into GL_n(A[eps]/(eps^{r+1})): images[g][j] is the
/// coefficient of eps^j.
struct TruncatedRep {
  Modulus modulus;
  std::size_t dim;
  std::size_t order;  // r
  std::vector<std::vector<ZmodMatrix>> images;

  bool is_homomorphism(const FiniteGroup& g) const;
};

/// nu_r = (I - sum_{j=1}^r m_j eps^j) nu, with m_j cochains in End(nu).
TruncatedRep deformation(const FiniteGroup& g, const MatrixRep& nu, const std::vector<Cochain>& chain);

// ---------------------------------------------------------------------------

/// The (s,t) entry (0-based) of a cochain valued in 2x2 matrices.
Cochain matrix_entry(const Cochain& c, std::size_t s, std::size_t t);

/// Coefficients for the coordinate relations over End(chi_1 + chi_2). Entry
/// (s,t) of an End-valued cochain lives in Z/p^s(chi_s chi_t^{-1}) under the
/// conjugation action.
class CoordinateContext {
 public:
  CoordinateContext(const FiniteGroup& g, const Modulus& m, Character chi1, Character chi2);

  const FiniteGroup& group() const { return *group_; }
  const CoeffModule& end_module() const { return end_; }
  const CoboundarySolver& end_solver() const { return end_solver_; }
  /// Solver for the twisted line of coordinate (s,t), 0-based.
  const CoboundarySolver& entry_solver(std::size_t s, std::size_t t) const { return entry_[s * 2 + t]; }
  const Character& chi(std::size_t i) const { return i == 0 ? chi1_ : chi2_; }

 private:
  const FiniteGroup* group_;
  Character chi1_, chi2_;
  CoeffModule end_;
  CoboundarySolver end_solver_;
  std::vector<CoboundarySolver> entry_;
};

/// Whether the Massey relation for <M_1>^r_D holds in coordinate (s,t)
/// (0-based): the (s,t) entry of c(D) is a coboundary in its twisted line.
bool coordinate_relation(const CoordinateContext& ctx, const DefiningSystem& d, std::size_t s, std::size_t t);

/// Data of the index shift: nu' = [[chi1, 0], [chi1 a21^(1), chi2]] and the
/// system D' = {M'_1, ..., M'_{r-2}} for <M'_1>^{r-1}, expressed as cochains
/// in End(nu').
struct IndexShift {
  MatrixRep nu_prime;
  DefiningSystem d_prime;
};

/// Builds the shifted data from a defining system D = {m_1..m_{r-1}} for
/// <M_1>^r over End(chi1 + chi2). Requires r >= 3.
IndexShift index_shift(const CoordinateContext& ctx, const DefiningSystem& d);

/// nu'_{r-1} = nu' + sum_{j<r-1} M'_j eps^j + M'_{r-1} eps^{r-1}, where M'_{r-1}
/// carries the prescribed a11^(r-1), a12^(r-2), a22^(r-1) and the free cochain
/// `a` (values in the (2,1) twisted line) in its (2,1) slot. Built directly
/// from matrices, without going through End(nu'). Requires r >= 2.
///
/// With the differential of cochain.hpp this is a homomorphism iff
///     da = -(sum_j a21^(j) u a11^(r-j) + a22^(j) u a21^(r-j)) = -c(D)_{21}.
TruncatedRep shifted_deformation(const CoordinateContext& ctx, const DefiningSystem& d, const Cochain& a);

}  // namespace eisenlab::massey
