#pragma once

#include <array>
#include <vector>

#include "eisenlab/corering/matrix.hpp"

namespace eisenlab {

/// Genus of X_0(N) for a prime N.
unsigned genus_x0(u64 N);

using Mat2 = std::array<i64, 4>;  // [[a, b], [c, d]] as {a, b, c, d}

/// Weight-2 Manin symbols (c:d) in P^1(Z/N) for Gamma_0(N), N prime, modulo
/// the two- and three-term relations (and, for the plus quotient, the star
/// involution), over Z/p^M.
///
/// Symbol indexing: (c:1) -> c for 0 <= c < N, and (1:0) -> N.
class ManinSpace {
 public:
  enum class Sign { plus, full };

  ManinSpace(u64 N, Modulus m, Sign sign = Sign::plus);

  u64 N() const { return n_; }
  const Modulus& modulus() const { return mod_; }
  Sign sign() const { return sign_; }
  std::size_t num_symbols() const { return n_ + 1; }
  std::size_t dimension() const { return basis_reps_.size(); }

  std::size_t symbol_index(i64 c, i64 d) const;
  std::pair<u64, u64> symbol(std::size_t index) const;

  /// Coordinates of a Manin symbol in the quotient basis.
  std::span<const u64> coordinates(std::size_t symbol) const {
    return {coords_.data() + symbol * dimension(), dimension()};
  }
  /// Representative symbol of the j-th basis vector.
  std::size_t basis_symbol(std::size_t j) const { return basis_reps_[j]; }

  /// The boundary functional (coefficient of the cusp at infinity) on the
  /// quotient basis.
  const std::vector<u64>& boundary() const { return boundary_; }

  /// Image of symbol x under right multiplication by g.
  std::size_t act(std::size_t x, const Mat2& g) const;

 private:
  u64 n_;
  Modulus mod_;
  Sign sign_;
  std::vector<u64> inv_;  // inverses mod N
  std::vector<std::size_t> basis_reps_;
  std::vector<u64> coords_;  // (N+1) x dim, row-major
  std::vector<u64> boundary_;
};

/// Merel's determinant-l set: a > b >= 0, d > c >= 0, ad - bc = l.
std::vector<Mat2> heilbronn_merel(u64 ell);

/// Matrix of T_l on the whole quotient (columns are images of basis vectors).
ZmodMatrix hecke_matrix_full(const ManinSpace& space, u64 ell);

/// Basis change to the cuspidal subspace (kernel of the boundary map).
struct CuspidalBasis {
  std::size_t pivot;  // the basis index used to cancel the boundary
};
CuspidalBasis cuspidal_basis(const ManinSpace& space);

/// Restriction of an operator commuting with the boundary map (up to a
/// scalar) to the cuspidal subspace, in the basis s_j = b_j - phi(b_j)/phi(b_j0) b_j0.
ZmodMatrix restrict_to_cuspidal(const ManinSpace& space, const CuspidalBasis& cb, const ZmodMatrix& t);

/// T_l on the cuspidal plus quotient (or full cuspidal space), checking the
/// Eisenstein eigenvalue l+1 on the boundary functional first.
ZmodMatrix hecke_matrix(const ManinSpace& space, u64 ell);

}  // namespace eisenlab
