#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eisenlab/corering/zmod.hpp"

namespace eisenlab {

/// Dense row-major matrix over Z/p^M.
class ZmodMatrix {
 public:
  ZmodMatrix(Modulus m, std::size_t rows, std::size_t cols)
      : mod_(m), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static ZmodMatrix identity(Modulus m, std::size_t n);
  /// Entries given as signed integers, row-major.
  static ZmodMatrix from_integers(Modulus m, std::size_t rows, std::size_t cols,
                                  std::span<const i64> entries);

  const Modulus& modulus() const { return mod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  u64& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  u64 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<u64> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const u64> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  std::vector<u64> column(std::size_t j) const;

  ZmodMatrix transpose() const;
  /// Leading k x k principal block.
  ZmodMatrix leading_block(std::size_t k) const;
  ZmodMatrix with_modulus_reduced(unsigned exponent) const;

  std::vector<u64> apply(std::span<const u64> v) const;
  /// A - c*I
  ZmodMatrix shifted(u64 c) const;
  /// A^e by repeated squaring.
  ZmodMatrix power(u64 e) const;

  friend ZmodMatrix operator*(const ZmodMatrix& a, const ZmodMatrix& b);
  friend ZmodMatrix operator+(const ZmodMatrix& a, const ZmodMatrix& b);
  friend ZmodMatrix operator-(const ZmodMatrix& a, const ZmodMatrix& b);
  friend bool operator==(const ZmodMatrix& a, const ZmodMatrix& b) {
    return a.mod_ == b.mod_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Modulus mod_;
  std::size_t rows_, cols_;
  std::vector<u64> a_;
};

/// Sum of a[i]*b[i] mod q, with reductions batched when q is small.
u64 dot_mod(const Modulus& m, const u64* a, const u64* b, std::size_t n);

/// Basis of a free direct summand of (Z/p^M)^n. Column j of `vectors` is the
/// j-th basis vector; at row pivots[i] the basis matrix is the identity, so
/// coordinates of a vector in the span are read off at the pivot rows.
struct FreeBasis {
  ZmodMatrix vectors;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
  std::vector<u64> coordinates(std::span<const u64> v) const;
};

/// Reduces arbitrary spanning columns of a free summand to FreeBasis form
/// using unit pivots only. Throws DomainError if the span is not free with
/// unit elementary divisors.
FreeBasis normalize_free_basis(const ZmodMatrix& columns);

/// Kernel of a matrix whose elementary divisors are all units or zero (as
/// for A^K in a Fitting decomposition), found with unit-pivot elimination.
FreeBasis unit_pivot_kernel(const ZmodMatrix& a);

/// Matrix of A restricted to an A-stable free summand, in that basis.
ZmodMatrix restrict_to(const ZmodMatrix& a, const FreeBasis& basis);

/// Rank of A mod p.
std::size_t rank_mod_p(const ZmodMatrix& a);

}  // namespace eisenlab
