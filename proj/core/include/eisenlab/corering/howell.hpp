#pragma once

#include <optional>
#include <vector>

#include "eisenlab/corering/matrix.hpp"

namespace eisenlab {

/// Echelon form of a submodule of (Z/p^M)^m with the Howell property: every
/// element of the module whose first k coordinates vanish is a combination
/// of the pivot rows whose pivot column is >= k. That property is what makes
/// greedy reduction a correct membership test over a ring with zero divisors.
class HowellBasis {
 public:
  /// Submodule generated by the columns of `generators`.
  explicit HowellBasis(const ZmodMatrix& generators);

  /// Number of pivot rows (not the rank over a field; several pivots may
  /// share a column range after annihilator rows are added).
  std::size_t size() const { return rows_.size(); }

  /// Coefficients x with generators * x = b, or nullopt if b is not in the span.
  std::optional<std::vector<u64>> solve(std::span<const u64> b) const;
  bool contains(std::span<const u64> b) const;

  /// Echelon rows whose pivot column is >= col; by the Howell property they
  /// generate the part of the module vanishing in the first col coordinates.
  std::vector<std::vector<u64>> rows_from(std::size_t col) const;

 private:
  struct Row {
    std::size_t col;      // pivot column
    unsigned val;         // pivot entry is exactly p^val
    std::vector<u64> vec;
    std::vector<u64> coeff;  // combination of the original generators
  };
  Modulus mod_;
  std::size_t dim_;
  std::size_t ngens_;
  std::vector<Row> rows_;
};

struct Membership {
  bool member;
  std::vector<u64> witness;  // empty unless member
};

/// Decides whether b lies in the column span of A over Z/p^M.
Membership howell_membership(const ZmodMatrix& a, std::span<const u64> b);

/// Generators (as columns) of {x : A x = 0}, from the Howell form of the
/// module {(A x, x)}.
ZmodMatrix kernel_generators(const ZmodMatrix& a);

}  // namespace eisenlab
