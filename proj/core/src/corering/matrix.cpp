#include "eisenlab/corering/matrix.hpp"

#include <algorithm>
#include <limits>

#include "eisenlab/error.hpp"

namespace eisenlab {

ZmodMatrix ZmodMatrix::identity(Modulus m, std::size_t n) {
  ZmodMatrix r(m, n, n);
  for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

ZmodMatrix ZmodMatrix::from_integers(Modulus m, std::size_t rows, std::size_t cols,
                                     std::span<const i64> entries) {
  if (entries.size() != rows * cols) throw DomainError("ZmodMatrix: entry count mismatch");
  ZmodMatrix r(m, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) r.a_[k] = m.reduce(entries[k]);
  return r;
}

std::vector<u64> ZmodMatrix::column(std::size_t j) const {
  std::vector<u64> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

ZmodMatrix ZmodMatrix::transpose() const {
  ZmodMatrix t(mod_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ZmodMatrix ZmodMatrix::leading_block(std::size_t k) const {
  ZmodMatrix b(mod_, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = at(i, j);
  return b;
}

ZmodMatrix ZmodMatrix::with_modulus_reduced(unsigned exponent) const {
  Modulus m = mod_.with_exponent(exponent);
  if (exponent > mod_.exponent()) throw DomainError("ZmodMatrix: cannot raise precision");
  ZmodMatrix r(m, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] % m.value();
  return r;
}

u64 dot_mod(const Modulus& m, const u64* a, const u64* b, std::size_t n) {
  const u64 q = m.value();
  if (q < (u64{1} << 32)) {
    // Each product is < q^2; accumulate as many as fit before reducing.
    const u64 qm1 = q - 1;
    const u64 bound = qm1 == 0 ? std::numeric_limits<u64>::max() : std::numeric_limits<u64>::max() / (qm1 * qm1);
    const std::size_t chunk = static_cast<std::size_t>(std::min<u64>(bound, 1u << 20));
    u64 total = 0;
    std::size_t i = 0;
    while (i < n) {
      std::size_t end = std::min(n, i + chunk);
      u64 acc = 0;
      for (; i < end; ++i) acc += a[i] * b[i];
      total = (total + acc % q) % q;
    }
    return total;
  }
  u128 acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<u128>(a[i]) * b[i];
    if ((i & 3) == 3) acc %= q;
  }
  return static_cast<u64>(acc % q);
}

std::vector<u64> ZmodMatrix::apply(std::span<const u64> v) const {
  if (v.size() != cols_) throw DomainError("ZmodMatrix::apply: dimension mismatch");
  std::vector<u64> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot_mod(mod_, a_.data() + i * cols_, v.data(), cols_);
  return out;
}

ZmodMatrix ZmodMatrix::shifted(u64 c) const {
  ZmodMatrix r = *this;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) r.at(i, i) = mod_.sub(r.at(i, i), mod_.reduce_u(c));
  return r;
}

ZmodMatrix ZmodMatrix::power(u64 e) const {
  if (!is_square()) throw DomainError("ZmodMatrix::power: matrix must be square");
  ZmodMatrix result = identity(mod_, rows_);
  ZmodMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ZmodMatrix operator*(const ZmodMatrix& a, const ZmodMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("ZmodMatrix: product dimension mismatch");
  ZmodMatrix bt = b.transpose();
  ZmodMatrix r(a.mod_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const u64* ai = a.a_.data() + i * a.cols_;
    for (std::size_t j = 0; j < b.cols_; ++j) {
      r.a_[i * r.cols_ + j] = dot_mod(a.mod_, ai, bt.a_.data() + j * bt.cols_, a.cols_);
    }
  }
  return r;
}

ZmodMatrix operator+(const ZmodMatrix& a, const ZmodMatrix& b) {
  ZmodMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.mod_.add(a.a_[k], b.a_[k]);
  return r;
}

ZmodMatrix operator-(const ZmodMatrix& a, const ZmodMatrix& b) {
  ZmodMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.mod_.sub(a.a_[k], b.a_[k]);
  return r;
}

std::vector<u64> FreeBasis::coordinates(std::span<const u64> v) const {
  std::vector<u64> c(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = v[pivots[i]];
  return c;
}

FreeBasis normalize_free_basis(const ZmodMatrix& columns) {
  const Modulus& m = columns.modulus();
  // Work on the transpose: each basis vector is a row, reduce to RREF with unit pivots.
  ZmodMatrix t = columns.transpose();
  const std::size_t k = t.rows(), n = t.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < k; ++col) {
    std::size_t found = k;
    for (std::size_t i = r; i < k; ++i) {
      if (m.is_unit(t.at(i, col))) {
        found = i;
        break;
      }
    }
    if (found == k) continue;
    if (found != r) std::swap_ranges(t.row(found).begin(), t.row(found).end(), t.row(r).begin());
    u64 inv = m.inv(t.at(r, col));
    for (auto& x : t.row(r)) x = m.mul(x, inv);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || t.at(i, col) == 0) continue;
      u64 f = t.at(i, col);
      auto ri = t.row(i);
      auto rr = t.row(r);
      for (std::size_t j = 0; j < n; ++j) ri[j] = m.sub(ri[j], m.mul(f, rr[j]));
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < k; ++i) {
    for (u64 x : t.row(i)) {
      if (x != 0) throw DomainError("normalize_free_basis: span is not a free summand");
    }
  }
  ZmodMatrix vecs(m, n, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) vecs.at(j, i) = t.at(i, j);
  return FreeBasis{std::move(vecs), std::move(pivots)};
}

FreeBasis unit_pivot_kernel(const ZmodMatrix& a) {
  const Modulus& m = a.modulus();
  ZmodMatrix t = a;
  const std::size_t rows = t.rows(), n = t.cols();
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m.is_unit(t.at(i, col))) {
        found = i;
        break;
      }
    }
    if (found == rows) continue;
    if (found != r) std::swap_ranges(t.row(found).begin(), t.row(found).end(), t.row(r).begin());
    u64 inv = m.inv(t.at(r, col));
    for (auto& x : t.row(r)) x = m.mul(x, inv);
    auto rr = t.row(r);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t.at(i, col) == 0) continue;
      u64 f = t.at(i, col);
      auto ri = t.row(i);
      // Earlier non-pivot columns of the pivot row may hold non-units, so
      // the whole row is updated, not just the tail.
      for (std::size_t j = 0; j < n; ++j) ri[j] = m.sub(ri[j], m.mul(f, rr[j]));
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    for (u64 x : t.row(i)) {
      if (x != 0) throw DomainError("unit_pivot_kernel: matrix has a non-unit elementary divisor");
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  ZmodMatrix vecs(m, n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    vecs.at(f, k) = 1;
    for (std::size_t i = 0; i < r; ++i) vecs.at(pivot_col_of_row[i], k) = m.neg(t.at(i, f));
  }
  return FreeBasis{std::move(vecs), std::move(free_cols)};
}

ZmodMatrix restrict_to(const ZmodMatrix& a, const FreeBasis& basis) {
  const std::size_t k = basis.rank();
  ZmodMatrix image = a * basis.vectors;
  ZmodMatrix r(a.modulus(), k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) r.at(i, j) = image.at(basis.pivots[i], j);
  }
  // The summand must be stable: image columns equal basis * coordinates.
  ZmodMatrix check = basis.vectors * r;
  if (!(check == image)) throw MismatchError("restrict_to: subspace is not stable under the operator");
  return r;
}

std::size_t rank_mod_p(const ZmodMatrix& a) {
  ZmodMatrix t = a.with_modulus_reduced(1);
  const Modulus& m = t.modulus();
  std::size_t r = 0;
  for (std::size_t col = 0; col < t.cols() && r < t.rows(); ++col) {
    std::size_t found = t.rows();
    for (std::size_t i = r; i < t.rows(); ++i)
      if (t.at(i, col) != 0) {
        found = i;
        break;
      }
    if (found == t.rows()) continue;
    if (found != r) std::swap_ranges(t.row(found).begin(), t.row(found).end(), t.row(r).begin());
    u64 inv = m.inv(t.at(r, col));
    for (auto& x : t.row(r)) x = m.mul(x, inv);
    for (std::size_t i = r + 1; i < t.rows(); ++i) {
      u64 f = t.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < t.cols(); ++j) t.at(i, j) = m.sub(t.at(i, j), m.mul(f, t.at(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace eisenlab
