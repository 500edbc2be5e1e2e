#include "eisenlab/corering/howell.hpp"

#include <algorithm>

#include "eisenlab/error.hpp"

namespace eisenlab {

namespace {

// row -= f * other, over both the vector and its coefficient record.
void axpy(const Modulus& m, std::vector<u64>& row, const std::vector<u64>& other, u64 f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (other[j] != 0) row[j] = m.sub(row[j], m.mul(f, other[j]));
  }
}

bool is_zero(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

}  // namespace

HowellBasis::HowellBasis(const ZmodMatrix& generators)
    : mod_(generators.modulus()), dim_(generators.rows()), ngens_(generators.cols()) {
  const Modulus& m = mod_;
  const unsigned M = m.exponent();
  std::vector<Row> pool;
  for (std::size_t j = 0; j < ngens_; ++j) {
    Row r{0, 0, generators.column(j), std::vector<u64>(ngens_, 0)};
    r.coeff[j] = 1;
    if (!is_zero(r.vec)) pool.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < dim_ && !pool.empty(); ++col) {
    std::size_t best = pool.size();
    unsigned best_v = M;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      u64 x = pool[i].vec[col];
      if (x == 0) continue;
      unsigned v = m.valuation(x).value();
      if (v < best_v) {
        best_v = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == pool.size()) continue;

    Row piv = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    const u64 ppow = m.p_pow(best_v);
    // Scale so that the pivot entry is exactly p^v.
    u64 unit = m.inv(piv.vec[col] / ppow);
    for (auto& x : piv.vec) x = m.mul(x, unit);
    for (auto& x : piv.coeff) x = m.mul(x, unit);

    for (auto& r : pool) {
      u64 x = r.vec[col];
      if (x == 0) continue;
      u64 f = x / ppow;  // exact: v(x) >= best_v
      axpy(m, r.vec, piv.vec, f);
      axpy(m, r.coeff, piv.coeff, f);
    }
    // The annihilator row p^{M-v} * piv vanishes in this column but may carry
    // information further right.
    if (best_v > 0) {
      u64 s = m.p_pow(M - best_v);
      Row ann{0, 0, piv.vec, piv.coeff};
      for (auto& x : ann.vec) x = m.mul(x, s);
      for (auto& x : ann.coeff) x = m.mul(x, s);
      if (!is_zero(ann.vec)) pool.push_back(std::move(ann));
    }
    std::erase_if(pool, [](const Row& r) { return is_zero(r.vec); });

    piv.col = col;
    piv.val = best_v;
    rows_.push_back(std::move(piv));
  }
}

std::optional<std::vector<u64>> HowellBasis::solve(std::span<const u64> b) const {
  if (b.size() != dim_) throw DomainError("HowellBasis::solve: dimension mismatch");
  const Modulus& m = mod_;
  std::vector<u64> rest(b.begin(), b.end());
  for (auto& x : rest) x = m.reduce_u(x);
  std::vector<u64> coeff(ngens_, 0);
  for (const Row& r : rows_) {
    u64 x = rest[r.col];
    if (x == 0) continue;
    if (m.valuation(x).value() < r.val) return std::nullopt;
    u64 f = x / m.p_pow(r.val);
    axpy(m, rest, r.vec, f);
    for (std::size_t j = 0; j < ngens_; ++j) coeff[j] = m.add(coeff[j], m.mul(f, r.coeff[j]));
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

bool HowellBasis::contains(std::span<const u64> b) const { return solve(b).has_value(); }

std::vector<std::vector<u64>> HowellBasis::rows_from(std::size_t col) const {
  std::vector<std::vector<u64>> out;
  for (const Row& r : rows_) {
    if (r.col >= col) out.push_back(r.vec);
  }
  return out;
}

ZmodMatrix kernel_generators(const ZmodMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  ZmodMatrix stacked(a.modulus(), m + n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) stacked.at(i, j) = a.at(i, j);
    stacked.at(m + j, j) = 1;
  }
  auto rows = HowellBasis(stacked).rows_from(m);
  ZmodMatrix k(a.modulus(), n, rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) k.at(i, c) = rows[c][m + i];
  return k;
}

Membership howell_membership(const ZmodMatrix& a, std::span<const u64> b) {
  HowellBasis h(a);
  auto w = h.solve(b);
  if (!w) return {false, {}};
  return {true, std::move(*w)};
}

}  // namespace eisenlab
