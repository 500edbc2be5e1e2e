#include "eisenlab/harness/stats.hpp"

#include <algorithm>
#include <sstream>

#include "eisenlab/error.hpp"

namespace eisenlab::harness {

std::string Thousandths::str() const {
  std::string frac = std::to_string(value % 1000);
  return std::to_string(value / 1000) + "." + std::string(3 - frac.size(), '0') + frac;
}

Thousandths round_thousandths(u64 num, u64 den) {
  if (den == 0) throw DomainError("round_thousandths: zero denominator");
  // floor(1000 num / den + 1/2) without floating point.
  const u128 n = static_cast<u128>(num) * 2000 + den;
  return Thousandths{static_cast<u64>(n / (static_cast<u128>(den) * 2))};
}

Thousandths heuristic_share(u64 p, unsigned d) {
  if (d == 0) throw DomainError("heuristic_share: d must be positive");
  u128 pd = 1;
  for (unsigned i = 0; i < d; ++i) {
    pd *= p;
    // Anything below 1/2000 rounds to zero.
    if (pd > static_cast<u128>(p - 1) * 2000) return Thousandths{0};
  }
  return round_thousandths(p - 1, static_cast<u64>(pd));
}

StatsTable compute_stats(const std::vector<ResultRecord>& records) {
  if (records.empty()) throw DomainError("stats: no records");
  StatsTable t;
  t.p = records.front().p;
  std::map<unsigned, u64> counts;
  for (const auto& r : records) {
    if (r.p != t.p)
      throw DomainError("stats: mixed p in input (" + std::to_string(t.p) + " and " + std::to_string(r.p) + ")");
    if (!r.hecke) throw DomainError("stats: record N=" + std::to_string(r.N) + " has no rank (invariants-only)");
    ++counts[r.hecke->e];
    t.x = std::max(t.x, r.N);
    ++t.n;
  }
  const unsigned top = counts.rbegin()->first;
  for (unsigned d = 1; d <= top; ++d) {
    StatsRow row;
    row.d = d;
    row.count = counts.count(d) ? counts[d] : 0;
    row.r = round_thousandths(row.count, t.n);
    row.g = heuristic_share(t.p, d);
    t.rows[d] = row;
  }
  // Ranks of zero only arise for p not dividing N - 1; keep them visible.
  if (counts.count(0)) t.rows[0] = StatsRow{0, counts[0], round_thousandths(counts[0], t.n), Thousandths{0}};
  return t;
}

std::string format_stats(const StatsTable& t) {
  std::ostringstream os;
  os << "p = " << t.p << ", N <= " << t.x << ", n = " << t.n << "\n";
  os << "  d   count   r(d)    g(d)\n";
  for (const auto& [d, row] : t.rows) {
    os << "  " << d << std::string(d < 10 ? 3 : 2, ' ') << row.count;
    os << std::string(8 - std::min<std::size_t>(7, std::to_string(row.count).size()), ' ');
    os << row.r.str() << "   " << row.g.str() << "\n";
  }
  return os.str();
}

}  // namespace eisenlab::harness
