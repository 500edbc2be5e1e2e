#pragma once

#include <map>
#include <string>
#include <vector>

#include "eisenlab/harness/record.hpp"

namespace eisenlab::harness {

/// A fraction rounded half-up to three decimals, held exactly as thousandths.
struct Thousandths {
  u64 value = 0;
  std::string str() const;  // "0.912"
  friend bool operator==(const Thousandths&, const Thousandths&) = default;
};

/// round_half_up(num / den * 1000); den > 0.
Thousandths round_thousandths(u64 num, u64 den);

struct StatsRow {
  unsigned d = 0;
  u64 count = 0;
  Thousandths r;  // count / n
  Thousandths g;  // (p-1) / p^d
};

struct StatsTable {
  u64 p = 0;
  u64 x = 0;  // largest N in the input
  u64 n = 0;
  std::map<unsigned, StatsRow> rows;  // every d from 1 to the largest observed rank
};

/// Heuristic share (p-1)/p^d of rank d.
Thousandths heuristic_share(u64 p, unsigned d);

/// Rank distribution of the records. Throws DomainError on mixed p, on an
/// empty input, or on a record without Hecke data.
StatsTable compute_stats(const std::vector<ResultRecord>& records);

std::string format_stats(const StatsTable& t);

}  // namespace eisenlab::harness
