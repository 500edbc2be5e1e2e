#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "eisenlab/harness/record.hpp"

namespace eisenlab::harness {

/// Primes N < max_N with N = 1 mod p, ascending.
std::vector<u64> sweep_primes(u64 p, u64 max_N);

struct LoadResult {
  std::vector<ResultRecord> records;
  /// Set when the final line was cut short (an interrupted writer); it is skipped.
  bool truncated_tail = false;
};

/// Reads a JSON-lines file. A malformed line anywhere but at the end is an error.
LoadResult load_records(std::istream& in);
LoadResult load_records(const std::string& path);

struct SweepOptions {
  u64 p = 5;
  u64 max_N = 2000;
  std::string out;
  bool resume = false;
  unsigned threads = 0;  // 0: hardware concurrency
  ComputeOptions compute;
  /// Called from the writer after each record is flushed.
  std::function<void(const ResultRecord&)> progress;
};

struct SweepSummary {
  std::size_t planned = 0;
  std::size_t skipped = 0;   // already present when resuming
  std::size_t computed = 0;
};

/// Computes every missing (N, p) record and appends it to opts.out, one JSON
/// line per record, flushed as it completes. Workers compute in parallel; a
/// single writer owns the file. Without `resume` the file is truncated first.
SweepSummary run_sweep(const SweepOptions& opts);

}  // namespace eisenlab::harness
