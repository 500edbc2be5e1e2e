#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eisenlab/harness/record.hpp"

namespace eisenlab::harness {

/// (N, p) rows of the published rank table whose rank and ord_1 differ.
const std::vector<std::pair<u64, u64>>& published_rank_ord_exceptions();

struct VerifyCheck {
  std::string id;     // "a" .. "f"
  std::string title;
  bool fatal = false;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::size_t records = 0;
  std::size_t skipped = 0;  // invariants-only or p not dividing N - 1
  std::size_t coincidences = 0;  // e == ord_1 among e >= 3
  std::vector<std::pair<u64, u64>> exceptions;  // e != ord_1 among e >= 3
  std::vector<std::pair<u64, u64>> unexpected_exceptions;
  std::vector<std::pair<u64, u64>> missing_exceptions;  // listed, in range, but e == ord_1 here

  /// False if any fatal check has a violation.
  bool ok() const;
};

/// Checks, per record with both invariants and Hecke data:
///   a) e >= 2  <=>  Merel's number is a p-th power          (fatal)
///   b) e == 1  <=>  ord_1 == 1                              (fatal)
///   c) for e >= 2: e == 2  <=>  ord_1 == 2                  (informational)
///   d) e == ord_1 tally against the published exceptions    (informational)
///   e) the Lecouturier identities hold for every s          (fatal)
///   f) v_p(f(0)) == v_p(N - 1)                              (fatal)
VerifyReport verify_records(const std::vector<ResultRecord>& records);

std::string format_verify(const VerifyReport& r);

}  // namespace eisenlab::harness
