#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eisenlab/corering/arith.hpp"

namespace eisenlab::massey {

inline constexpr u64 default_selftest_seed = 0x5eed2024;

struct SelftestCheck {
  explicit SelftestCheck(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string note;  // counts of interesting sub-outcomes, first failure

  bool ok() const { return cases > 0 && failures == 0; }
};

struct SelftestReport {
  u64 seed = 0;
  std::vector<SelftestCheck> checks;
  /// <a>^5 for the identity of Z/5 with Z/5 coefficients found non-vanishing
  /// by both the linear-algebra search and the brute-force oracle.
  bool power5_nonvanishing = false;
  /// Number of cocycles a for which <a>^2 = a u a was confirmed.
  std::size_t cup_identity_count = 0;

  bool ok() const;
  const SelftestCheck* find(const std::string& name) const;
};

/// The randomized and exhaustive checks over finite-group cochains:
/// d o d = 0, Leibniz, <a>^2 = a u a, full vanishing vs. coordinate
/// relations, the index shift, the <a>^k oracle on Z/5, the law vs.
/// deformation equivalence, the deformation round trip and unipotent
/// concatenation. Deterministic for a given seed.
SelftestReport run_massey_selftest(u64 seed = default_selftest_seed);

}  // namespace eisenlab::massey
