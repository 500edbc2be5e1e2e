#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eisenlab/corering/newton.hpp"
#include "eisenlab/corering/zmod.hpp"
#include "eisenlab/hecke/eisenstein.hpp"
#include "eisenlab/invariants/invariants.hpp"

namespace eisenlab::harness {

inline constexpr int schema_version = 1;

struct MerelSummary {
  u64 value = 0;
  std::map<unsigned, u64> log_sum;    // s -> sum i log i in Z/p^s
  std::map<unsigned, bool> is_power;  // s -> p^s-th power
  friend bool operator==(const MerelSummary&, const MerelSummary&) = default;
};

struct HeckeSummary {
  u64 ell = 0;
  unsigned M = 0;
  unsigned e = 0;
  std::vector<u64> f;  // residues mod p^M, constant term first
  std::vector<Valuation> t_seq;
  std::vector<Vertex> np;
  std::vector<Component> components;
  Valuation f0_valuation = Valuation::infinite();
  std::map<u64, bool> generator_checks;
  unsigned zero_multiplicity = 0;
  bool refined = false;
  unsigned genus = 0;
  bool rank_consistent = false;
  friend bool operator==(const HeckeSummary&, const HeckeSummary&) = default;
};

struct Timing {
  double invariants_s = 0;
  double hecke_s = 0;
  friend bool operator==(const Timing&, const Timing&) = default;
};

/// One (N, p) row. Records without Hecke data are "invariants-only".
struct ResultRecord {
  int schema = schema_version;
  u64 N = 0, p = 0;
  unsigned t = 0;
  MerelSummary merel;
  unsigned ord_cap = 0;
  std::map<unsigned, OrdValue> ord_zeta;  // s -> ord_s(zeta)
  bool zeta_degenerate = false;
  std::map<unsigned, bool> lecouturier;  // s -> identities hold
  std::optional<HeckeSummary> hecke;
  std::optional<Timing> timing;

  bool invariants_only() const { return !hecke.has_value(); }
  std::optional<OrdValue> ord1() const;
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// A single JSON object, no trailing newline. Valuations >= M are written as
/// {"geq": M}, infinity as "inf".
std::string to_json_line(const ResultRecord& r);
/// Throws DomainError on malformed input or an unknown schema version.
ResultRecord parse_json_line(std::string_view line);

struct ComputeOptions {
  unsigned s_max = 0;  // 0: every s <= t
  bool hecke = true;
  std::optional<u64> ell;
  std::optional<unsigned> precision;
  bool timing = false;
};

/// Invariants (Merel, zeta orders, Lecouturier) for 1 <= s <= s_max and,
/// unless disabled, the Eisenstein-local Hecke data. When p does not divide
/// N - 1 the invariant maps are empty and the Hecke data is the trivial e = 0 report.
ResultRecord compute_record(u64 N, u64 p, const ComputeOptions& opts = {});

HeckeSummary summarize(const EisensteinReport& report, bool rank_consistent);

}  // namespace eisenlab::harness
