#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eisenlab/corering/newton.hpp"
#include "eisenlab/corering/poly.hpp"
#include "eisenlab/hecke/manin.hpp"

namespace eisenlab {

struct Component {
  Slope slope;
  unsigned degree;
  bool resolved;
  friend bool operator==(const Component&, const Component&) = default;
};

struct EisensteinDiagnostics {
  Valuation f0_valuation = Valuation::infinite();
  std::map<u64, bool> generator_checks;
  /// Multiplicity of y in charpoly(T_l - l - 1) mod p on the cuspidal plus
  /// quotient, before the joint refinement by auxiliary Hecke operators.
  unsigned zero_multiplicity = 0;
  /// True when the joint Fitting summand was strictly smaller than the
  /// generalized kernel of T_l - l - 1 (a non-Eisenstein maximal ideal also
  /// contained T_l - l - 1); f is then taken from the refined summand.
  bool refined = false;
  unsigned genus = 0;
};

struct EisensteinReport {
  u64 N = 0, p = 0;
  u64 ell = 0;  // 0 for the trivial report
  unsigned M = 0;
  unsigned e = 0;
  PadicPoly f{Modulus(5, 1)};
  /// t_1, ..., t_{e+1} of g = y f.
  std::vector<Valuation> t_seq;
  NewtonPolygon np;
  std::vector<Component> components;
  EisensteinDiagnostics diagnostics;
};

struct EisensteinOptions {
  std::optional<u64> ell;
  std::optional<unsigned> precision;
  /// Number of auxiliary primes q != N used to cut out the Eisenstein summand.
  unsigned aux_primes = 6;
};

/// Everything computed along the way, kept so later checks (generator
/// criterion, rescaling invariance, commutativity) reuse the same space.
class HeckeContext {
 public:
  HeckeContext(u64 N, u64 p, unsigned M);

  u64 N() const { return n_; }
  u64 p() const { return p_; }
  const Modulus& modulus() const { return mod_; }
  const ManinSpace& space() const { return *space_; }

  /// T_l on the plus quotient including the Eisenstein line (cached).
  const ZmodMatrix& hecke_full(u64 ell);
  /// T_l on the cuspidal plus quotient.
  ZmodMatrix hecke_cuspidal(u64 ell);

  /// Eisenstein-local summand of the plus quotient, set by the pipeline.
  const std::optional<FreeBasis>& local_summand() const { return local_; }
  void set_local_summand(FreeBasis b) { local_ = std::move(b); }

 private:
  u64 n_, p_;
  Modulus mod_;
  std::unique_ptr<ManinSpace> space_;
  std::optional<CuspidalBasis> cusp_;
  std::map<u64, ZmodMatrix> full_;
  std::optional<FreeBasis> local_;
};

/// Working precision v_p(N-1) + 3.
unsigned working_precision(u64 N, u64 p);

EisensteinReport eisenstein_local_factor(u64 N, u64 p, const EisensteinOptions& opts = {});
/// Variant that keeps the context alive for further checks.
EisensteinReport eisenstein_local_factor(HeckeContext& ctx, const EisensteinOptions& opts = {});

/// One entry per hull segment, refined by the residual polynomial when the
/// slope is integral.
std::vector<Component> component_slopes(const NewtonPolygon& np, const PadicPoly& f);

/// Whether T_{l'} - l' - 1 generates the Eisenstein ideal locally (its
/// linear coefficient in the chosen generator is a unit). Throws
/// MismatchError if that disagrees with is_good_prime(l').
bool generator_check(HeckeContext& ctx, EisensteinReport& report, u64 ell_prime);

struct RankConsistency {
  bool ok = false;
  bool f0_matches = false;
  bool t1_matches = false;
  bool last_zero = false;
  bool e_matches_kernel = false;
  /// Joint generalized 0-eigenspace of the T_q - q - 1 mod p.
  unsigned kernel_dimension = 0;
  /// Generalized 0-eigenspace of T_l - l - 1 alone; may exceed e when a
  /// non-Eisenstein eigenform happens to satisfy a_l == l + 1 mod p.
  unsigned single_operator_kernel = 0;
  std::string message;
};

/// Congruence-number and rank bookkeeping. e is compared with the joint
/// generalized 0-eigenspace mod p of T_l - l - 1 and the auxiliary
/// T_q - q - 1 on the cuspidal quotient.
RankConsistency rank_consistency_check(HeckeContext& ctx, const EisensteinReport& report, unsigned aux_primes = 6);

/// Characteristic polynomial of an operator restricted to the local summand.
PadicPoly local_charpoly(HeckeContext& ctx, const ZmodMatrix& full_operator);

/// t_1..t_{e+1} for g = y f.
std::vector<Valuation> t_values_of(const PadicPoly& f);

}  // namespace eisenlab
