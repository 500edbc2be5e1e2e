#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eisenlab/corering/dlog.hpp"
#include "eisenlab/corering/zmod.hpp"

namespace eisenlab {

/// prod_{i=1}^{(N-1)/2} i^i mod N.
u64 merel_number(u64 N);

struct MerelReport {
  u64 N = 0, p = 0;
  u64 merel_value = 0;
  /// s -> sum_{i <= (N-1)/2} i * log_{p^s}(i) in Z/p^s.
  std::map<unsigned, u64> log_sum;
  /// s -> merel_value is a p^s-th power mod N.
  std::map<unsigned, bool> is_power;
};

/// Fills s = 1..s_max. The exponent test and the log-sum test are both run
/// and must agree (MismatchError otherwise).
MerelReport merel_report(u64 N, u64 p, unsigned s_max, const DlogTable& dlog);
MerelReport merel_report(u64 N, u64 p, unsigned s_max);

/// Element of (Z/p^s)[(Z/N)^x]; coefficient of [i] stored at index i-1.
class GroupRingElement {
 public:
  GroupRingElement(u64 N, Modulus m) : n_(N), mod_(m), c_(N - 1, 0) {}

  u64 N() const { return n_; }
  const Modulus& modulus() const { return mod_; }
  u64 coeff(u64 i) const { return c_[i - 1]; }
  void set(u64 i, u64 v) { c_[i - 1] = mod_.reduce_u(v); }
  const std::vector<u64>& coeffs() const { return c_; }

  /// Image under the augmentation map to Z/p^s.
  u64 augmentation() const;

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.n_ == b.n_ && a.mod_ == b.mod_ && a.c_ == b.c_;
  }

 private:
  u64 n_;
  Modulus mod_;
  std::vector<u64> c_;
};

/// zeta = sum_i B_2(i/N) [i] with B_2(x) = x^2 - x + 1/6, read in Z/p^s.
GroupRingElement zeta_element(u64 N, u64 p, unsigned s);

/// Either an exact order or "at least cap".
struct OrdValue {
  unsigned value = 0;
  bool capped = false;  // true: ord >= value (== cap)
  friend bool operator==(const OrdValue&, const OrdValue&) = default;
};

struct OrdResult {
  OrdValue ord;
  /// The image of zeta in the Sylow-p quotient ring vanished; ord is then
  /// reported as ">=cap".
  bool degenerate = false;
  /// Whether the full group-ring computation also ran (and agreed).
  bool full_path_checked = false;
};

/// Default search bound p^t + 1 with t = v_p(N-1).
unsigned default_ord_cap(u64 N, u64 p);

/// Largest r < cap with zeta in I_G^r. The Sylow-p projection is always
/// computed; the full (Z/p^s)[G] computation runs as well when
/// N - 1 <= full_path_limit and must agree.
OrdResult ord_zeta(u64 N, u64 p, unsigned s, unsigned cap, const DlogTable& dlog,
                   u64 full_path_limit = 300);
OrdResult ord_zeta(u64 N, u64 p, unsigned s, unsigned cap);

/// Same question for an arbitrary element; used by tests and ord_zeta.
OrdResult augmentation_order(const GroupRingElement& x, unsigned cap, const DlogTable& dlog,
                             u64 full_path_limit = 300);

struct ZetaReport {
  u64 N = 0, p = 0;
  unsigned cap = 0;
  std::map<unsigned, OrdValue> ord;  // s -> ord_s(zeta)
  bool degenerate = false;
};

ZetaReport zeta_report(u64 N, u64 p, unsigned s_max, const DlogTable& dlog);

/// l != 1 mod p and l is not a p-th power mod N.
bool is_good_prime(u64 ell, u64 N, u64 p);

/// Good primes in increasing order, starting the search at `from`.
std::vector<u64> good_primes(u64 N, u64 p, std::size_t count, u64 from = 2, u64 bound = 100000);

struct LecouturierResult {
  bool main_identity = false;  // sum i^2 log i == -(4/3) sum_{i<=(N-1)/2} i log i
  bool sum_log_zero = false;   // sum log i == 0
  bool sum_ilog_zero = false;  // sum i log i == 0
  bool ok() const { return main_identity && sum_log_zero && sum_ilog_zero; }
};

LecouturierResult lecouturier_identities(u64 N, u64 p, unsigned s, const DlogTable& dlog);
bool lecouturier_check(u64 N, u64 p, unsigned s, const DlogTable& dlog);
bool lecouturier_check(u64 N, u64 p, unsigned s);

/// v_p(N - 1) for a prime N.
unsigned tval(u64 N, u64 p);

}  // namespace eisenlab
