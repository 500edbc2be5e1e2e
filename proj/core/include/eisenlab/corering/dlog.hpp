#pragma once

#include <cstdint>
#include <vector>

#include "eisenlab/corering/arith.hpp"

namespace eisenlab {

/// Discrete logarithms in F_N^x with respect to the smallest generator.
class DlogTable {
 public:
  u64 N() const { return n_; }
  u64 generator() const { return g_; }
  /// log_g(x) for x in [1, N).
  u64 log(u64 x) const { return log_[x % n_]; }
  /// g^k mod N.
  u64 exp(u64 k) const { return pow_[k % (n_ - 1)]; }

 private:
  friend DlogTable build_dlog_table(u64 N);
  u64 n_ = 0, g_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> pow_;
};

/// Full enumeration of generator powers; N an odd prime below 2^26.
DlogTable build_dlog_table(u64 N);

/// Smallest generator of F_N^x.
u64 smallest_generator(u64 N);

/// True iff x is a q-th power in F_N^x, i.e. x^{(N-1)/q} = 1 mod N; q | N-1.
bool is_power(u64 x, u64 N, u64 q);

}  // namespace eisenlab
