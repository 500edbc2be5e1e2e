#include "eisenlab/corering/dlog.hpp"

#include "eisenlab/error.hpp"

namespace eisenlab {

u64 smallest_generator(u64 N) {
  if (!is_prime(N)) throw DomainError("smallest_generator: N must be prime");
  if (N == 2) return 1;
  const auto qs = prime_factors(N - 1);
  for (u64 g = 2; g < N; ++g) {
    bool ok = true;
    for (u64 q : qs) {
      if (powmod(g, (N - 1) / q, N) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw DomainError("smallest_generator: no generator found");
}

DlogTable build_dlog_table(u64 N) {
  if (!is_prime(N) || N == 2) throw DomainError("build_dlog_table: N must be an odd prime");
  if (N >= (u64{1} << 26)) throw DomainError("build_dlog_table: N too large for a full table");
  DlogTable t;
  t.n_ = N;
  t.g_ = smallest_generator(N);
  t.log_.assign(N, 0);
  t.pow_.assign(N - 1, 0);
  u64 x = 1;
  for (u64 k = 0; k < N - 1; ++k) {
    t.pow_[k] = static_cast<std::uint32_t>(x);
    t.log_[x] = static_cast<std::uint32_t>(k);
    x = x * t.g_ % N;
  }
  return t;
}

bool is_power(u64 x, u64 N, u64 q) {
  if (q == 0 || (N - 1) % q != 0) throw DomainError("is_power: q must divide N-1");
  if (x % N == 0) throw DomainError("is_power: x must be a unit mod N");
  return powmod(x % N, (N - 1) / q, N) == 1;
}

}  // namespace eisenlab
