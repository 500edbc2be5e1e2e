#pragma once

#include <cstdint>
#include <vector>

namespace eisenlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

/// Distinct prime divisors in increasing order.
std::vector<u64> prime_factors(u64 n);

/// Primes in [lo, hi).
std::vector<u64> primes_in_range(u64 lo, u64 hi);

u64 ipow(u64 base, unsigned exp);

}  // namespace eisenlab
