#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qsim {

// Values are 64-bit; every product is formed in 128 bits before reduction.
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 gcd(u64 a, u64 b);
// 0 when either argument is 0. DomainError if the result overflows 64 bits.
u64 lcm(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 modulus);

// a^x mod N by square-and-multiply. DomainError when N < 2.
u64 mod_exp(u64 base, u64 exponent, u64 modulus);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// floor(n^(1/k)), k >= 1.
u64 integer_root(u64 n, unsigned k);
// floor(sqrt(n))
u64 integer_sqrt(u64 n);

struct PerfectPower {
  u64 base;
  unsigned exponent;
};
// Smallest base b with n = b^k, k >= 2, if any.
std::optional<PerfectPower> perfect_power(u64 n);
// p when n = p^k for a prime p and k >= 1.
std::optional<u64> prime_power_base(u64 n);

// Least r > 0 with a^r = 1 mod N by direct stepping. DomainError unless
// gcd(a, N) = 1 and N >= 2.
u64 multiplicative_order(u64 a, u64 modulus);

// Distinct prime factors by trial division, ascending.
std::vector<u64> distinct_prime_factors(u64 n);

// Inverse of an odd a modulo 2^bits, 1 <= bits <= 64.
u64 inverse_mod_pow2(u64 a, unsigned bits);

// Smallest n with 2^n >= value.
unsigned ceil_log2(u128 value);

}  // namespace qsim
