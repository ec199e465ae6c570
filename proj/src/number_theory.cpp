#include "qsim/number_theory.hpp"

#include <limits>
#include <numeric>

#include "qsim/errors.hpp"

namespace qsim {

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u128 l = static_cast<u128>(a / gcd(a, b)) * b;
  if (l > std::numeric_limits<u64>::max()) throw DomainError("lcm overflows 64 bits");
  return static_cast<u64>(l);
}

u64 mul_mod(u64 a, u64 b, u64 modulus) { return static_cast<u64>(static_cast<u128>(a) * b % modulus); }

u64 mod_exp(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2");
  u64 result = 1;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient below 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = mod_exp(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// b^k, saturating at 2^64.
u128 saturating_pow(u64 b, unsigned k) {
  u128 acc = 1;
  const u128 cap = static_cast<u128>(1) << 64;
  for (unsigned i = 0; i < k; ++i) {
    acc *= b;
    if (acc >= cap) return cap;
  }
  return acc;
}

}  // namespace

u64 integer_root(u64 n, unsigned k) {
  if (k == 0) throw DomainError("root degree must be positive");
  if (k == 1 || n < 2) return n;
  // Binary search on the answer; k-th roots of 64-bit values fit in 32 bits for k >= 2.
  u64 lo = 1, hi = u64{1} << (64 / k + 1);
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    if (saturating_pow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

u64 integer_sqrt(u64 n) { return integer_root(n, 2); }

std::optional<PerfectPower> perfect_power(u64 n) {
  if (n < 4) return std::nullopt;
  std::optional<PerfectPower> best;
  for (unsigned k = 2; k < 64 && (u64{1} << k) <= n; ++k) {
    const u64 b = integer_root(n, k);
    if (saturating_pow(b, k) == n) best = PerfectPower{b, k};
  }
  return best;
}

std::optional<u64> prime_power_base(u64 n) {
  if (is_prime(n)) return n;
  if (const auto pp = perfect_power(n); pp && is_prime(pp->base)) return pp->base;
  return std::nullopt;
}

u64 multiplicative_order(u64 a, u64 modulus) {
  if (modulus < 2) throw DomainError("modulus must be at least 2");
  if (gcd(a % modulus, modulus) != 1) throw DomainError("order needs gcd(a, N) = 1");
  if (modulus == 2) return 1;
  const u64 base = a % modulus;
  u64 x = base;
  for (u64 r = 1; r < modulus; ++r) {
    if (x == 1) return r;
    x = mul_mod(x, base, modulus);
  }
  throw DomainError("order search did not terminate");
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 inverse_mod_pow2(u64 a, unsigned bits) {
  if ((a & 1U) == 0) throw DomainError("only odd values are invertible mod 2^k");
  if (bits < 1 || bits > 64) throw DomainError("bit width out of range");
  // Newton iteration doubles the number of correct low bits each step.
  u64 x = a;  // correct to 3 bits for odd a
  for (int i = 0; i < 6; ++i) x *= 2 - a * x;
  return bits == 64 ? x : x & ((u64{1} << bits) - 1);
}

unsigned ceil_log2(u128 value) {
  unsigned n = 0;
  while ((static_cast<u128>(1) << n) < value) ++n;
  return n;
}

}  // namespace qsim
