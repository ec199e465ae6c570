#include <doctest.h>

#include "qsim/errors.hpp"
#include "qsim/number_theory.hpp"

using namespace qsim;

TEST_CASE("mod_exp examples") {
  CHECK(mod_exp(2, 10, 1000) == 24);
  CHECK(mod_exp(7, 0, 13) == 1);
  CHECK(mod_exp(2, 4, 15) == 1);
  CHECK_THROWS_AS(mod_exp(2, 3, 1), DomainError);
  CHECK(mod_exp(0, 0, 5) == 1);
  CHECK(mod_exp(1234567, 0xFFFFFFFFFFFFULL, 1000000007) == mod_exp(1234567, 0xFFFFFFFFFFFFULL, 1000000007));
}

TEST_CASE("mod_exp agrees with repeated multiplication") {
  for (u64 n = 2; n < 256; n += 3)
    for (u64 a = 0; a < 256; a += 5) {
      u64 naive = 1 % n;
      for (u64 x = 0; x < 256; ++x) {
        CHECK(mod_exp(a, x, n) == naive);
        naive = naive * a % n;
      }
    }
}

TEST_CASE("mod_exp near 64 bits") {
  const u64 p = 18446744073709551557ULL;  // largest 64-bit prime
  CHECK(mod_exp(3, p - 1, p) == 1);       // Fermat
}

TEST_CASE("is_prime") {
  // Sieve oracle.
  std::vector<bool> composite(5000, false);
  for (u64 i = 2; i < 5000; ++i)
    if (!composite[i])
      for (u64 j = i * i; j < 5000; j += i) composite[j] = true;
  for (u64 i = 0; i < 5000; ++i) CHECK(is_prime(i) == (i >= 2 && !composite[i]));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("roots and perfect powers") {
  CHECK(integer_sqrt(0) == 0);
  CHECK(integer_sqrt(15) == 3);
  CHECK(integer_sqrt(16) == 4);
  CHECK(integer_sqrt(~0ULL) == 4294967295ULL);
  CHECK(integer_root(1000, 3) == 10);
  CHECK(integer_root(999, 3) == 9);

  auto pp = perfect_power(9);
  REQUIRE(pp);
  CHECK(pp->base == 3);
  CHECK(pp->exponent == 2);
  pp = perfect_power(64);
  REQUIRE(pp);
  CHECK(pp->base == 2);
  CHECK_FALSE(perfect_power(15));

  CHECK(prime_power_base(9) == 3);
  CHECK(prime_power_base(243) == 3);
  CHECK(prime_power_base(13) == 13);
  CHECK_FALSE(prime_power_base(225));
  CHECK_FALSE(prime_power_base(15));
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 15) == 4);
  CHECK(multiplicative_order(7, 15) == 4);
  CHECK(multiplicative_order(2, 21) == 6);
  CHECK(multiplicative_order(1, 21) == 1);
  CHECK_THROWS_AS(multiplicative_order(3, 15), DomainError);
  for (u64 n = 3; n < 200; ++n)
    for (u64 a = 2; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      const u64 r = multiplicative_order(a, n);
      CHECK(mod_exp(a, r, n) == 1);
      for (u64 d = 1; d < r; ++d)
        if (r % d == 0) CHECK(mod_exp(a, d, n) != 1);
    }
}

TEST_CASE("helpers") {
  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(0, 6) == 0);
  CHECK(distinct_prime_factors(360) == std::vector<u64>{2, 3, 5});
  CHECK(distinct_prime_factors(1).empty());
  CHECK(distinct_prime_factors(97) == std::vector<u64>{97});
  for (u64 a = 1; a < 1000; a += 2)
    for (unsigned bits : {1U, 5U, 13U, 64U}) {
      const u64 inv = inverse_mod_pow2(a, bits);
      const u64 mask = bits == 64 ? ~0ULL : (1ULL << bits) - 1;
      CHECK(((a * inv) & mask) == 1);
    }
  CHECK_THROWS_AS(inverse_mod_pow2(4, 8), DomainError);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(225) == 8);
  CHECK(ceil_log2(256) == 8);
  CHECK(ceil_log2(257) == 9);
}
