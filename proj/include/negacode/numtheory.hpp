#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace negacode {

bool is_prime(std::uint64_t x);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

/// Integer power; returns nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Smallest m >= 1 with q^m = 1 (mod modulus). Throws NotCoprime when gcd(q, modulus) != 1.
unsigned mult_order(std::uint64_t q, std::uint64_t modulus);

/// Splits q = p^e with p prime; nullopt when q is not a prime power.
struct PrimePower {
  std::uint64_t p;
  unsigned e;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace negacode
