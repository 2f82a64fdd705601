#include "negacode/numtheory.hpp"

#include <string>

#include "negacode/error.hpp"

namespace negacode {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    while (x % d == 0) x /= d;
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % modulus);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t r = 1;
  base %= modulus;
  while (exponent) {
    if (exponent & 1) r = mul_mod(r, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return r;
}

unsigned mult_order(std::uint64_t q, std::uint64_t modulus) {
  require(modulus >= 1, Errc::InvalidArgument, "modulus must be positive");
  require(std::gcd(q, modulus) == 1, Errc::NotCoprime,
          "gcd(" + std::to_string(q) + ", " + std::to_string(modulus) + ") != 1");
  if (modulus == 1) return 1;
  unsigned m = 1;
  std::uint64_t x = q % modulus;
  while (x != 1) {
    x = mul_mod(x, q, modulus);
    ++m;
  }
  return m;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  PrimePower pp{factors.front(), 0};
  while (q > 1) {
    q /= pp.p;
    ++pp.e;
  }
  return pp;
}

}  // namespace negacode
