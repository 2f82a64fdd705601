#include "negacode/mds.hpp"

#include <algorithm>
#include <string>

#include "negacode/bch.hpp"
#include "negacode/error.hpp"

namespace negacode {

void validate(const MdsSpec& spec) {
  const auto pp = as_prime_power(spec.q);
  require(pp && pp->p != 2, Errc::HypothesisViolated, "q must be an odd prime power");
  require(spec.n >= 4 && spec.n % 2 == 0, Errc::HypothesisViolated, "n must be even and >= 4");
  require((spec.q - 1) % spec.n == 0, Errc::HypothesisViolated, "n must divide q - 1");
  require(spec.rho + 1 < spec.n / 2, Errc::HypothesisViolated, "rho must be < n/2 - 1");
}

std::vector<Residue> build_defining_set(const MdsSpec& spec) {
  validate(spec);
  const std::uint64_t two_n = 2 * spec.n;
  std::vector<Residue> s;
  for (std::uint64_t i = spec.n / 2 - spec.rho - 1; i <= spec.n / 2 + spec.rho; ++i) s.push_back((1 + 2 * i) % two_n);
  std::sort(s.begin(), s.end());
  return s;
}

Applicability applicability_check(const MdsSpec& spec) {
  const auto s = build_defining_set(spec);
  Applicability out;
  for (auto a : s) {
    const Residue image = mul_mod(a, spec.q, 2 * spec.n);
    if (!std::binary_search(s.begin(), s.end(), image)) out.witnesses.push_back(a);
  }
  out.q_closed = out.witnesses.empty();
  return out;
}

MdsConstruction construct_mds_lcd(const MdsSpec& spec, std::uint64_t bound) {
  const auto check = applicability_check(spec);
  if (!check.q_closed) {
    const Residue a = check.witnesses.front();
    fail(Errc::NotApplicable, "S is not closed under q: " + std::to_string(spec.q) + "*" + std::to_string(a) +
                                  " = " + std::to_string(mul_mod(a, spec.q, 2 * spec.n)) + " mod " +
                                  std::to_string(2 * spec.n));
  }
  auto code = from_defining_set(cached_context(spec.q, spec.n, bound), build_defining_set(spec));
  const std::uint64_t k = code.k();
  return {std::move(code), spec.n, k, 2 * spec.rho + 3};
}

}  // namespace negacode
