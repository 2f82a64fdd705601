#include "negacode/bch.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "negacode/error.hpp"

namespace negacode {
namespace {

using i64 = std::int64_t;

std::uint64_t power(std::uint64_t q, unsigned e) {
  const auto v = checked_pow(q, e);
  require(v.has_value() && *v < (std::uint64_t{1} << 62), Errc::OutOfRange,
          std::to_string(q) + "^" + std::to_string(e) + " overflows");
  return *v;
}

void require_field_size(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  require(pp.has_value(), Errc::HypothesisViolated, std::to_string(q) + " is not a prime power");
  require(pp->p != 2, Errc::HypothesisViolated, "q must be odd");
}

Residue reduce(i64 x, std::uint64_t two_n) {
  const i64 mod = static_cast<i64>(two_n);
  return static_cast<Residue>(((x % mod) + mod) % mod);
}

void check_delta(DimFormulaResult& r, std::pair<std::uint64_t, std::uint64_t> range, const DimOptions& opts) {
  require(r.delta >= range.first, Errc::HypothesisViolated,
          "delta = " + std::to_string(r.delta) + " below " + std::to_string(range.first));
  if (r.delta <= range.second) return;
  require(opts.allow_out_of_range, Errc::HypothesisViolated,
          "delta = " + std::to_string(r.delta) + " above the stated bound " + std::to_string(range.second));
  r.in_stated_range = false;
}

void assert_order(std::uint64_t q, std::uint64_t n, std::uint64_t expected) {
  const unsigned m = mult_order(q, 2 * n);
  require(m == expected, Errc::InternalInconsistency,
          "ord_{2n}(q) = " + std::to_string(m) + ", expected " + std::to_string(expected));
}

i64 checked_k(i64 k, std::uint64_t n) {
  require(k >= 0 && k <= static_cast<i64>(n), Errc::HypothesisViolated, "formula leaves [0, n]");
  return k;
}

// Exponents b, b + 2, ..., b + 2(count - 1).
struct Run {
  i64 b;
  std::uint64_t count;
  bool reversible;
};

void run_oracle(DimFormulaResult& r, const Run& run, const DimOptions& opts, bool mismatch_is_error) {
  if (!opts.run_oracle && r.in_stated_range) return;
  if (2 * r.n > kMaxTwoN) return;
  const auto s = orbit_union(r.q, 2 * r.n, run.b, run.count);
  r.oracle = OracleKind::CosetCount;
  r.oracle_k = r.n - s.size();
  if (!s.empty() && s.size() < r.n) r.run_bound = odd_run_bound(2 * r.n, s);

  const auto qm = checked_pow(r.q, static_cast<unsigned>(r.m));
  r.field_too_large = !qm || *qm > opts.field_bound;
  if (!r.field_too_large && r.n <= opts.polynomial_limit) {
    const auto ctx = cached_context(r.q, r.n, opts.field_bound);
    const auto code = bch_generator(ctx, run.count + 1, run.b);
    require(code.k() == *r.oracle_k && code.defining_set() == s, Errc::InternalInconsistency,
            "generator degree differs from the coset count");
    if (run.reversible) {
      const auto half = bch_generator(ctx, run.count / 2 + 1, 1);
      require(poly_lcm(half.generator(), reciprocal(half.generator())) == code.generator(),
              Errc::InternalInconsistency, "generator is not lcm(g, g*)");
      require(is_reversible(code), Errc::InternalInconsistency, "symmetric BCH code is not reversible");
    }
    r.oracle = OracleKind::Polynomial;
  }
  r.agrees = r.k == *r.oracle_k;
  if (!r.agrees && mismatch_is_error && r.in_stated_range)
    fail(Errc::FormulaMismatch, r.family + " branch " + r.branch + ": formula k = " + std::to_string(r.k) +
                                    ", constructed k = " + std::to_string(*r.oracle_k));
}

std::uint64_t projective_length(std::uint64_t q, unsigned m, unsigned min_m) {
  require_field_size(q);
  require(m >= min_m && m % 2 == 0, Errc::HypothesisViolated,
          "m must be even and >= " + std::to_string(min_m));
  return (power(q, m) - 1) / (2 * (q - 1));
}

// Odd a <= top with a != 0 mod q.
i64 count_nonmultiples(i64 top, i64 q) { return (top + 1) / 2 - (top / q + 1) / 2; }

// deg g(q, n, delta + 1, 1) and deg g(q, n, 2 delta + 1, 1 - 2 delta), counted
// leader by leader with the projective-length exceptions removed.
std::pair<i64, i64> recount_degrees(std::uint64_t q, unsigned m, std::uint64_t delta) {
  const i64 top = 2 * static_cast<i64>(delta) - 1;
  const i64 h = static_cast<i64>(power(q, m / 2));
  const i64 ell = (h - 1) / static_cast<i64>(q - 1);
  const i64 a_tilde = (h + 1) / 2;
  i64 exceptions = 0;
  for (auto a : projective_exceptions(q, m))
    if (static_cast<i64>(a) <= top) ++exceptions;
  i64 deg = m * (count_nonmultiples(top, static_cast<i64>(q)) - exceptions);
  if (a_tilde % 2 == 1 && a_tilde <= top) deg -= m / 2;
  i64 overlap = 0;
  for (i64 s = 1; s < static_cast<i64>(q); ++s)
    if ((s * ell) % 2 == 1 && s * ell <= top) overlap += m;
  return {deg, 2 * deg - overlap};
}

}  // namespace

NegacyclicCode bch_generator(const ContextPtr& ctx, std::uint64_t delta, std::int64_t b) {
  require(b % 2 != 0, Errc::EvenStart, "start exponent b = " + std::to_string(b) + " is even");
  require(delta >= 2, Errc::DeltaTooSmall, "designed distance must be >= 2");
  const auto& system = ctx->system;
  std::set<Residue> leaders;
  for (std::uint64_t i = 0; i + 1 < delta; ++i)
    leaders.insert(system.leader_of(reduce(b + 2 * static_cast<i64>(i), system.two_n())));
  std::vector<Residue> s;
  for (auto l : leaders) {
    const auto& mem = system.members(l);
    s.insert(s.end(), mem.begin(), mem.end());
  }
  return from_defining_set(ctx, s);
}

NegacyclicCode bch_generator(const BchSpec& spec, std::uint64_t bound) {
  require(spec.b % 2 != 0, Errc::EvenStart, "start exponent must be odd");
  require(spec.delta >= 2, Errc::DeltaTooSmall, "designed distance must be >= 2");
  return bch_generator(cached_context(spec.q, spec.n, bound), spec.delta, spec.b);
}

std::vector<Residue> orbit_union(std::uint64_t q, std::uint64_t two_n, std::int64_t b, std::uint64_t count) {
  require(two_n >= 2 && two_n <= kMaxTwoN, Errc::OutOfRange, "2n outside [2, 2^31]");
  require(std::gcd(q, two_n) == 1, Errc::GcdViolation, "gcd(q, 2n) != 1");
  std::set<Residue> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Residue s = reduce(b + 2 * static_cast<i64>(i), two_n);
    if (out.count(s)) continue;
    Residue x = s;
    do {
      out.insert(x);
      x = mul_mod(x, q, two_n);
    } while (x != s);
  }
  return {out.begin(), out.end()};
}

std::uint64_t odd_run_bound(std::uint64_t two_n, const std::vector<Residue>& s) {
  const std::uint64_t n = two_n / 2;
  std::vector<char> hit(n, 0);
  std::uint64_t odd = 0;
  for (auto a : s)
    if (a % 2 == 1 && a < two_n && !hit[a / 2]) {
      hit[a / 2] = 1;
      ++odd;
    }
  require(odd > 0, Errc::FullCode, "empty defining set");
  require(odd < n, Errc::ZeroCode, "defining set is all of T");
  // Start just after a gap so the circular run is seen in one pass.
  std::uint64_t start = 0;
  while (hit[start]) ++start;
  std::uint64_t best = 0;
  std::uint64_t cur = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (hit[(start + j) % n]) {
      best = std::max(best, ++cur);
    } else {
      cur = 0;
    }
  }
  return best + 1;
}

std::uint64_t bch_bound(const NegacyclicCode& code) {
  require(!code.is_zero_code(), Errc::ZeroCode, "bound undefined for the zero code");
  require(!code.is_full_code(), Errc::FullCode, "bound undefined for the full code");
  return odd_run_bound(2 * code.n(), code.defining_set());
}

ContextPtr cached_context(std::uint64_t q, std::uint64_t n, std::uint64_t bound) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, ContextPtr> cache;
  const auto key = std::make_tuple(q, n, bound);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ctx = make_context(field_of_order(q, bound), n, bound);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(ctx)).first->second;
}

std::string to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::None: return "none";
    case OracleKind::Polynomial: return "polynomial";
    case OracleKind::CosetCount: return "coset_count";
  }
  return "none";
}

std::pair<std::uint64_t, std::uint64_t> delta_range_4_4(std::uint64_t q, unsigned ell) {
  require_field_size(q);
  require(ell >= 2, Errc::HypothesisViolated, "l must be >= 2");
  return {2, (power(q, (ell - 1) / 2) + 4) / 2};
}

std::pair<std::uint64_t, std::uint64_t> delta_range_5_2(std::uint64_t q, unsigned m) {
  projective_length(q, m, 2);
  return {1, (power(q, (m - 1) / 2) + 1) / 2};
}

std::pair<std::uint64_t, std::uint64_t> delta_range_5_6(std::uint64_t q, unsigned m) {
  projective_length(q, m, 4);
  return {1, (power(q, m / 2) + 1) / 2};
}

std::pair<std::uint64_t, std::uint64_t> delta_range_5_13(std::uint64_t q, unsigned t, unsigned tau) {
  require_field_size(q);
  require(t >= 2 && tau >= 2, Errc::HypothesisViolated, "t >= 2 and tau >= 2 required");
  require(tau < 32, Errc::OutOfRange, "tau too large");
  const unsigned half = t << (tau - 1);
  return {1, power(q, (half - 1) / 2 + 1) / 2};
}

DimFormulaResult dim_thm_4_4(std::uint64_t q, unsigned ell, std::uint64_t delta, const DimOptions& opts) {
  DimFormulaResult r;
  r.family = "sec4";
  r.q = q;
  r.delta = delta;
  const auto range = delta_range_4_4(q, ell);
  r.n = (power(q, ell) + 1) / 2;
  assert_order(q, r.n, 2 * std::uint64_t{ell});
  r.m = 2 * std::uint64_t{ell};
  check_delta(r, range, opts);

  const i64 n = static_cast<i64>(r.n);
  const i64 L = ell;
  const i64 e = 2 * static_cast<i64>(delta) - 3;
  const i64 two_q = 2 * static_cast<i64>(q);
  const i64 eps = e % two_q;
  const i64 i = e / two_q;
  r.aux["ell"] = L;
  r.aux["i"] = i;
  // 2 delta - 3 = eps + 2qi with eps odd and eps < q.
  if (eps < static_cast<i64>(q)) {
    r.branch = "2delta-3=eps+2qi";
    r.aux["eps"] = eps;
    r.k = checked_k(n - 2 * L * (static_cast<i64>(delta) - 1 - i), r.n);
  } else {
    r.branch = "otherwise";
    r.k = checked_k(n - 2 * L * (static_cast<i64>(delta) - 1 - (e + two_q - 1) / two_q), r.n);
  }
  r.d_lb = 2 * delta - 1;
  run_oracle(r, {1, delta - 1, false}, opts, true);
  return r;
}

DimFormulaResult dim_thm_5_2(std::uint64_t q, unsigned m, std::uint64_t delta, const DimOptions& opts) {
  DimFormulaResult r;
  r.family = "sec52";
  r.q = q;
  r.delta = delta;
  const auto range = delta_range_5_2(q, m);
  r.n = projective_length(q, m, 2);
  assert_order(q, r.n, m);
  r.m = m;
  check_delta(r, range, opts);

  const i64 c = static_cast<i64>(ceil_div((2 * delta - 1) * (q - 1), 2 * q));
  r.branch = "single";
  r.aux["ceil"] = c;
  r.k = checked_k(static_cast<i64>(r.n) - 2 * static_cast<i64>(m) * c, r.n);
  r.d_lb = 2 * delta + 1;
  run_oracle(r, {1 - 2 * static_cast<i64>(delta), 2 * delta, true}, opts, true);
  return r;
}

DimFormulaResult dim_thm_5_6(std::uint64_t q, unsigned m, std::uint64_t delta, const DimOptions& opts) {
  DimFormulaResult r;
  r.family = "sec56";
  r.q = q;
  r.delta = delta;
  const auto range = delta_range_5_6(q, m);
  r.n = projective_length(q, m, 4);
  assert_order(q, r.n, m);
  r.m = m;
  check_delta(r, range, opts);

  const i64 n = static_cast<i64>(r.n);
  const i64 M = m;
  const i64 Q = static_cast<i64>(q);
  const i64 d = static_cast<i64>(delta);
  const i64 h = static_cast<i64>(power(q, m / 2));
  const i64 omega = 2 * (d - 1) * (Q - 1) / (h - 1);
  const i64 c = ((2 * d - 1) * (Q - 1) + 2 * Q - 1) / (2 * Q);
  const i64 base = n - M * c;
  r.aux["omega"] = omega;
  r.aux["ceil"] = c;
  r.aux["ell"] = (h - 1) / (Q - 1);
  r.aux["a_tilde"] = (h + 1) / 2;
  i64 k = 0;
  if (omega < (Q - 1) / 2) {
    r.branch = "omega<floor((q-1)/2)";
    k = base;
  } else if (m % 4 == 0) {
    r.branch = "m=4s";
    k = base + (2 * omega - Q + 2) * M / 2;
  } else if (q % 4 == 1 && omega % 2 == 1) {
    r.branch = "m=4s+2,q=4t+1,omega odd";
    k = base + (omega - (Q - 1) / 2) * M / 2;
  } else if ((q % 4 == 1 && omega % 2 == 0) || (q % 4 == 3 && omega % 2 == 1)) {
    r.branch = "m=4s+2,q=4t+1,omega even|q=4t-1,omega odd";
    k = base + (omega - (Q - 3) / 2) * M / 2;
  } else {
    r.branch = "m=4s+2,q=4t-1,omega even";
    k = base + (omega - (Q - 5) / 2) * M / 2;
  }
  r.k = checked_k(k, r.n);
  r.aux["k_recount"] = n - recount_degrees(q, m, delta).first;
  if (2 * d - 1 == h) {
    const i64 lead = n - M * (Q - 1) / 2 * (h / Q);
    if (m % 4 == 0)
      r.aux["k_special"] = lead + Q * M / 2;
    else if (q % 4 == 1)
      r.aux["k_special"] = lead + (Q + 1) * M / 4;
    else
      r.aux["k_special"] = lead + (Q + 3) * M / 4;
  }
  r.d_lb = delta;
  run_oracle(r, {1, delta, false}, opts, false);
  if (r.oracle_k)
    require(r.aux["k_recount"] == static_cast<i64>(*r.oracle_k), Errc::InternalInconsistency,
            "leader recount differs from the constructed dimension");
  return r;
}

DimFormulaResult dim_thm_5_8(std::uint64_t q, unsigned m, std::uint64_t delta, const DimOptions& opts) {
  DimFormulaResult r;
  r.family = "sec58";
  r.q = q;
  r.delta = delta;
  const auto range = delta_range_5_6(q, m);
  r.n = projective_length(q, m, 4);
  assert_order(q, r.n, m);
  r.m = m;
  check_delta(r, range, opts);

  const i64 n = static_cast<i64>(r.n);
  const i64 M = m;
  const i64 Q = static_cast<i64>(q);
  const i64 d = static_cast<i64>(delta);
  const i64 h = static_cast<i64>(power(q, m / 2));
  const i64 omega = 2 * (d - 1) * (Q - 1) / (h - 1);
  const i64 varpi = (2 * d - 1) * (Q - 1) / (h - 1);
  const i64 cv = (varpi + 1) / 2;
  const i64 c = ((2 * d - 1) * (Q - 1) + 2 * Q - 1) / (2 * Q);
  const i64 base = n - 2 * M * c;
  r.aux["omega"] = omega;
  r.aux["varpi"] = varpi;
  r.aux["ceil"] = c;
  r.aux["ell"] = (h - 1) / (Q - 1);
  i64 k = 0;
  i64 printed = 0;
  if (omega < (Q - 1) / 2) {
    // Printed with m in place of 2m; the degree argument needs 2 deg g - deg gcd.
    if (m % 4 == 0) {
      r.branch = "omega<floor((q-1)/2),m=4s";
      k = base;
      printed = n - M * c;
    } else {
      r.branch = "omega<floor((q-1)/2),m=4s+2";
      k = base + cv * M;
      printed = n - M * c + cv * M;
    }
  } else {
    if (m % 4 == 0) {
      r.branch = "m=4s";
      k = base + (2 * omega - Q + 2) * M;
    } else if (q % 4 == 1 && omega % 2 == 1) {
      r.branch = "m=4s+2,q=4t+1,omega odd";
      k = base + (omega - (Q - 1) / 2 + cv) * M;
    } else if ((q % 4 == 1 && omega % 2 == 0) || (q % 4 == 3 && omega % 2 == 1)) {
      r.branch = "m=4s+2,q=4t+1,omega even|q=4t-1,omega odd";
      k = base + (omega - (Q - 3) / 2 + cv) * M;
    } else {
      r.branch = "m=4s+2,q=4t-1,omega even";
      k = base + (omega - (Q - 5) / 2 + cv) * M;
    }
    printed = k;
  }
  r.k = checked_k(k, r.n);
  r.aux["k_as_printed"] = printed;
  r.aux["k_recount"] = n - recount_degrees(q, m, delta).second;
  if (2 * d - 1 == h) {
    const i64 lead = n - (Q - 1) * (h / Q) * M;
    r.aux["k_special"] = (m % 4 == 2 && q % 4 == 3) ? lead + (Q + 1) * M : lead + Q * M;
  }
  r.d_lb = 2 * delta + 1;
  run_oracle(r, {1 - 2 * d, 2 * delta, true}, opts, false);
  if (r.oracle_k)
    require(r.aux["k_recount"] == static_cast<i64>(*r.oracle_k), Errc::InternalInconsistency,
            "leader recount differs from the constructed dimension");
  return r;
}

DimFormulaResult dim_thm_5_13(std::uint64_t q, unsigned t, unsigned tau, std::uint64_t delta,
                              const DimOptions& opts) {
  DimFormulaResult r;
  r.family = "sec513";
  r.q = q;
  r.delta = delta;
  const auto range = delta_range_5_13(q, t, tau);
  const unsigned M = t << tau;
  const std::uint64_t qt1 = power(q, t) + 1;
  const std::uint64_t qm = power(q, M);
  require((qm - 1) % (2 * qt1) == 0, Errc::InternalInconsistency, "length is not an integer");
  r.n = (qm - 1) / (2 * qt1);
  assert_order(q, r.n, M);
  r.m = M;
  check_delta(r, range, opts);

  const i64 c = static_cast<i64>(ceil_div((2 * delta - 1) * (q - 1), 2 * q));
  r.branch = "single";
  r.aux["t"] = t;
  r.aux["tau"] = tau;
  r.aux["ceil"] = c;
  r.k = checked_k(static_cast<i64>(r.n) - static_cast<i64>(t) * (i64{1} << (tau + 1)) * c, r.n);
  r.d_lb = 2 * delta + 1;
  run_oracle(r, {1 - 2 * static_cast<i64>(delta), 2 * delta, true}, opts, true);
  return r;
}

}  // namespace negacode
