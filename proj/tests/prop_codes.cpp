#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <set>

#include "doctest.h"

#include "negacode/analysis.hpp"
#include "negacode/bch.hpp"
#include "negacode/code.hpp"
#include "negacode/error.hpp"
#include "negacode/mds.hpp"
#include "oracles.hpp"
#include "prop_util.hpp"

using namespace negacode;

namespace {

// Defining set from a random subset of the odd leaders.
std::vector<Residue> random_defining_set(const CosetSystem& sys) {
  std::set<Residue> s;
  for (auto x : sys.X())
    if (prop::uniform(0, 1)) s.insert(sys.members(x).begin(), sys.members(x).end());
  return {s.begin(), s.end()};
}

bool symmetric(const CosetSystem& sys, const std::vector<Residue>& s) {
  std::set<Residue> set(s.begin(), s.end());
  return std::all_of(s.begin(), s.end(), [&](Residue a) { return set.count(sys.negate(a)) > 0; });
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

oracle::Vec as_vec(const Poly& p) { return oracle::Vec(p.coeffs().begin(), p.coeffs().end()); }

struct Length {
  std::uint64_t q, n;
};

// Lengths whose splitting field stays small.
const std::vector<Length> kLengths = {
    {3, 4}, {3, 5}, {3, 7}, {3, 10}, {3, 13}, {3, 14}, {3, 20}, {3, 11}, {5, 3}, {5, 6},
    {5, 7}, {5, 12}, {5, 13}, {7, 4}, {7, 5}, {7, 8}, {7, 12}, {9, 5}, {9, 10}, {11, 6},
};

}  // namespace

TEST_SUITE("prop.code") {
  TEST_CASE("LCD: hull zero, g self-reciprocal and S = -S agree") {
    std::size_t checked = 0;
    for (std::uint64_t n : {7, 13, 14}) {
      const auto ctx = make_context(field_of_order(3), n);
      const auto& xs = ctx->system.X();
      REQUIRE(xs.size() < 20);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
        std::vector<Residue> s;
        for (std::size_t i = 0; i < xs.size(); ++i)
          if (mask >> i & 1) s.insert(s.end(), ctx->system.members(xs[i]).begin(), ctx->system.members(xs[i]).end());
        std::sort(s.begin(), s.end());
        const auto c = from_defining_set(ctx, s);
        const bool lcd = is_lcd(c);
        REQUIRE(lcd == (hull_dim(c) == 0));
        REQUIRE(lcd == is_self_reciprocal(c.generator()));
        REQUIRE(lcd == symmetric(ctx->system, s));
        REQUIRE(lcd == is_reversible(c));
        if (!c.is_zero_code() && !c.is_full_code()) REQUIRE(lcd == (hull_dim_matrix(c) == 0));
        ++checked;
      }
    }
    for (int i = 0; i < 1000; ++i) {
      const auto& len = kLengths[prop::uniform(0, kLengths.size() - 1)];
      const auto ctx = cached_context(len.q, len.n);
      const auto s = random_defining_set(ctx->system);
      const auto c = from_defining_set(ctx, s);
      REQUIRE(is_lcd(c) == symmetric(ctx->system, s));
      REQUIRE(is_lcd(c) == is_self_reciprocal(c.generator()));
      ++checked;
    }
    CHECK(checked >= 1000);
  }

  TEST_CASE("n = 14 over GF(3): every code is reversible") {
    const auto ctx = make_context(field_of_order(3), 14);
    for (auto x : ctx->system.X()) REQUIRE(is_symmetric(ctx->system, x));
    const auto all = enumerate_reversible(ctx);
    REQUIRE(all.size() == (std::size_t{1} << ctx->system.X().size()) - 1);
  }

  TEST_CASE("m_s self-reciprocal iff C_s = -C_s") {
    std::size_t checked = 0;
    for (const auto& len : kLengths) {
      const auto ctx = cached_context(len.q, len.n);
      const auto self = self_reciprocal_factors(ctx);
      for (auto x : ctx->system.X()) {
        const Poly m = ctx->minimal(x);
        REQUIRE(is_self_reciprocal(m) == is_symmetric(ctx->system, x));
        REQUIRE((std::find(self.begin(), self.end(), x) != self.end()) == is_symmetric(ctx->system, x));
        ++checked;
      }
    }
    CHECK(checked > 50);
  }

  TEST_CASE("dual and hull: polynomial against matrix") {
    std::size_t checked = 0;
    for (int i = 0; i < 1500; ++i) {
      const auto& len = kLengths[prop::uniform(0, kLengths.size() - 1)];
      const auto ctx = cached_context(len.q, len.n);
      const auto c = from_defining_set(ctx, random_defining_set(ctx->system));
      if (c.is_zero_code() || c.is_full_code()) continue;
      const auto d = dual(c);
      REQUIRE(d.k() == c.n() - c.k());
      REQUIRE(dual(d) == c);
      const auto g = generator_matrix(c);
      const auto h = parity_check_matrix(c);
      REQUIRE(static_cast<std::uint64_t>(h.rows()) == d.k());
      REQUIRE(multiply_transpose(g, h).is_zero());
      REQUIRE(rank(g) == c.k());
      REQUIRE(rank(h) == d.k());
      REQUIRE(hull_dim(c) == hull_dim_matrix(c));
      REQUIRE(hull(c).k() == hull_dim(c));
      ++checked;
    }
    CHECK(checked >= 1000);
  }

  TEST_CASE("x + 1 as the only self-reciprocal factor") {
    for (const auto& [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 3}, {3, 5}, {7, 3}, {11, 3}}) {
      const std::uint64_t n = (*checked_pow(q, m) - 1) / 2;
      const auto ctx = cached_context(q, n);
      REQUIRE(x_plus_1_is_only_self_reciprocal_factor(ctx));
      REQUIRE(self_reciprocal_factors(ctx) == std::vector<Residue>{n});
      const auto closed = count_reversible_closed_form(q, m);
      REQUIRE(closed.exponent == ctx->system.Y().size());
    }
  }
}

TEST_SUITE("prop.bch") {
  TEST_CASE("dimension formulas against the constructed codes") {
    DimOptions opts;
    std::size_t checked = 0;
    auto run = [&](const std::function<DimFormulaResult(std::uint64_t)>& f, std::pair<std::uint64_t, std::uint64_t> range,
                   bool formula_exact) {
      for (std::uint64_t delta = range.first; delta <= range.second; ++delta) {
        DimFormulaResult r;
        try {
          r = f(delta);
        } catch (const Error& e) {
          // Codes whose formula leaves [0, n] are reported, never guessed.
          REQUIRE(e.code() == Errc::HypothesisViolated);
          continue;
        }
        REQUIRE(r.oracle != OracleKind::None);
        REQUIRE(r.oracle_k);
        REQUIRE(r.m == mult_order(r.q, 2 * r.n));
        if (formula_exact) REQUIRE(r.agrees);
        else REQUIRE(static_cast<std::uint64_t>(r.aux.at("k_recount")) == *r.oracle_k);
        if (r.run_bound && *r.oracle_k > 0) REQUIRE(*r.run_bound >= r.d_lb);
        ++checked;
      }
    };
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13})
      for (unsigned ell = 2; ell <= 9; ++ell) {
        const auto qe = checked_pow(q, ell);
        if (!qe || *qe > 200000) break;
        run([&](std::uint64_t d) { return dim_thm_4_4(q, ell, d, opts); }, delta_range_4_4(q, ell), true);
      }
    for (std::uint64_t q : {3, 5, 7, 9, 11})
      for (unsigned m = 2; m <= 10; m += 2) {
        const auto qe = checked_pow(q, m);
        if (!qe || *qe > 600000) break;
        std::pair<std::uint64_t, std::uint64_t> r52, r56;
        try {
          r52 = delta_range_5_2(q, m);
          r56 = delta_range_5_6(q, m);
        } catch (const Error&) {
          continue;
        }
        run([&](std::uint64_t d) { return dim_thm_5_2(q, m, d, opts); }, r52, true);
        run([&](std::uint64_t d) { return dim_thm_5_6(q, m, d, opts); }, r56, false);
        run([&](std::uint64_t d) { return dim_thm_5_8(q, m, d, opts); }, r56, false);
      }
    for (const auto& [q, t, tau] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
             {3, 2, 2}, {5, 2, 2}, {3, 3, 2}, {7, 2, 2}, {3, 2, 3}}) {
      run([&](std::uint64_t d) { return dim_thm_5_13(q, t, tau, d, opts); }, delta_range_5_13(q, t, tau), true);
    }
    CHECK(checked >= 200);
    MESSAGE("formula evaluations: " << checked);
  }

  TEST_CASE("reversible BCH codes of the symmetric families") {
    for (std::uint64_t q : {3, 5, 7})
      for (unsigned m : {4u, 6u}) {
        const std::uint64_t n = (*checked_pow(q, m) - 1) / (2 * (q - 1));
        if (n > 4096) continue;
        const auto ctx = cached_context(q, n);
        const auto [lo, hi] = delta_range_5_2(q, m);
        for (std::uint64_t delta = lo; delta <= hi; ++delta) {
          const auto c = bch_generator(ctx, 2 * delta + 1, 1 - 2 * static_cast<std::int64_t>(delta));
          REQUIRE(is_reversible(c));
          REQUIRE(bch_bound(c) >= 2 * delta + 1);
        }
      }
  }

  TEST_CASE("BCH bound never exceeds the exact distance") {
    std::size_t checked = 0, oracle_checked = 0;
    const std::vector<Length> small = {{3, 4},  {3, 5},  {3, 7},  {3, 8},  {3, 10}, {3, 11}, {3, 13}, {3, 14},
                                       {3, 16}, {3, 20}, {5, 3},  {5, 6},  {5, 7},  {5, 12}, {5, 13}, {7, 4},
                                       {7, 5},  {7, 8},  {7, 12}, {9, 5},  {9, 10}, {11, 6}, {13, 7}, {13, 14}};
    DistanceOptions opts;
    opts.budget = 200000;
    opts.threads = 1;
    for (int i = 0; i < 2500 && checked < 1200; ++i) {
      const auto& len = small[prop::uniform(0, small.size() - 1)];
      const auto ctx = cached_context(len.q, len.n);
      const std::uint64_t delta = prop::uniform(2, len.n);
      const std::int64_t b = 2 * static_cast<std::int64_t>(prop::uniform(0, len.n - 1)) + 1;
      const auto c = bch_generator(ctx, delta, b);
      if (c.is_zero_code() || c.is_full_code()) continue;
      const auto bound = bch_bound(c);
      REQUIRE(bound >= delta);
      DistanceResult d;
      try {
        d = min_distance(c, opts);
      } catch (const Error& e) {
        REQUIRE(e.code() == Errc::BudgetExceeded);
        continue;
      }
      REQUIRE(bound <= d.d);
      REQUIRE(d.d <= c.n() - c.k() + 1);
      ++checked;
      const auto f = c.field();
      if (f->degree() == 1 && *checked_pow(len.q, static_cast<unsigned>(c.k())) <= 20000) {
        REQUIRE(oracle::min_weight(as_vec(c.generator()), static_cast<long>(c.n()), static_cast<long>(len.q)) ==
                static_cast<long>(d.d));
        ++oracle_checked;
      }
    }
    CHECK(checked >= 1000);
    CHECK(oracle_checked >= 100);
    MESSAGE("distances: " << checked << ", with schoolbook oracle: " << oracle_checked);
  }

  TEST_CASE("distance does not depend on the thread count") {
    for (int i = 0; i < 40; ++i) {
      const auto q = std::uint64_t{3};
      const std::uint64_t n = std::vector<std::uint64_t>{14, 20, 28, 41}[prop::uniform(0, 3)];
      const auto ctx = cached_context(q, n);
      const auto c = bch_generator(ctx, prop::uniform(2, 6), 1);
      if (c.is_zero_code() || c.is_full_code()) continue;
      DistanceOptions one, four;
      one.threads = 1;
      four.threads = 4;
      one.budget = four.budget = 2'000'000;
      std::uint64_t d1 = 0, d4 = 0;
      try {
        d1 = min_distance(c, one).d;
        d4 = min_distance(c, four).d;
      } catch (const Error& e) {
        REQUIRE(e.code() == Errc::BudgetExceeded);
        continue;
      }
      REQUIRE(d1 == d4);
    }
  }
}

TEST_SUITE("prop.mds") {
  TEST_CASE("constructed codes are MDS and LCD") {
    std::size_t constructed = 0, flagged = 0, certified = 0;
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31}) {
      for (std::uint64_t n = 2; n <= q - 1; n += 2) {
        if ((q - 1) % n != 0) continue;
        for (std::uint64_t rho = 0; rho + 1 < n / 2; ++rho) {
          const MdsSpec spec{q, n, rho};
          const auto s = build_defining_set(spec);
          REQUIRE(s.size() == 2 * (rho + 1));
          const auto app = applicability_check(spec);
          REQUIRE(app.q_closed == app.witnesses.empty());
          if (!app.q_closed) {
            ++flagged;
            continue;
          }
          const auto mds = construct_mds_lcd(spec);
          REQUIRE(mds.k == n - 2 * (rho + 1));
          REQUIRE(mds.d == 2 * rho + 3);
          REQUIRE(is_lcd(mds.code));
          ++constructed;
          if (binomial(n, n - mds.k) > 200000) continue;
          REQUIRE(certify_mds(mds.code, 200000));
          DistanceOptions opts;
          opts.threads = 1;
          REQUIRE(min_distance(mds.code, opts).d == n - mds.k + 1);
          ++certified;
        }
      }
    }
    CHECK(constructed > 20);
    CHECK(certified > 10);
    MESSAGE("mds grid: " << constructed << " constructed, " << certified << " certified, " << flagged << " flagged");
  }

  TEST_CASE("certify_mds iff d = n - k + 1") {
    std::size_t checked = 0;
    for (int i = 0; i < 1500; ++i) {
      const auto& len = kLengths[prop::uniform(0, kLengths.size() - 1)];
      const auto ctx = cached_context(len.q, len.n);
      const auto c = from_defining_set(ctx, random_defining_set(ctx->system));
      if (c.is_zero_code() || c.is_full_code()) continue;
      DistanceOptions opts;
      opts.threads = 1;
      opts.budget = 500000;
      std::uint64_t d;
      bool mds;
      try {
        d = min_distance(c, opts).d;
        mds = certify_mds(c, 500000);
      } catch (const Error& e) {
        REQUIRE(e.code() == Errc::BudgetExceeded);
        continue;
      }
      REQUIRE(mds == (d == c.n() - c.k() + 1));
      ++checked;
    }
    CHECK(checked >= 1000);
  }
}
