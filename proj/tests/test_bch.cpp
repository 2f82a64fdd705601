#include <functional>

#include "doctest.h"

#include "negacode/bch.hpp"

using namespace negacode;
using R = std::vector<Residue>;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

DimOptions beyond() {
  DimOptions o;
  o.allow_out_of_range = true;
  return o;
}

}  // namespace

TEST_SUITE("bch") {
  TEST_CASE("bch_generator") {
    const auto ctx = cached_context(3, 14);
    const auto c3 = bch_generator(ctx, 3, 1);
    CHECK(c3.k() == 8);
    CHECK(c3.generator() == ctx->minimal(1));
    const auto c4 = bch_generator(BchSpec{3, 14, 4, 1});
    CHECK(c4.k() == 2);
    CHECK(c4.generator() == ctx->minimal(1) * ctx->minimal(5));
    // beta^7 has order 4 here; take n = 7 where beta^7 = -1.
    const auto c7 = bch_generator(cached_context(3, 7), 2, 7);
    CHECK(c7.generator() == Poly(c7.field(), {1, 1}));
    CHECK(c7.k() == 6);
    CHECK(code_of([&] { bch_generator(ctx, 3, 2); }) == Errc::EvenStart);
    CHECK(code_of([&] { bch_generator(ctx, 1, 1); }) == Errc::DeltaTooSmall);
    // Negative starts reduce mod 2n.
    CHECK(bch_generator(ctx, 3, -1).defining_set() == bch_generator(ctx, 3, 27).defining_set());
  }

  TEST_CASE("orbit_union") {
    CHECK(orbit_union(3, 28, 1, 2) == R{1, 3, 9, 19, 25, 27});
    CHECK(orbit_union(3, 28, 1, 3) == bch_generator(cached_context(3, 14), 4, 1).defining_set());
  }

  TEST_CASE("bch_bound") {
    CHECK(bch_bound(bch_generator(cached_context(3, 14), 3, 1)) >= 5);
    CHECK(bch_bound(bch_generator(cached_context(3, 14), 3, 1)) == 5);
    const auto c7 = from_generator(cached_context(3, 7), Poly(field_of_order(3), {1, 1}));
    CHECK(bch_bound(c7) == 2);
    CHECK(odd_run_bound(16, R{5, 7, 9, 11}) == 5);
    CHECK(odd_run_bound(28, R{1, 3, 25, 27}) == 5);
    CHECK(code_of([] { odd_run_bound(16, R{}); }) == Errc::FullCode);
    CHECK(code_of([] { odd_run_bound(4, R{1, 3}); }) == Errc::ZeroCode);
  }

  TEST_CASE("dim_thm_4_4") {
    const auto r = dim_thm_4_4(3, 3, 3);
    CHECK(r.n == 14);
    CHECK(r.k == 8);
    CHECK(r.d_lb == 5);
    CHECK(r.in_stated_range);
    CHECK(r.agrees);
    CHECK(r.oracle_k == 8u);

    const auto r17 = dim_thm_4_4(3, 4, 6, beyond());
    CHECK(r17.n == 41);
    CHECK(r17.k == 17);
    CHECK(r17.d_lb == 11);
    CHECK_FALSE(r17.in_stated_range);

    const auto r2 = dim_thm_4_4(3, 3, 4, beyond());
    CHECK(r2.k == 2);
    CHECK(r2.d_lb == 7);
    CHECK(r2.oracle_k == 2u);

    CHECK(code_of([] { dim_thm_4_4(3, 3, 4); }) == Errc::HypothesisViolated);
    CHECK(code_of([] { dim_thm_4_4(3, 1, 2); }) == Errc::HypothesisViolated);
    CHECK(delta_range_4_4(3, 3) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  }

  TEST_CASE("dim_thm_5_2") {
    const auto a = dim_thm_5_2(3, 4, 2);
    CHECK(a.n == 20);
    CHECK(a.k == 12);
    CHECK(a.d_lb == 5);
    const auto b = dim_thm_5_2(5, 4, 3);
    CHECK(b.n == 78);
    CHECK(b.k == 62);
    CHECK(b.d_lb == 7);
    const auto c = dim_thm_5_2(5, 4, 4, beyond());
    CHECK(c.k == 54);
    CHECK(c.d_lb == 9);
    CHECK(c.oracle_k == 54u);
    CHECK_FALSE(c.in_stated_range);
    CHECK(code_of([] { dim_thm_5_2(5, 4, 4); }) == Errc::HypothesisViolated);
    CHECK(code_of([] { dim_thm_5_2(5, 3, 1); }) == Errc::HypothesisViolated);
  }

  TEST_CASE("dim_thm_5_6") {
    const auto a = dim_thm_5_6(3, 4, 2);
    CHECK(a.n == 20);
    CHECK(a.k == 16);
    CHECK(a.oracle_k == 16u);
    CHECK(a.branch == "omega<floor((q-1)/2)");
    // delta = 1 is C(q, n, 2, 1): one coset of size m.
    const auto one = dim_thm_5_6(3, 4, 1);
    CHECK(one.k == one.n - 4);
    CHECK(one.oracle_k == one.n - 4);
    // The printed count and the constructive degree differ for this tuple.
    const auto big = dim_thm_5_6(3, 6, 14);
    CHECK(big.n == 182);
    CHECK(big.k == 137);
    CHECK(big.branch == "m=4s+2,q=4t-1,omega even");
    CHECK(big.oracle_k == 128u);
    CHECK(big.aux.at("k_recount") == 128);
    CHECK_FALSE(big.agrees);
  }

  TEST_CASE("dim_thm_5_8") {
    const auto a = dim_thm_5_8(3, 6, 14);
    CHECK(a.n == 182);
    CHECK(a.k == 98);
    CHECK(a.d_lb == 29);
    CHECK(a.oracle_k == 80u);
    CHECK(a.aux.at("k_recount") == 80);
    const auto b = dim_thm_5_8(5, 4, 13);
    CHECK(b.n == 78);
    CHECK(b.k == 18);
    CHECK(b.d_lb == 27);
    CHECK(b.oracle_k == 10u);
    const auto c = dim_thm_5_8(3, 4, 5);
    CHECK(c.branch.rfind("2delta-3", 0) != 0);
    CHECK(c.branch.find("m=4s") != std::string::npos);
    CHECK(c.aux.at("omega") == 2);
    CHECK(c.k == 20 - 2 * 4 * 3 + (2 * 2 - 3 + 2) * 4);
    // Every odd residue mod 40 is a root: the zero code.
    CHECK(c.oracle_k == 0u);
    CHECK(c.aux.at("k_recount") == 0);
    // The branch (1) typo: printed n - m ceil(...) for the [20,12] code.
    const auto typo = dim_thm_5_8(3, 4, 2);
    CHECK(typo.k == 12);
    CHECK(typo.aux.at("k_as_printed") == 16);
  }

  TEST_CASE("dim_thm_5_13") {
    const auto a = dim_thm_5_13(3, 2, 2, 2);
    CHECK(a.n == 328);
    CHECK(a.k == 312);
    CHECK(a.d_lb == 5);
    CHECK(a.oracle == OracleKind::Polynomial);
    const auto b = dim_thm_5_13(3, 2, 2, 3);
    CHECK(b.k == 296);
    CHECK(b.d_lb == 7);
    CHECK(b.oracle_k == 296u);
    CHECK(code_of([] { dim_thm_5_13(3, 1, 2, 2); }) == Errc::HypothesisViolated);
  }

  TEST_CASE("field too large still counts cosets") {
    DimOptions o;
    o.field_bound = 1000;
    const auto r = dim_thm_5_13(3, 2, 2, 2, o);
    CHECK(r.field_too_large);
    CHECK(r.oracle == OracleKind::CosetCount);
    CHECK(r.oracle_k == 312u);
  }
}
