#include <functional>

#include "doctest.h"

#include "negacode/code.hpp"
#include "negacode/poly.hpp"
#include "oracles.hpp"

using namespace negacode;

namespace {

const Poly kM1Coeffs(const FieldPtr& f) { return Poly(f, {1, 2, 1, 2, 1, 2, 1}); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("divmod") {
    const auto f = field_of_order(3);
    const auto x7 = Poly::x_n_plus_1(f, 7);
    const auto dm = poly_divmod(x7, Poly(f, {1, 1}));
    CHECK(dm.quotient == kM1Coeffs(f));
    CHECK(dm.remainder.is_zero());

    const Poly a(f, {2, 0, 1, 1});
    const auto by_one = poly_divmod(a, Poly::constant(f, 1));
    CHECK(by_one.quotient == a);
    CHECK(by_one.remainder.is_zero());

    const auto small = poly_divmod(Poly(f, {1, 1}), Poly(f, {1, 0, 1}));
    CHECK(small.quotient.is_zero());
    CHECK(small.remainder == Poly(f, {1, 1}));

    CHECK(code_of([&] { poly_divmod(a, Poly(f)); }) == Errc::DivisionByZero);
    CHECK(code_of([&] { poly_divmod(a, Poly(field_of_order(5), {1, 1})); }) == Errc::FieldMismatch);
  }

  TEST_CASE("gcd and lcm") {
    const auto f = field_of_order(3);
    const auto m1 = kM1Coeffs(f);
    const Poly m7(f, {1, 1});
    CHECK(poly_gcd(m1, m7) == Poly::constant(f, 1));
    CHECK(poly_lcm(m1, m7) == Poly::x_n_plus_1(f, 7));
    const Poly a(f, {1, 2, 0, 2});
    CHECK(poly_gcd(a, a) == monic(a));
    CHECK(poly_gcd(a, Poly(f)) == monic(a));
    CHECK(code_of([&] { poly_gcd(Poly(f), Poly(f)); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { poly_gcd(a, Poly(field_of_order(7), {1})); }) == Errc::FieldMismatch);
  }

  TEST_CASE("reciprocal") {
    const auto f = field_of_order(3);
    CHECK(reciprocal(Poly(f, {1, 1})) == Poly(f, {1, 1}));
    // 2x^2 + x + 1 -> x^2 + x + 2
    CHECK(reciprocal(Poly(f, {1, 1, 2})) == Poly(f, {2, 1, 1}));
    CHECK(reciprocal(kM1Coeffs(f)) == kM1Coeffs(f));
    CHECK(code_of([&] { reciprocal(Poly(f, {0, 1})); }) == Errc::ZeroConstantTerm);
  }

  TEST_CASE("is_self_reciprocal") {
    const auto f = field_of_order(3);
    CHECK(is_self_reciprocal(Poly(f, {1, 1})));
    // 2^{-1} x (x^{-1} + 2) = 2 (1 + 2x) = x + 2: fixed.
    CHECK(is_self_reciprocal(Poly(f, {2, 1})));
    CHECK(is_self_reciprocal(Poly::constant(f, 1)));
    CHECK_FALSE(is_self_reciprocal(Poly(f, {1, 1, 2})));
    CHECK(code_of([&] { is_self_reciprocal(Poly(f, {0, 1})); }) == Errc::ZeroConstantTerm);
  }

  TEST_CASE("sum rule counterexample for the normalized reciprocal") {
    // h = 1 + x, f = 1: (h + f)* = (2 + x)* = x + 2, but h* + x f* = 1 + 2x.
    const auto f = field_of_order(3);
    const Poly h(f, {1, 1});
    const Poly g = Poly::constant(f, 1);
    const Poly lhs = reciprocal(h + g);
    const Poly rhs = reciprocal(h) + shift(reciprocal(g), 1);
    CHECK_FALSE(lhs == rhs);
    // The plain reversal satisfies it.
    CHECK(reversal(h + g) == reversal(h) + shift(reversal(g), 1));
  }

  TEST_CASE("minimal polynomials") {
    const auto f = field_of_order(3);
    const CosetSystem sys(7, 3);
    const auto ext = make_extension(f, 7);
    CHECK(minimal_polynomial(sys, ext, 1) == kM1Coeffs(f));
    CHECK(minimal_polynomial(sys, ext, 7) == Poly(f, {1, 1}));
    CHECK(code_of([&] { minimal_polynomial(sys, ext, 2); }) == Errc::NotOddResidue);
    // beta^n = -1 gives x + 1 for every odd n.
    for (std::uint64_t n : {1, 5, 11, 13, 41}) {
      const CosetSystem s(n, 3);
      CHECK(minimal_polynomial(s, make_extension(f, n), n) == Poly(f, {1, 1}));
    }
  }

  TEST_CASE("factor_x_n_plus_1") {
    const auto f = field_of_order(3);
    const auto seven = factor_x_n_plus_1(7, 3);
    REQUIRE(seven.size() == 2);
    CHECK(seven[0].leader == 1);
    CHECK(seven[0].poly == kM1Coeffs(f));
    CHECK(seven[1].leader == 7);
    CHECK(seven[1].poly == Poly(f, {1, 1}));

    const auto one = factor_x_n_plus_1(1, 3);
    REQUIRE(one.size() == 1);
    CHECK(one[0].poly == Poly(f, {1, 1}));

    CHECK(code_of([] { factor_x_n_plus_1(3, 3); }) == Errc::GcdViolation);
  }

  TEST_CASE("factors are irreducible and multiply back") {
    for (std::uint64_t q : {3, 5, 7}) {
      for (std::uint64_t n = 1; n <= 24; ++n) {
        if (n % q == 0) continue;
        const auto qm = checked_pow(q, mult_order(q, 2 * n));
        if (!qm || *qm > kDefaultFieldBound) continue;
        const auto factors = factor_x_n_plus_1(n, q);
        const auto f = field_of_order(q);
        Poly prod = Poly::constant(f, 1);
        for (const auto& m : factors) {
          prod = prod * m.poly;
          if (m.poly.degree() <= 6) {
            oracle::Vec v(m.poly.coeffs().begin(), m.poly.coeffs().end());
            CHECK(oracle::irreducible(v, static_cast<long>(q)));
          }
        }
        CHECK(prod == Poly::x_n_plus_1(f, n));
      }
    }
  }

  TEST_CASE("evaluate and to_string") {
    const auto f = field_of_order(5);
    const Poly p(f, {1, 0, 3});
    CHECK(evaluate(p, 2) == (1 + 3 * 4) % 5);
    CHECK(to_string(p) == "3x^2+1");
    CHECK(to_string(Poly(f)) == "0");
    CHECK(to_string(Poly(f, {4, 1})) == "x+4");
    CHECK(code_of([&] { Poly(f, {7}); }) == Errc::OutOfRange);
  }
}
