#include "negacode/poly.hpp"

#include <algorithm>
#include <numeric>

#include "negacode/cosets.hpp"
#include "negacode/error.hpp"

namespace negacode {
namespace {

void trim(std::vector<Rep>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const FieldPtr& common(const Poly& a, const Poly& b) {
  require(same_field(a.field(), b.field()), Errc::FieldMismatch, "polynomials over different fields");
  return a.field();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Rep> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  require(field_ != nullptr, Errc::InvalidArgument, "null field");
  for (auto c : coeffs_) require(field_->contains(c), Errc::OutOfRange, "coefficient outside the field");
  trim(coeffs_);
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Rep c) {
  std::vector<Rep> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x_n_plus_1(FieldPtr field, std::size_t n) {
  std::vector<Rep> v(n + 1, 0);
  v[0] = 1;
  v[n] = field->add(v[n], 1);
  return Poly(std::move(field), std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& f = common(a, b);
  std::vector<Rep> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rep> c(a.coeffs());
  for (auto& x : c) x = a.field()->neg(x);
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  const auto& f = common(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(f);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rep> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = f->add(c[i + j], f->mul(x[i], y[j]));
  }
  return Poly(f, std::move(c));
}

Poly scale(const Poly& a, Rep s) {
  std::vector<Rep> c(a.coeffs());
  for (auto& x : c) x = a.field()->mul(x, s);
  return Poly(a.field(), std::move(c));
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<Rep> c(k, 0);
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(a.field(), std::move(c));
}

DivMod poly_divmod(const Poly& a, const Poly& b) {
  const auto& f = common(a, b);
  require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rep> r(a.coeffs());
  const auto& d = b.coeffs();
  if (r.size() < d.size()) return {Poly(f), a};
  std::vector<Rep> quot(r.size() - d.size() + 1, 0);
  const Rep inv_lead = f->inv(d.back());
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rep coef = f->mul(r[i + d.size() - 1], inv_lead);
    quot[i] = coef;
    if (coef == 0) continue;
    const Rep neg = f->neg(coef);
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] = f->add(r[i + j], f->mul(neg, d[j]));
  }
  r.resize(d.size() - 1);
  return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field()->inv(a.lead()));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  common(a, b);
  require(!(a.is_zero() && b.is_zero()), Errc::InvalidArgument, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  common(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const auto dm = poly_divmod(a * b, poly_gcd(a, b));
  require(dm.remainder.is_zero(), Errc::InternalInconsistency, "gcd does not divide the product");
  return monic(dm.quotient);
}

Poly reversal(const Poly& h) {
  std::vector<Rep> c(h.coeffs().rbegin(), h.coeffs().rend());
  return Poly(h.field(), std::move(c));
}

Poly reciprocal(const Poly& h) {
  require(!h.is_zero() && h.constant_term() != 0, Errc::ZeroConstantTerm, "reciprocal needs h(0) != 0");
  Poly r = scale(reversal(h), h.field()->inv(h.constant_term()));
  // (h*)* is h scaled by a_0 / a_n: the normalized reversal is always monic.
  const Poly back = scale(reversal(r), h.field()->inv(r.constant_term()));
  require(back == monic(h), Errc::InternalInconsistency, "(h*)* != monic(h)");
  return r;
}

bool is_self_reciprocal(const Poly& h) { return reciprocal(h) == h; }

Rep evaluate_in(const Poly& f, const FiniteField& ext, Rep point) {
  const bool same = f.field()->same_as(ext);
  require(same || (ext.base() && f.field()->same_as(*ext.base())), Errc::FieldMismatch,
          "evaluation point is not in an extension of the coefficient field");
  require(ext.contains(point), Errc::OutOfRange, "evaluation point outside the field");
  Rep acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = ext.add(ext.mul(acc, point), c[i]);
  return acc;
}

Rep evaluate(const Poly& f, Rep point) { return evaluate_in(f, *f.field(), point); }

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

Poly minimal_polynomial(const CosetSystem& system, const ExtensionSpec& ext, std::uint64_t s) {
  require(ext.two_n == system.two_n() && ext.base->size() == system.q(), Errc::InvalidArgument,
          "extension does not match the coset system");
  require(s < system.two_n(), Errc::OutOfRange, "residue outside Z_2n");
  require(s % 2 == 1, Errc::NotOddResidue, std::to_string(s) + " is not in T");
  const FiniteField& big = *ext.field;
  std::vector<Rep> prod{1};
  for (Residue j : t_slice(system, s)) {
    const Rep root = big.neg(ext.beta_pow(j));
    std::vector<Rep> next(prod.size() + 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = big.add(next[i + 1], prod[i]);
      next[i] = big.add(next[i], big.mul(prod[i], root));
    }
    prod = std::move(next);
  }
  for (auto c : prod) {
    // Base elements are the constant polynomials of GF(q^m), i.e. indices below q.
    require(big.in_base_field(c) && c < ext.base->size(), Errc::CoefficientNotInBaseField,
            "minimal polynomial coefficient outside GF(q)");
  }
  return Poly(ext.base, std::move(prod));
}

std::vector<MinimalFactor> factor_x_n_plus_1(const CosetSystem& system, const ExtensionSpec& ext) {
  std::vector<MinimalFactor> out;
  out.reserve(system.X().size());
  for (Residue s : system.X()) out.push_back({s, minimal_polynomial(system, ext, s)});
  return out;
}

std::vector<MinimalFactor> factor_x_n_plus_1(std::uint64_t n, std::uint64_t q, std::uint64_t bound) {
  require(std::gcd(n, q) == 1, Errc::GcdViolation, "gcd(n, q) != 1: x^n + 1 has repeated roots");
  const CosetSystem system(n, q);
  const auto ext = make_extension(field_of_order(q, bound), n, bound);
  return factor_x_n_plus_1(system, ext);
}

}  // namespace negacode
