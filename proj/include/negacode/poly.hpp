#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "negacode/field.hpp"

namespace negacode {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Rep> coeffs);
  Poly(FieldPtr field, std::initializer_list<Rep> coeffs)
      : Poly(std::move(field), std::vector<Rep>(coeffs)) {}

  static Poly constant(FieldPtr field, Rep c) { return Poly(std::move(field), std::vector<Rep>{c}); }
  static Poly monomial(FieldPtr field, std::size_t degree, Rep c = 1);
  /// x^n + 1.
  static Poly x_n_plus_1(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rep>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Rep lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Rep constant_term() const noexcept { return coeffs_.empty() ? 0 : coeffs_.front(); }
  Rep operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.coeffs_ == b.coeffs_ && same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  std::vector<Rep> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Rep c);
/// a(x) * x^k.
Poly shift(const Poly& a, std::size_t k);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
/// Throws DivisionByZero for b = 0 and FieldMismatch for different fields.
DivMod poly_divmod(const Poly& a, const Poly& b);

Poly monic(const Poly& a);
/// Monic gcd; gcd(0, 0) throws InvalidArgument.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm.
Poly poly_lcm(const Poly& a, const Poly& b);

/// x^{deg h} h(1/x): plain coefficient reversal, no normalization.
Poly reversal(const Poly& h);
/// h*(x) = h(0)^{-1} x^{deg h} h(1/x). Throws ZeroConstantTerm when h(0) = 0.
Poly reciprocal(const Poly& h);
bool is_self_reciprocal(const Poly& h);

/// Evaluates a polynomial over GF(q) at a point of an extension of GF(q).
Rep evaluate_in(const Poly& f, const FiniteField& ext, Rep point);
Rep evaluate(const Poly& f, Rep point);

/// Human form, e.g. "x^6+2x^5+x^4+1". Coefficients print as field indices.
std::string to_string(const Poly& f);

class CosetSystem;

/// m_s(x) = prod_{j in T_s} (x - beta^j), projected onto GF(q).
Poly minimal_polynomial(const CosetSystem& system, const ExtensionSpec& ext, std::uint64_t s);

struct MinimalFactor {
  std::uint64_t leader;
  Poly poly;
};

/// The factors m_s of x^n + 1 over GF(q), one per leader in X, ascending.
std::vector<MinimalFactor> factor_x_n_plus_1(const CosetSystem& system, const ExtensionSpec& ext);
std::vector<MinimalFactor> factor_x_n_plus_1(std::uint64_t n, std::uint64_t q,
                                             std::uint64_t bound = kDefaultFieldBound);

}  // namespace negacode
