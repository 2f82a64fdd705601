#pragma once

// Table-driven arithmetic in GF(p^e) and in extensions GF(q^m) over GF(q).
//
// Elements are canonical indices: the coefficient vector over the base field
// (GF(p) for prime towers) read as base-|base| digits, least significant
// coefficient first. Multiplication goes through log/antilog tables and
// addition through a Zech logarithm table, so both are O(1).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "negacode/error.hpp"

namespace negacode {

using Rep = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  /// GF(p^e) over GF(p) with the canonical modulus. The canonical modulus is
  /// the smallest monic irreducible of degree e under lexicographic order of
  /// (c_0, ..., c_{e-1}); for e = 1 it is x.
  static FieldPtr build(std::uint64_t p, unsigned e, std::uint64_t bound = kDefaultFieldBound);

  /// Degree-`degree` extension of `base`, same canonical modulus rule with
  /// coefficients ordered by their index in `base`.
  static FieldPtr extend(FieldPtr base, unsigned degree, std::uint64_t bound = kDefaultFieldBound);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Degree over the base (over GF(p) when base() is null).
  unsigned degree() const noexcept { return degree_; }
  /// Null for fields built directly over GF(p).
  const FieldPtr& base() const noexcept { return base_; }
  std::uint64_t base_size() const noexcept { return base_ ? base_->size() : p_; }
  /// Monic, ascending, length degree() + 1, coefficients as base indices.
  std::span<const Rep> modulus() const noexcept { return modulus_; }

  Rep add(Rep a, Rep b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    const std::uint32_t lb = log_[b];
    const std::uint32_t diff = lb >= la ? lb - la : lb + order_ - la;
    const std::uint32_t z = zech_[diff];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  Rep neg(Rep a) const noexcept { return a == 0 ? 0 : exp_[log_[a] + order_ / 2]; }
  Rep sub(Rep a, Rep b) const noexcept { return add(a, neg(b)); }
  Rep mul(Rep a, Rep b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Rep inv(Rep a) const;
  Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
  /// pow(0, 0) = 1.
  Rep pow(Rep a, std::uint64_t k) const noexcept;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Rep a) const;

  /// Smallest index whose multiplicative order is size() - 1.
  Rep primitive() const noexcept { return primitive_; }
  /// alpha^k for the primitive element alpha.
  Rep exp(std::uint64_t k) const noexcept { return exp_[k % order_]; }
  std::uint32_t log(Rep a) const;

  /// Frobenius fixed point test a^{base_size()} == a.
  bool in_base_field(Rep a) const noexcept { return pow(a, base_size()) == a; }

  bool contains(Rep a) const noexcept { return a < size_; }
  bool same_as(const FiniteField& other) const noexcept;

  /// Coefficient vector over the base (length degree()).
  std::vector<Rep> digits(Rep a) const;
  Rep from_digits(std::span<const Rep> digits) const;

  std::string describe() const;

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  FiniteField() = default;
  void build_tables();

  std::uint64_t p_ = 0;
  std::uint64_t size_ = 0;
  unsigned degree_ = 0;
  FieldPtr base_;
  std::vector<Rep> modulus_;
  std::uint32_t order_ = 0;  // size_ - 1
  Rep primitive_ = 0;
  std::vector<Rep> exp_;            // 2 * order_ entries
  std::vector<std::uint32_t> log_;  // size_ entries, log_[0] unused
  std::vector<std::uint32_t> zech_; // log(1 + alpha^i)
};

/// GF(p^e), validating p (odd prime) and e >= 1.
FieldPtr build_field(std::uint64_t p, unsigned e, std::uint64_t bound = kDefaultFieldBound);

/// GF(q) for an odd prime power q.
FieldPtr field_of_order(std::uint64_t q, std::uint64_t bound = kDefaultFieldBound);

inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

/// Value-semantic element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Rep rep);

  const FieldPtr& field() const noexcept { return field_; }
  Rep rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.rep_ == b.rep_ && same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  Rep rep_;
};

/// Throws DivisionByZero for a = 0.
FieldElement invert(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t k);
FieldElement find_primitive(const FieldPtr& field);
/// For an element of an extension: whether it lies in the base field.
bool in_base_field(const FieldElement& a);

/// GF(q^m) with m = ord_{2n}(q), carrying a primitive element alpha and the
/// primitive 2n-th root of unity beta = alpha^((q^m - 1) / 2n).
struct ExtensionSpec {
  FieldPtr base;
  FieldPtr field;
  unsigned m = 0;
  std::uint64_t two_n = 0;
  Rep alpha = 0;
  Rep beta = 0;
  std::uint64_t beta_log = 0;  // beta = alpha^beta_log

  /// beta^k over GF(q^m); k is reduced mod 2n.
  Rep beta_pow(std::uint64_t k) const noexcept { return field->exp(beta_log * (k % two_n)); }
};

ExtensionSpec make_extension(const FieldPtr& base, std::uint64_t n, std::uint64_t bound = kDefaultFieldBound);

}  // namespace negacode
