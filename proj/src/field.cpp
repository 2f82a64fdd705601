#include "negacode/field.hpp"

#include <algorithm>
#include <sstream>

#include "negacode/numtheory.hpp"

namespace negacode {
namespace {

using Dense = std::vector<Rep>;

// Coefficient arithmetic of the field being extended: Z_p or a built field.
struct BaseArith {
  std::uint64_t p;
  const FiniteField* base;

  std::uint64_t size() const { return base ? base->size() : p; }
  Rep add(Rep a, Rep b) const { return base ? base->add(a, b) : static_cast<Rep>((a + b) % p); }
  Rep sub(Rep a, Rep b) const { return base ? base->sub(a, b) : static_cast<Rep>((a + p - b) % p); }
  Rep mul(Rep a, Rep b) const {
    return base ? base->mul(a, b) : static_cast<Rep>(std::uint64_t{a} * b % p);
  }
  Rep inv(Rep a) const { return base ? base->inv(a) : static_cast<Rep>(pow_mod(a, p - 2, p)); }
};

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b (b nonzero).
Dense rem(Dense a, const Dense& b, const BaseArith& ar) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Rep lead_inv = ar.inv(b.back());
  while (a.size() >= b.size()) {
    const Rep c = ar.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ar.sub(a[shift + i], ar.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Dense mulmod(const Dense& a, const Dense& b, const Dense& f, const BaseArith& ar) {
  if (a.empty() || b.empty()) return {};
  Dense prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = ar.add(prod[i + j], ar.mul(a[i], b[j]));
  }
  return rem(std::move(prod), f, ar);
}

Dense powmod(Dense a, std::uint64_t e, const Dense& f, const BaseArith& ar) {
  Dense r{1};
  a = rem(std::move(a), f, ar);
  while (e) {
    if (e & 1) r = mulmod(r, a, f, ar);
    a = mulmod(a, a, f, ar);
    e >>= 1;
  }
  return rem(std::move(r), f, ar);
}

Dense gcd(Dense a, Dense b, const BaseArith& ar) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = rem(a, b, ar);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Dense sub_poly(Dense a, const Dense& b, const BaseArith& ar) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ar.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Rabin's test for a monic f of degree d.
bool is_irreducible(const Dense& f, const BaseArith& ar) {
  const auto d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  if (f[0] == 0) return false;
  const Dense x{0, 1};
  std::vector<Dense> frob{x};  // x^{b^i} mod f
  for (unsigned i = 1; i <= d; ++i) frob.push_back(powmod(frob.back(), ar.size(), f, ar));
  if (frob[d] != x) return false;
  for (auto r : prime_factors(d)) {
    const Dense g = gcd(sub_poly(frob[d / r], x, ar), f, ar);
    if (g.size() > 1) return false;
  }
  return true;
}

Dense canonical_modulus(unsigned d, const BaseArith& ar) {
  const std::uint64_t b = ar.size();
  const std::uint64_t count = *checked_pow(b, d);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant position of the enumeration.
    Dense f(d + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned j = d; j-- > 0;) {
      f[j] = static_cast<Rep>(rest % b);
      rest /= b;
    }
    f[d] = 1;
    if (d >= 2 && f[0] == 0) {
      idx += *checked_pow(b, d - 1) - 1;
      continue;
    }
    if (is_irreducible(f, ar)) return f;
  }
  fail(Errc::InternalInconsistency, "no irreducible polynomial found");
}

}  // namespace

FieldPtr FiniteField::build(std::uint64_t p, unsigned e, std::uint64_t bound) {
  require(e >= 1, Errc::InvalidDegree, "extension degree must be >= 1");
  require(is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  require(p != 2, Errc::EvenCharacteristic, "characteristic 2 is not supported");
  const auto size = checked_pow(p, e);
  require(size && *size <= bound && *size <= 0xffffffffu, Errc::FieldTooLarge,
          std::to_string(p) + "^" + std::to_string(e) + " exceeds the field bound");
  std::shared_ptr<FiniteField> f(new FiniteField());
  f->p_ = p;
  f->size_ = *size;
  f->degree_ = e;
  f->modulus_ = canonical_modulus(e, BaseArith{p, nullptr});
  f->build_tables();
  return f;
}

FieldPtr FiniteField::extend(FieldPtr base, unsigned degree, std::uint64_t bound) {
  require(base != nullptr, Errc::InvalidArgument, "null base field");
  require(degree >= 1, Errc::InvalidDegree, "extension degree must be >= 1");
  const auto size = checked_pow(base->size(), degree);
  require(size && *size <= bound && *size <= 0xffffffffu, Errc::FieldTooLarge,
          std::to_string(base->size()) + "^" + std::to_string(degree) + " exceeds the field bound");
  std::shared_ptr<FiniteField> f(new FiniteField());
  f->p_ = base->characteristic();
  f->size_ = *size;
  f->degree_ = degree;
  f->modulus_ = canonical_modulus(degree, BaseArith{f->p_, base.get()});
  f->base_ = std::move(base);
  f->build_tables();
  return f;
}

void FiniteField::build_tables() {
  const BaseArith ar{p_, base_.get()};
  const Dense& modulus = modulus_;
  auto slow_mul = [&](Rep a, Rep b) {
    const auto da = digits(a);
    const auto db = digits(b);
    Dense prod = mulmod(Dense(da.begin(), da.end()), Dense(db.begin(), db.end()), modulus, ar);
    prod.resize(degree_, 0);
    return from_digits(prod);
  };
  auto slow_pow = [&](Rep a, std::uint64_t k) {
    Rep r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  order_ = static_cast<std::uint32_t>(size_ - 1);
  const auto factors = prime_factors(order_);
  primitive_ = 0;
  for (Rep g = 2; g < size_ && primitive_ == 0; ++g) {
    const bool generates = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t r) { return slow_pow(g, order_ / r) != 1; });
    if (generates) primitive_ = g;
  }
  require(primitive_ != 0, Errc::InternalInconsistency, "no primitive element; modulus reducible?");

  exp_.assign(2 * std::size_t{order_}, 0);
  log_.assign(size_, kNoLog);
  Rep cur = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    require(log_[cur] == kNoLog, Errc::InternalInconsistency, "primitive element repeats");
    exp_[i] = cur;
    exp_[i + order_] = cur;
    log_[cur] = i;
    cur = slow_mul(cur, primitive_);
  }
  require(cur == 1, Errc::InternalInconsistency, "primitive element has wrong order");

  const std::uint64_t b = base_size();
  zech_.assign(order_, kNoLog);
  for (std::uint32_t i = 0; i < order_; ++i) {
    const Rep v = exp_[i];
    const Rep low = static_cast<Rep>(v % b);
    const Rep w = static_cast<Rep>(v - low + ar.add(low, 1));
    zech_[i] = w == 0 ? kNoLog : log_[w];
  }
}

Rep FiniteField::inv(Rep a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  return exp_[order_ - log_[a]];
}

Rep FiniteField::pow(Rep a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[mul_mod(log_[a], k % order_, order_)];
}

std::uint64_t FiniteField::order(Rep a) const {
  require(a != 0, Errc::DivisionByZero, "order of zero");
  return order_ / std::gcd<std::uint64_t>(log_[a], order_);
}

std::uint32_t FiniteField::log(Rep a) const {
  require(a != 0, Errc::DivisionByZero, "log of zero");
  return log_[a];
}

bool FiniteField::same_as(const FiniteField& other) const noexcept {
  if (this == &other) return true;
  if (p_ != other.p_ || size_ != other.size_ || degree_ != other.degree_ || modulus_ != other.modulus_)
    return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return base_->same_as(*other.base_);
}

std::vector<Rep> FiniteField::digits(Rep a) const {
  const std::uint64_t b = base_size();
  std::vector<Rep> out(degree_, 0);
  std::uint64_t rest = a;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<Rep>(rest % b);
    rest /= b;
  }
  return out;
}

Rep FiniteField::from_digits(std::span<const Rep> digits) const {
  const std::uint64_t b = base_size();
  std::uint64_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * b + digits[i];
  return static_cast<Rep>(r);
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  if (base_)
    os << "GF(" << base_->size() << "^" << degree_ << ")";
  else
    os << "GF(" << p_ << (degree_ > 1 ? "^" + std::to_string(degree_) : std::string()) << ")";
  os << " modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "]";
  return os.str();
}

FieldPtr build_field(std::uint64_t p, unsigned e, std::uint64_t bound) {
  require(p != 2, Errc::EvenCharacteristic, "characteristic 2 is not supported");
  require(e >= 1, Errc::InvalidDegree, "extension degree must be >= 1");
  return FiniteField::build(p, e, bound);
}

FieldPtr field_of_order(std::uint64_t q, std::uint64_t bound) {
  const auto pp = as_prime_power(q);
  require(pp.has_value(), Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return build_field(pp->p, pp->e, bound);
}

FieldElement::FieldElement(FieldPtr field, Rep rep) : field_(std::move(field)), rep_(rep) {
  require(field_ != nullptr, Errc::InvalidArgument, "element without field");
  require(field_->contains(rep_), Errc::OutOfRange, "element index outside the field");
}

namespace {
const FieldPtr& common(const FieldElement& a, const FieldElement& b) {
  require(same_field(a.field(), b.field()), Errc::FieldMismatch, "elements of different fields");
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->add(a.rep_, b.rep_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->sub(a.rep_, b.rep_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->mul(a.rep_, b.rep_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->div(a.rep_, b.rep_)};
}
FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.rep_)}; }

FieldElement invert(const FieldElement& a) { return {a.field(), a.field()->inv(a.rep())}; }

FieldElement pow(const FieldElement& a, std::uint64_t k) { return {a.field(), a.field()->pow(a.rep(), k)}; }

FieldElement find_primitive(const FieldPtr& field) { return {field, field->primitive()}; }

bool in_base_field(const FieldElement& a) { return a.field()->in_base_field(a.rep()); }

ExtensionSpec make_extension(const FieldPtr& base, std::uint64_t n, std::uint64_t bound) {
  require(n >= 1, Errc::InvalidArgument, "length must be positive");
  require(std::gcd(n, base->size()) == 1, Errc::GcdViolation, "gcd(n, q) != 1");
  ExtensionSpec ext;
  ext.base = base;
  ext.two_n = 2 * n;
  ext.m = mult_order(base->size(), ext.two_n);
  ext.field = FiniteField::extend(base, ext.m, bound);
  ext.alpha = ext.field->primitive();
  ext.beta_log = (ext.field->size() - 1) / ext.two_n;
  ext.beta = ext.field->exp(ext.beta_log);
  require(ext.field->order(ext.beta) == ext.two_n, Errc::InternalInconsistency, "beta has wrong order");
  require(ext.field->pow(ext.beta, n) == ext.field->neg(1), Errc::InternalInconsistency, "beta^n != -1");
  return ext;
}

}  // namespace negacode
