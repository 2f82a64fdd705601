#include "negacode/code.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <string>

#include "negacode/error.hpp"

namespace negacode {
namespace {

std::vector<Residue> negated(const CosetSystem& system, const std::vector<Residue>& s) {
  std::vector<Residue> out;
  out.reserve(s.size());
  for (auto a : s) out.push_back(system.negate(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> expand_leaders(const CosetSystem& system, const std::set<Residue>& leaders) {
  std::vector<Residue> out;
  for (auto l : leaders) {
    const auto& mem = system.members(l);
    out.insert(out.end(), mem.begin(), mem.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ContextPtr make_context(const FieldPtr& field, std::uint64_t n, std::uint64_t bound) {
  require(field != nullptr, Errc::InvalidArgument, "null field");
  require(std::gcd(n, field->size()) == 1, Errc::GcdViolation,
          "gcd(" + std::to_string(n) + ", " + std::to_string(field->size()) + ") != 1");
  CosetSystem system(n, field->size());
  ExtensionSpec ext = make_extension(field, n, bound);
  return std::make_shared<const CodeContext>(CodeContext{field, std::move(system), std::move(ext)});
}

std::vector<Residue> NegacyclicCode::leaders() const {
  std::set<Residue> out;
  for (auto s : defining_) out.insert(ctx_->system.leader_of(s));
  return {out.begin(), out.end()};
}

NegacyclicCode from_generator(const ContextPtr& ctx, const Poly& g) {
  require(same_field(g.field(), ctx->field), Errc::FieldMismatch, "generator over a different field");
  require(g.is_monic(), Errc::NotMonic, "generator must be monic");
  require(poly_divmod(ctx->x_n_plus_1(), g).remainder.is_zero(), Errc::NotADivisor,
          to_string(g) + " does not divide x^" + std::to_string(ctx->n()) + "+1");
  std::set<Residue> leaders;
  for (Residue s : ctx->system.X())
    if (evaluate_in(g, *ctx->ext.field, ctx->ext.beta_pow(s)) == 0) leaders.insert(s);
  auto defining = expand_leaders(ctx->system, leaders);
  require(defining.size() == static_cast<std::size_t>(g.degree()), Errc::InternalInconsistency,
          "root count differs from generator degree");
  return NegacyclicCode(ctx, g, std::move(defining));
}

NegacyclicCode from_generator(const FieldPtr& field, std::uint64_t n, const Poly& g) {
  return from_generator(make_context(field, n), g);
}

NegacyclicCode from_defining_set(const ContextPtr& ctx, const std::vector<Residue>& s) {
  const auto& system = ctx->system;
  std::set<Residue> members(s.begin(), s.end());
  for (auto a : members)
    require(a < system.two_n() && a % 2 == 1, Errc::NotOddResidues,
            std::to_string(a) + " is not an odd residue mod " + std::to_string(system.two_n()));
  std::set<Residue> leaders;
  for (auto a : members) {
    const Residue image = mul_mod(a, system.q(), system.two_n());
    require(members.count(image) == 1, Errc::NotClosedUnderQ,
            "q*" + std::to_string(a) + " = " + std::to_string(image) + " is not in the defining set");
    leaders.insert(system.leader_of(a));
  }
  Poly g = Poly::constant(ctx->field, 1);
  for (auto l : leaders) g = g * ctx->minimal(l);
  return NegacyclicCode(ctx, std::move(g), std::vector<Residue>(members.begin(), members.end()));
}

NegacyclicCode from_defining_set(const FieldPtr& field, std::uint64_t n, const std::vector<Residue>& s) {
  return from_defining_set(make_context(field, n), s);
}

NegacyclicCode dual(const NegacyclicCode& code) {
  const auto& ctx = code.context();
  const auto dm = poly_divmod(ctx->x_n_plus_1(), code.generator());
  auto d = from_generator(ctx, monic(reversal(dm.quotient)));
  // Defining set of the dual is T minus the negated defining set.
  const auto minus = negated(ctx->system, code.defining_set());
  std::vector<Residue> expected;
  const auto& t = ctx->system.T();
  std::set_difference(t.begin(), t.end(), minus.begin(), minus.end(), std::back_inserter(expected));
  require(expected == d.defining_set(), Errc::InternalInconsistency, "dual defining set is not T \\ (-S)");
  return d;
}

NegacyclicCode hull(const NegacyclicCode& code) {
  const auto d = dual(code);
  return from_generator(code.context(), poly_lcm(code.generator(), d.generator()));
}

std::uint64_t hull_dim(const NegacyclicCode& code) { return hull(code).k(); }

bool is_reversible(const NegacyclicCode& code) { return is_self_reciprocal(code.generator()); }

bool is_lcd(const NegacyclicCode& code) {
  const bool lcd = hull_dim(code) == 0;
  const bool reversible = is_reversible(code);
  const bool symmetric = negated(code.context()->system, code.defining_set()) == code.defining_set();
  require(lcd == reversible && lcd == symmetric, Errc::InternalInconsistency,
          "hull, self-reciprocity and root symmetry disagree");
  return lcd;
}

std::vector<NegacyclicCode> enumerate_reversible(const ContextPtr& ctx, std::uint64_t budget) {
  const auto& system = ctx->system;
  const auto& y = system.Y();
  require(y.size() < 63 && (std::uint64_t{1} << y.size()) <= budget, Errc::BudgetExceeded,
          "2^" + std::to_string(y.size()) + " subsets exceed the enumeration budget");
  // Each pair {T_s, T_{2n-s}} contributes lcm(m_s, m_{2n-s}).
  std::vector<std::vector<Residue>> pair_sets;
  for (auto s : y) {
    std::set<Residue> leaders{s, system.leader_of(system.negate(s))};
    pair_sets.push_back(expand_leaders(system, leaders));
  }
  std::vector<NegacyclicCode> out;
  const std::uint64_t total = std::uint64_t{1} << y.size();
  out.reserve(total - 1);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<Residue> s;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (mask >> i & 1) s.insert(s.end(), pair_sets[i].begin(), pair_sets[i].end());
    out.push_back(from_defining_set(ctx, s));
  }
  return out;
}

std::vector<NegacyclicCode> enumerate_reversible(const FieldPtr& field, std::uint64_t n, std::uint64_t budget) {
  return enumerate_reversible(make_context(field, n), budget);
}

ReversibleCount count_reversible_closed_form(std::uint64_t q, unsigned m) {
  require(m >= 3 && is_prime(m), Errc::HypothesisViolated, "m must be an odd prime");
  const auto qm = checked_pow(q, m);
  require(qm.has_value() && *qm < (std::uint64_t{1} << 62), Errc::OutOfRange, "q^m too large");
  ReversibleCount out;
  out.n = (*qm - 1) / 2;
  require(out.n % 2 == 1, Errc::HypothesisViolated, "n = (q^m - 1)/2 must be odd");
  const std::uint64_t numerator = *qm + (m - 1) * q + m;
  require(numerator % (4 * m) == 0, Errc::InternalInconsistency, "exponent is not an integer");
  out.exponent = numerator / (4 * m);
  out.count = (BigInt(1) << out.exponent) - 1;
  return out;
}

std::vector<Residue> self_reciprocal_factors(const ContextPtr& ctx) {
  std::vector<Residue> out;
  for (auto s : ctx->system.X())
    if (is_self_reciprocal(ctx->minimal(s))) out.push_back(s);
  return out;
}

bool x_plus_1_is_only_self_reciprocal_factor(const ContextPtr& ctx) {
  const auto f = self_reciprocal_factors(ctx);
  return f.size() == 1 && ctx->minimal(f.front()) == Poly(ctx->field, {1, 1});
}

}  // namespace negacode
