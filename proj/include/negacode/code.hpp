#pragma once

// Negacyclic codes of length n over GF(q): ideals <g> of GF(q)[x]/(x^n + 1).

#include <cstdint>
#include <memory>
#include <vector>

#include "negacode/cosets.hpp"
#include "negacode/field.hpp"
#include "negacode/poly.hpp"

namespace negacode {

/// Everything a code of length n over a fixed GF(q) shares: the cosets mod 2n
/// and the splitting field of x^n + 1.
struct CodeContext {
  FieldPtr field;
  CosetSystem system;
  ExtensionSpec ext;

  std::uint64_t n() const noexcept { return system.n(); }
  std::uint64_t q() const noexcept { return system.q(); }
  Poly x_n_plus_1() const { return Poly::x_n_plus_1(field, system.n()); }
  /// Minimal polynomial of beta^s for odd s.
  Poly minimal(Residue s) const { return minimal_polynomial(system, ext, s); }
};
using ContextPtr = std::shared_ptr<const CodeContext>;

/// Throws GcdViolation when gcd(n, q) != 1, FieldTooLarge when q^m exceeds bound.
ContextPtr make_context(const FieldPtr& field, std::uint64_t n, std::uint64_t bound = kDefaultFieldBound);

class NegacyclicCode {
 public:
  const ContextPtr& context() const noexcept { return ctx_; }
  const FieldPtr& field() const noexcept { return ctx_->field; }
  std::uint64_t n() const noexcept { return ctx_->n(); }
  std::uint64_t q() const noexcept { return ctx_->q(); }
  std::uint64_t k() const noexcept { return n() - static_cast<std::uint64_t>(g_.degree()); }
  const Poly& generator() const noexcept { return g_; }
  /// Odd residues s with g(beta^s) = 0, ascending.
  const std::vector<Residue>& defining_set() const noexcept { return defining_; }
  /// Coset leaders covering the defining set, ascending.
  std::vector<Residue> leaders() const;

  bool is_zero_code() const noexcept { return k() == 0; }
  bool is_full_code() const noexcept { return g_.degree() == 0; }

  friend bool operator==(const NegacyclicCode& a, const NegacyclicCode& b) {
    return a.n() == b.n() && a.g_ == b.g_;
  }

 private:
  NegacyclicCode(ContextPtr ctx, Poly g, std::vector<Residue> defining)
      : ctx_(std::move(ctx)), g_(std::move(g)), defining_(std::move(defining)) {}

  friend NegacyclicCode from_generator(const ContextPtr&, const Poly&);
  friend NegacyclicCode from_defining_set(const ContextPtr&, const std::vector<Residue>&);

  ContextPtr ctx_;
  Poly g_;
  std::vector<Residue> defining_;
};

/// Throws NotMonic, NotADivisor (g must divide x^n + 1), FieldMismatch.
NegacyclicCode from_generator(const ContextPtr& ctx, const Poly& g);
NegacyclicCode from_generator(const FieldPtr& field, std::uint64_t n, const Poly& g);

/// Throws NotOddResidues (S must lie in T) and NotClosedUnderQ.
NegacyclicCode from_defining_set(const ContextPtr& ctx, const std::vector<Residue>& s);
NegacyclicCode from_defining_set(const FieldPtr& field, std::uint64_t n, const std::vector<Residue>& s);

/// Generator monic(x^{deg h} h(1/x)) with h = (x^n + 1)/g.
NegacyclicCode dual(const NegacyclicCode& code);
/// C ∩ C^⊥, generated by lcm(g, g^⊥).
NegacyclicCode hull(const NegacyclicCode& code);
std::uint64_t hull_dim(const NegacyclicCode& code);

bool is_reversible(const NegacyclicCode& code);
/// Hull dimension zero. Throws InternalInconsistency if that disagrees with
/// self-reciprocity of g or with the symmetry S = -S of the defining set.
bool is_lcd(const NegacyclicCode& code);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// All 2^|Y| - 1 reversible codes, one per nonempty subset of Y, including
/// the zero code. Subsets are ordered by their bitmask over Y ascending.
/// Throws BudgetExceeded when 2^|Y| > budget.
std::vector<NegacyclicCode> enumerate_reversible(const FieldPtr& field, std::uint64_t n,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<NegacyclicCode> enumerate_reversible(const ContextPtr& ctx,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

struct ReversibleCount {
  std::uint64_t n = 0;
  std::uint64_t exponent = 0;  // count = 2^exponent - 1
  BigInt count;
};

/// 2^{(q^m + (m-1)q + m)/(4m)} - 1 for n = (q^m - 1)/2 odd and m an odd prime.
/// Throws HypothesisViolated otherwise.
ReversibleCount count_reversible_closed_form(std::uint64_t q, unsigned m);

/// Leaders s in X whose m_s is self-reciprocal, checked on the polynomials.
std::vector<Residue> self_reciprocal_factors(const ContextPtr& ctx);
/// Whether x + 1 is the only self-reciprocal irreducible factor of x^n + 1.
bool x_plus_1_is_only_self_reciprocal_factor(const ContextPtr& ctx);

}  // namespace negacode
