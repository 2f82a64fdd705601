#pragma once

// Negacyclic BCH codes C(q, n, delta, b) and the closed-form dimension
// formulas for the lengths (q^l + 1)/2, (q^m - 1)/(2(q - 1)) and
// (q^{t 2^tau} - 1)/(2(q^t + 1)).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negacode/code.hpp"

namespace negacode {

struct BchSpec {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::int64_t b = 1;  // odd, reduced mod 2n
};

/// Defining set generated by beta^{b}, beta^{b+2}, ..., beta^{b+2(delta-2)}.
/// Throws EvenStart, DeltaTooSmall (delta < 2).
NegacyclicCode bch_generator(const ContextPtr& ctx, std::uint64_t delta, std::int64_t b);
NegacyclicCode bch_generator(const BchSpec& spec, std::uint64_t bound = kDefaultFieldBound);

/// Union of the q-orbits of b + 2i mod 2n for 0 <= i < count, ascending.
/// Works without any field and for any 2n <= 2^31.
std::vector<Residue> orbit_union(std::uint64_t q, std::uint64_t two_n, std::int64_t b, std::uint64_t count);

/// 1 + longest circular run of consecutive odd residues (step 2) in s.
/// Throws FullCode for empty s and ZeroCode when s is all of T.
std::uint64_t odd_run_bound(std::uint64_t two_n, const std::vector<Residue>& s);
std::uint64_t bch_bound(const NegacyclicCode& code);

/// Shared per-(q, n) contexts for repeated evaluations.
ContextPtr cached_context(std::uint64_t q, std::uint64_t n, std::uint64_t bound = kDefaultFieldBound);

enum class OracleKind { None, Polynomial, CosetCount };
std::string to_string(OracleKind kind);

struct DimFormulaResult {
  std::string family;  // sec4, sec52, sec56, sec58, sec513
  std::uint64_t q = 0;
  std::uint64_t m = 0;  // ord_{2n}(q)
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint64_t k = 0;
  std::uint64_t d_lb = 0;
  std::string branch;
  std::map<std::string, std::int64_t> aux;

  OracleKind oracle = OracleKind::None;
  std::optional<std::uint64_t> oracle_k;
  /// BCH bound of the constructed defining set.
  std::optional<std::uint64_t> run_bound;
  bool in_stated_range = true;
  bool field_too_large = false;
  /// Formula equals oracle (true when no oracle ran).
  bool agrees = true;
};

struct DimOptions {
  bool run_oracle = true;
  /// Accept delta beyond the stated range; the oracle then always runs.
  bool allow_out_of_range = false;
  std::uint64_t field_bound = kDefaultFieldBound;
  /// Largest n for which the oracle builds generator polynomials; above it
  /// only the cosets are counted.
  std::uint64_t polynomial_limit = 4096;
};

/// n = (q^l + 1)/2, code C(q, n, delta, 1), d >= 2 delta - 1.
DimFormulaResult dim_thm_4_4(std::uint64_t q, unsigned ell, std::uint64_t delta, const DimOptions& opts = {});
/// n = (q^m - 1)/(2(q - 1)), code C(q, n, 2 delta + 1, 1 - 2 delta), d >= 2 delta + 1.
DimFormulaResult dim_thm_5_2(std::uint64_t q, unsigned m, std::uint64_t delta, const DimOptions& opts = {});
/// n = (q^m - 1)/(2(q - 1)), code C(q, n, delta + 1, 1), d >= delta.
DimFormulaResult dim_thm_5_6(std::uint64_t q, unsigned m, std::uint64_t delta, const DimOptions& opts = {});
/// n = (q^m - 1)/(2(q - 1)), code C(q, n, 2 delta + 1, 1 - 2 delta), d >= 2 delta + 1.
DimFormulaResult dim_thm_5_8(std::uint64_t q, unsigned m, std::uint64_t delta, const DimOptions& opts = {});
/// n = (q^{t 2^tau} - 1)/(2(q^t + 1)), code C(q, n, 2 delta + 1, 1 - 2 delta), d >= 2 delta + 1.
DimFormulaResult dim_thm_5_13(std::uint64_t q, unsigned t, unsigned tau, std::uint64_t delta,
                              const DimOptions& opts = {});

/// Stated delta range [lo, hi] of each family. Throws HypothesisViolated when
/// the length parameters themselves are outside the hypotheses.
std::pair<std::uint64_t, std::uint64_t> delta_range_4_4(std::uint64_t q, unsigned ell);
std::pair<std::uint64_t, std::uint64_t> delta_range_5_2(std::uint64_t q, unsigned m);
std::pair<std::uint64_t, std::uint64_t> delta_range_5_6(std::uint64_t q, unsigned m);
std::pair<std::uint64_t, std::uint64_t> delta_range_5_13(std::uint64_t q, unsigned t, unsigned tau);

}  // namespace negacode
