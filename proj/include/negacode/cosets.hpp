#pragma once

// q-cyclotomic cosets modulo 2n and the odd-residue bookkeeping used to
// factor x^n + 1: the set T of odd residues, slices T_s, the leader set X
// and the symmetric-pair representatives Y.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "negacode/numtheory.hpp"

namespace negacode {

using Residue = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kMaxTwoN = std::uint64_t{1} << 31;

class CosetSystem {
 public:
  /// Requires gcd(n, q) = 1 and 2n <= 2^31.
  CosetSystem(std::uint64_t n, std::uint64_t q);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t two_n() const noexcept { return two_n_; }
  /// ord_{2n}(q).
  unsigned m() const noexcept { return m_; }

  Residue leader_of(Residue s) const;
  bool is_leader(Residue s) const { return leader_of(s) == s; }
  /// Members of the coset with the given leader, ascending.
  const std::vector<Residue>& members(Residue leader) const;
  std::size_t coset_size(Residue s) const { return members(leader_of(s)).size(); }

  /// All cosets of Z_{2n} keyed by leader.
  const std::map<Residue, std::vector<Residue>>& cosets() const noexcept { return cosets_; }
  /// Odd residues of Z_{2n}, ascending.
  const std::vector<Residue>& T() const noexcept { return odd_; }
  /// Leaders of the nonempty slices T_s, ascending.
  const std::vector<Residue>& X() const noexcept { return x_; }
  /// One leader per pair {T_s, T_{2n-s}}: the smaller of the two leaders.
  const std::vector<Residue>& Y() const noexcept { return y_; }

  Residue negate(Residue s) const noexcept { return (two_n_ - s % two_n_) % two_n_; }

 private:
  std::uint64_t n_;
  std::uint64_t q_;
  std::uint64_t two_n_;
  unsigned m_;
  std::vector<std::uint32_t> leader_;
  std::map<Residue, std::vector<Residue>> cosets_;
  std::vector<Residue> odd_;
  std::vector<Residue> x_;
  std::vector<Residue> y_;
};

/// C_s mod 2n, ascending. Throws OutOfRange for s >= 2n.
std::vector<Residue> cyclotomic_coset(const CosetSystem& system, Residue s);
/// T ∩ C_s: C_s for odd s, empty for even s. The dichotomy is checked.
std::vector<Residue> t_slice(const CosetSystem& system, Residue s);
const std::vector<Residue>& x_partition(const CosetSystem& system);
const std::vector<Residue>& y_partition(const CosetSystem& system);

/// (2n - s) ∈ T_s. Throws NotALeader unless s ∈ X.
bool is_symmetric(const CosetSystem& system, Residue s);
/// Whether q^k = -1 (mod 2n) for some k.
bool minus_one_is_power_of_q(const CosetSystem& system);

/// Closed form for gcd(b^n + 1, b^m - 1); cross-checked against gcd_power_direct.
BigInt gcd_power_formula(std::uint64_t b, std::uint64_t n, std::uint64_t m);
BigInt gcd_power_direct(std::uint64_t b, std::uint64_t n, std::uint64_t m);

/// Ground truth: s == min(C_s), by enumeration. s must be odd.
bool coset_leader_oracle(const CosetSystem& system, Residue s);

/// Which closed-form leader lemma to apply.
enum class LeaderRegime {
  Generic,     // q^{floor(m/2)}/2 < n <= (q^m - 1)/2
  HalfPower,   // n = (q^l + 1)/2
  Projective,  // n = (q^m - 1)/(2(q - 1)), m >= 4 even
  Tower,       // n = (q^{t 2^tau} - 1)/(2(q^t + 1)), t, tau >= 2
};

struct LeaderVerdict {
  bool is_leader = false;
  std::uint64_t size = 0;
  /// Projective regime only: the size the lemma gives when its special value
  /// is read literally as (q^m + 1)/2 instead of (q^{m/2} + 1)/2.
  std::optional<std::uint64_t> literal_size;
};

/// Throws OutOfLemmaRange when s is outside the hypothesis of the lemma or
/// the system's length does not have the regime's form.
LeaderVerdict coset_leader_closed_form(const CosetSystem& system, Residue s, LeaderRegime regime);

/// Non-leaders of the projective regime: {1 + i (q^{m/2} - 1)/(q - 1) : i ∈ I}.
std::vector<Residue> projective_exceptions(std::uint64_t q, unsigned m);

/// K = union of T_{1+2i} for 0 <= i < delta, ascending.
std::vector<Residue> k_set(const CosetSystem& system, std::uint64_t delta);
/// K ∩ (-K), ascending.
std::vector<Residue> k_set_symmetry(const CosetSystem& system, std::uint64_t delta);

/// (t, tau) with n = (q^{t 2^tau} - 1)/(2(q^t + 1)), t, tau >= 2, if any.
struct TowerShape {
  unsigned t;
  unsigned tau;
};
std::optional<TowerShape> tower_shape(std::uint64_t n, std::uint64_t q);

}  // namespace negacode
