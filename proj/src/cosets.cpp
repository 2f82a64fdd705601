#include "negacode/cosets.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "negacode/error.hpp"

namespace negacode {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

BigInt big_pow(std::uint64_t b, std::uint64_t e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

std::string num(std::uint64_t x) { return std::to_string(x); }

}  // namespace

CosetSystem::CosetSystem(std::uint64_t n, std::uint64_t q) : n_(n), q_(q), two_n_(2 * n) {
  require(n >= 1, Errc::InvalidArgument, "length must be positive");
  require(q >= 3 && q % 2 == 1, Errc::InvalidArgument, "q must be odd");
  require(std::gcd(n, q) == 1, Errc::GcdViolation, "gcd(" + num(n) + ", " + num(q) + ") != 1");
  require(two_n_ <= kMaxTwoN, Errc::OutOfRange, "2n exceeds 2^31");
  m_ = mult_order(q, two_n_);

  leader_.assign(two_n_, kUnset);
  const std::uint64_t qr = q % two_n_;
  for (Residue s = 0; s < two_n_; ++s) {
    if (leader_[s] != kUnset) continue;
    std::vector<Residue> orbit;
    Residue x = s;
    do {
      leader_[x] = static_cast<std::uint32_t>(s);
      orbit.push_back(x);
      x = x * qr % two_n_;
    } while (x != s);
    std::sort(orbit.begin(), orbit.end());
    // q is odd, so multiplication by q preserves parity.
    const bool odd = s % 2 == 1;
    for (auto r : orbit)
      require((r % 2 == 1) == odd, Errc::InternalInconsistency, "coset mixes parities");
    cosets_.emplace(s, std::move(orbit));
  }

  odd_.reserve(n);
  for (Residue s = 1; s < two_n_; s += 2) odd_.push_back(s);
  for (const auto& [leader, members] : cosets_) {
    if (leader % 2 == 0) continue;
    x_.push_back(leader);
    const Residue partner = leader_of(negate(leader));
    if (leader <= partner) y_.push_back(leader);
  }
}

Residue CosetSystem::leader_of(Residue s) const {
  require(s < two_n_, Errc::OutOfRange, "residue " + num(s) + " outside Z_" + num(two_n_));
  return leader_[s];
}

const std::vector<Residue>& CosetSystem::members(Residue leader) const {
  const auto it = cosets_.find(leader);
  require(it != cosets_.end(), Errc::NotALeader, num(leader) + " is not a coset leader");
  return it->second;
}

std::vector<Residue> cyclotomic_coset(const CosetSystem& system, Residue s) {
  return system.members(system.leader_of(s));
}

std::vector<Residue> t_slice(const CosetSystem& system, Residue s) {
  auto coset = cyclotomic_coset(system, s);
  const auto odd_count = std::count_if(coset.begin(), coset.end(), [](Residue r) { return r % 2 == 1; });
  require(odd_count == 0 || odd_count == static_cast<long>(coset.size()), Errc::InternalInconsistency,
          "T ∩ C_s is neither C_s nor empty");
  if (odd_count == 0) return {};
  return coset;
}

const std::vector<Residue>& x_partition(const CosetSystem& system) { return system.X(); }
const std::vector<Residue>& y_partition(const CosetSystem& system) { return system.Y(); }

bool is_symmetric(const CosetSystem& system, Residue s) {
  require(s < system.two_n() && s % 2 == 1 && system.is_leader(s), Errc::NotALeader,
          num(s) + " is not a leader of an odd coset");
  return system.leader_of(system.negate(s)) == s;
}

bool minus_one_is_power_of_q(const CosetSystem& system) {
  const std::uint64_t target = system.two_n() - 1;
  std::uint64_t x = 1 % system.two_n();
  for (unsigned k = 0; k < system.m(); ++k) {
    if (x == target % system.two_n()) return true;
    x = mul_mod(x, system.q(), system.two_n());
  }
  return false;
}

BigInt gcd_power_direct(std::uint64_t b, std::uint64_t n, std::uint64_t m) {
  return boost::multiprecision::gcd(big_pow(b, n) + 1, big_pow(b, m) - 1);
}

BigInt gcd_power_formula(std::uint64_t b, std::uint64_t n, std::uint64_t m) {
  require(b > 1 && n >= 1 && m >= 1, Errc::InvalidArgument, "need b > 1, n >= 1, m >= 1");
  const std::uint64_t g = std::gcd(n, m);
  BigInt value;
  if ((m / g) % 2 == 1)
    value = b % 2 == 0 ? 1 : 2;
  else
    value = big_pow(b, g) + 1;
  require(value == gcd_power_direct(b, n, m), Errc::InternalInconsistency,
          "gcd(b^n+1, b^m-1) closed form disagrees with direct gcd");
  return value;
}

bool coset_leader_oracle(const CosetSystem& system, Residue s) {
  require(s < system.two_n(), Errc::OutOfRange, "residue outside Z_2n");
  require(s % 2 == 1, Errc::NotOddResidue, num(s) + " is even");
  Residue x = s;
  Residue smallest = s;
  do {
    smallest = std::min(smallest, x);
    x = mul_mod(x, system.q(), system.two_n());
  } while (x != s);
  return smallest == s;
}

std::vector<Residue> projective_exceptions(std::uint64_t q, unsigned m) {
  require(m >= 4 && m % 2 == 0, Errc::OutOfLemmaRange, "m must be even and >= 4");
  const std::uint64_t ell = (*checked_pow(q, m / 2) - 1) / (q - 1);
  const auto half = static_cast<long>((q + 1) / 2);
  const auto qs = static_cast<long>(q);
  long first = 0;
  long last = 0;
  long step = 1;
  if (m % 4 == 0) {
    first = half;
    last = half + (qs - 5) / 2;
  } else if (q % 4 == 1) {
    first = half + 1;
    last = half + (qs - 7) / 2;
    step = 2;
  } else {
    first = half;
    last = half + (qs - 7) / 2;
    step = 2;
  }
  // (q - 5)/2 and (q - 7)/2 are negative for small q and the range is empty.
  if (qs < 5 || (m % 4 == 2 && qs < 7)) return {};
  std::vector<Residue> out;
  for (long i = first; i <= last; i += step) out.push_back(1 + static_cast<Residue>(i) * ell);
  return out;
}

std::optional<TowerShape> tower_shape(std::uint64_t n, std::uint64_t q) {
  const BigInt target = BigInt(2) * n;
  for (unsigned t = 2;; ++t) {
    const BigInt den = target * (big_pow(q, t) + 1);
    if (big_pow(q, 4 * t) - 1 > den) break;
    for (unsigned tau = 2; tau < 32; ++tau) {
      const BigInt value = big_pow(q, std::uint64_t{t} << tau) - 1;
      if (value == den) return TowerShape{t, tau};
      if (value > den) break;
    }
  }
  return std::nullopt;
}

LeaderVerdict coset_leader_closed_form(const CosetSystem& system, Residue s, LeaderRegime regime) {
  const std::uint64_t q = system.q();
  const std::uint64_t n = system.n();
  const unsigned m = system.m();
  require(s < system.two_n() && s % 2 == 1, Errc::OutOfLemmaRange, "s must be an odd residue");
  require(s % q != 0, Errc::OutOfLemmaRange, "lemma assumes s not divisible by q");

  switch (regime) {
    case LeaderRegime::Generic: {
      const BigInt half_power = big_pow(q, m / 2);
      const BigInt full_power = big_pow(q, m);
      require(half_power < BigInt(2 * n) && BigInt(2 * n) <= full_power - 1, Errc::OutOfLemmaRange,
              "length outside q^{floor(m/2)}/2 < n <= (q^m - 1)/2");
      require(s >= 1 && BigInt(s) * (full_power - 1) <= BigInt(2 * n) * half_power, Errc::OutOfLemmaRange,
              "s above 2n q^{floor(m/2)}/(q^m - 1)");
      return {true, m, std::nullopt};
    }
    case LeaderRegime::HalfPower: {
      unsigned ell = 0;
      for (unsigned l = 1; big_pow(q, l) + 1 <= BigInt(2 * n); ++l)
        if (big_pow(q, l) + 1 == BigInt(2 * n)) ell = l;
      require(ell >= 2, Errc::OutOfLemmaRange, "n is not (q^l + 1)/2 with l >= 2");
      require(BigInt(s) <= big_pow(q, (ell - 1) / 2) + 1, Errc::OutOfLemmaRange,
              "s above q^{floor((l-1)/2)} + 1");
      return {true, 2 * std::uint64_t{ell}, std::nullopt};
    }
    case LeaderRegime::Projective: {
      unsigned mm = 0;
      for (unsigned k = 2; big_pow(q, k) - 1 <= BigInt(2 * n) * (q - 1); k += 2)
        if (big_pow(q, k) - 1 == BigInt(2 * n) * (q - 1)) mm = k;
      require(mm >= 4, Errc::OutOfLemmaRange, "n is not (q^m - 1)/(2(q - 1)) with m >= 4 even");
      require(mm == m, Errc::InternalInconsistency, "ord_{2n}(q) differs from the length exponent");
      const std::uint64_t lo = *checked_pow(q, (m - 2) / 2);
      const std::uint64_t hi = *checked_pow(q, m / 2);
      require(s >= lo && s <= hi, Errc::OutOfLemmaRange, "a outside [q^{(m-2)/2}, q^{m/2}]");
      LeaderVerdict v;
      const auto exceptions = projective_exceptions(q, m);
      v.is_leader = std::find(exceptions.begin(), exceptions.end(), s) == exceptions.end();
      if (v.is_leader) {
        const std::uint64_t special = (hi + 1) / 2;
        v.size = s == special ? m / 2 : m;
        const BigInt literal = (big_pow(q, m) + 1) / 2;
        v.literal_size = BigInt(s) == literal ? m / 2 : m;
      }
      return v;
    }
    case LeaderRegime::Tower: {
      const auto shape = tower_shape(n, q);
      require(shape.has_value(), Errc::OutOfLemmaRange, "n is not (q^{t 2^tau} - 1)/(2(q^t + 1))");
      const unsigned half_m = shape->t << (shape->tau - 1);
      require(BigInt(s) <= big_pow(q, (half_m - 1) / 2) + 1, Errc::OutOfLemmaRange,
              "s above q^{floor((t 2^{tau-1} - 1)/2)} + 1");
      return {true, std::uint64_t{shape->t} << shape->tau, std::nullopt};
    }
  }
  fail(Errc::InvalidArgument, "unknown regime");
}

std::vector<Residue> k_set(const CosetSystem& system, std::uint64_t delta) {
  require(delta >= 1, Errc::InvalidArgument, "delta must be >= 1");
  std::set<Residue> leaders;
  for (std::uint64_t i = 0; i < delta; ++i) leaders.insert(system.leader_of((1 + 2 * i) % system.two_n()));
  std::vector<Residue> out;
  for (auto l : leaders) {
    const auto& mem = system.members(l);
    out.insert(out.end(), mem.begin(), mem.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> k_set_symmetry(const CosetSystem& system, std::uint64_t delta) {
  const auto k = k_set(system, delta);
  std::vector<Residue> minus;
  minus.reserve(k.size());
  for (auto a : k) minus.push_back(system.negate(a));
  std::sort(minus.begin(), minus.end());
  std::vector<Residue> out;
  std::set_intersection(k.begin(), k.end(), minus.begin(), minus.end(), std::back_inserter(out));
  return out;
}

}  // namespace negacode
