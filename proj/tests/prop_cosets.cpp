#include "doctest.h"

#include <algorithm>
#include <set>

#include "negacode/cosets.hpp"
#include "negacode/error.hpp"
#include "oracles.hpp"
#include "prop_util.hpp"

using namespace negacode;

namespace {

const std::vector<std::uint64_t> kQs = {3, 5, 7, 9, 11, 13, 25, 27};

}  // namespace

TEST_SUITE("prop.cosets") {
  TEST_CASE("parity dichotomy, orbit agreement, sizes divide m") {
    std::size_t systems = 0;
    for (auto q : kQs)
      for (std::uint64_t n = 1; n <= 150; ++n) {
        if (oracle::gcd_u64(n, q) != 1) continue;
        const CosetSystem sys(n, q);
        ++systems;
        for (const auto& [leader, members] : sys.cosets()) {
          const auto orbit = oracle::orbit(leader, q, 2 * n);
          REQUIRE(std::vector<Residue>(orbit.begin(), orbit.end()) == members);
          REQUIRE(*orbit.begin() == leader);
          for (auto a : members) REQUIRE(a % 2 == leader % 2);
          if (leader % 2 == 1) REQUIRE(sys.m() % members.size() == 0);
        }
        std::size_t covered = 0;
        for (auto s : sys.X()) covered += t_slice(sys, s).size();
        REQUIRE(covered == n);
      }
    CHECK(systems > 500);
  }

  TEST_CASE("odd n: |T_s| = |C_2s|") {
    for (auto q : kQs)
      for (std::uint64_t n = 1; n <= 301; n += 2) {
        if (oracle::gcd_u64(n, q) != 1) continue;
        const CosetSystem sys(n, q);
        for (auto s : sys.X()) REQUIRE(t_slice(sys, s).size() == oracle::orbit(2 * s % (2 * n), q, 2 * n).size());
      }
  }

  TEST_CASE("random leader queries") {
    for (int i = 0; i < 2000; ++i) {
      const auto q = kQs[prop::uniform(0, kQs.size() - 1)];
      std::uint64_t n;
      do n = prop::uniform(1, 5000);
      while (oracle::gcd_u64(n, q) != 1);
      const CosetSystem sys(n, q);
      const Residue s = prop::uniform(0, 2 * n - 1);
      const auto orbit = oracle::orbit(s, q, 2 * n);
      REQUIRE(sys.leader_of(s) == *orbit.begin());
      if (s % 2 == 1) REQUIRE(coset_leader_oracle(sys, s) == (*orbit.begin() == s));
    }
  }

  TEST_CASE("generic leader range") {
    std::size_t checked = 0;
    for (std::uint64_t q : {3, 5, 7, 9, 11}) {
      for (std::uint64_t n = 2; n <= 20000; ++n) {
        if (oracle::gcd_u64(n, q) != 1) continue;
        // Only lengths where the lemma admits s = 1.
        const unsigned m = mult_order(q, 2 * n);
        const auto full = checked_pow(q, m);
        const auto half = checked_pow(q, m / 2);
        if (!full || *half >= 2 * n || *full - 1 > 2 * n * *half) continue;
        const CosetSystem sys(n, q);
        for (Residue s = 1; s < 2 * n; s += 2) {
          if (s % q == 0) continue;
          LeaderVerdict v;
          try {
            v = coset_leader_closed_form(sys, s, LeaderRegime::Generic);
          } catch (const Error& e) {
            REQUIRE(e.code() == Errc::OutOfLemmaRange);
            break;  // s beyond the range, or the length is outside it
          }
          REQUIRE(v.is_leader == coset_leader_oracle(sys, s));
          REQUIRE(v.size == sys.coset_size(s));
          ++checked;
        }
      }
    }
    MESSAGE("generic: " << checked << " residues");
    CHECK(checked >= 1000);
  }

  TEST_CASE("half-power leader range") {
    std::size_t checked = 0;
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
      for (unsigned ell = 2;; ++ell) {
        const auto qe = checked_pow(q, ell);
        if (!qe || *qe + 1 > (std::uint64_t{1} << 22)) break;
        const std::uint64_t n = (*qe + 1) / 2;
        const CosetSystem sys(n, q);
        REQUIRE(sys.m() == 2 * ell);
        REQUIRE(minus_one_is_power_of_q(sys));
        for (Residue s = 1; s < 2 * n; s += 2) {
          if (s % q == 0) continue;
          LeaderVerdict v;
          try {
            v = coset_leader_closed_form(sys, s, LeaderRegime::HalfPower);
          } catch (const Error&) {
            break;
          }
          REQUIRE(v.is_leader == coset_leader_oracle(sys, s));
          REQUIRE(v.size == sys.coset_size(s));
          ++checked;
        }
      }
    }
    CHECK(checked >= 100);
  }

  TEST_CASE("projective regime, m in {4, 6}") {
    std::size_t checked = 0;
    for (std::uint64_t q : {3, 5, 7}) {
      for (unsigned m : {4u, 6u}) {
        const std::uint64_t n = (*checked_pow(q, m) - 1) / (2 * (q - 1));
        const CosetSystem sys(n, q);
        const std::uint64_t lo = *checked_pow(q, (m - 2) / 2);
        const std::uint64_t hi = *checked_pow(q, m / 2);
        for (Residue a = lo | 1; a <= hi; a += 2) {
          if (a % q == 0) continue;
          const auto v = coset_leader_closed_form(sys, a, LeaderRegime::Projective);
          REQUIRE(v.is_leader == coset_leader_oracle(sys, a));
          if (v.is_leader) REQUIRE(v.size == sys.coset_size(a));
          ++checked;
        }
      }
    }
    CHECK(checked > 100);
    MESSAGE("projective: " << checked << " residues");
  }

  TEST_CASE("tower regime") {
    std::size_t checked = 0;
    struct Shape {
      std::uint64_t q;
      unsigned t, tau;
    };
    for (const auto& sh : {Shape{3, 2, 2}, Shape{5, 2, 2}, Shape{3, 3, 2}, Shape{7, 2, 2}, Shape{3, 2, 3}}) {
      const auto qm = *checked_pow(sh.q, sh.t << sh.tau);
      const auto qt = *checked_pow(sh.q, sh.t);
      const std::uint64_t n = (qm - 1) / (2 * (qt + 1));
      const CosetSystem sys(n, sh.q);
      REQUIRE(sys.m() == (sh.t << sh.tau));
      const auto shape = tower_shape(n, sh.q);
      REQUIRE(shape);
      REQUIRE(shape->t == sh.t);
      REQUIRE(shape->tau == sh.tau);
      for (Residue s = 1;; s += 2) {
        if (s % sh.q == 0) continue;
        LeaderVerdict v;
        try {
          v = coset_leader_closed_form(sys, s, LeaderRegime::Tower);
        } catch (const Error&) {
          break;
        }
        REQUIRE(v.is_leader == coset_leader_oracle(sys, s));
        REQUIRE(v.size == sys.coset_size(s));
        ++checked;
      }
    }
    // The lemma covers s <= q^{(t 2^{tau-1} - 1)/2} + 1 only.
    CHECK(checked >= 18);
  }

  TEST_CASE("gcd(b^n + 1, b^m - 1)") {
    std::size_t checked = 0;
    for (std::uint64_t b = 2; b <= 9; ++b)
      for (std::uint64_t n = 1; n <= 12; ++n)
        for (std::uint64_t m = 1; m <= 12; ++m) {
          const std::uint64_t direct = oracle::gcd_u64(*checked_pow(b, n) + 1, *checked_pow(b, m) - 1);
          REQUIRE(gcd_power_formula(b, n, m) == BigInt(direct));
          ++checked;
        }
    CHECK(checked == 8 * 144);
  }

  TEST_CASE("K and K ∩ -K against enumeration") {
    for (int i = 0; i < 1000; ++i) {
      const auto q = kQs[prop::uniform(0, kQs.size() - 1)];
      std::uint64_t n;
      do n = prop::uniform(1, 2000);
      while (oracle::gcd_u64(n, q) != 1);
      const CosetSystem sys(n, q);
      const std::uint64_t delta = prop::uniform(1, std::min<std::uint64_t>(n, 40));
      std::set<Residue> k;
      for (std::uint64_t j = 0; j < delta; ++j) {
        const auto o = oracle::orbit((1 + 2 * j) % (2 * n), q, 2 * n);
        k.insert(o.begin(), o.end());
      }
      std::vector<Residue> sym;
      for (auto a : k)
        if (k.count((2 * n - a) % (2 * n))) sym.push_back(a);
      REQUIRE(k_set(sys, delta) == std::vector<Residue>(k.begin(), k.end()));
      REQUIRE(k_set_symmetry(sys, delta) == sym);
    }
  }
}
