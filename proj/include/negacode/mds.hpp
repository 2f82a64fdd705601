#pragma once

// MDS LCD negacyclic codes of even length n | q - 1 with defining set
// S = {1 + 2i : n/2 - rho - 1 <= i <= n/2 + rho} mod 2n.

#include <cstdint>
#include <vector>

#include "negacode/code.hpp"

namespace negacode {

struct MdsSpec {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t rho = 0;
};

/// Throws HypothesisViolated unless n is even, n | q - 1 and rho < n/2 - 1.
void validate(const MdsSpec& spec);

/// S ascending; |S| = 2(rho + 1) and S = -S.
std::vector<Residue> build_defining_set(const MdsSpec& spec);

struct Applicability {
  bool q_closed = false;
  /// Residues a in S with q a mod 2n outside S, ascending.
  std::vector<Residue> witnesses;
};
Applicability applicability_check(const MdsSpec& spec);

struct MdsConstruction {
  NegacyclicCode code;
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t d;  // claimed 2 rho + 3
};

/// Throws NotApplicable when S is not closed under multiplication by q.
MdsConstruction construct_mds_lcd(const MdsSpec& spec, std::uint64_t bound = kDefaultFieldBound);

}  // namespace negacode
