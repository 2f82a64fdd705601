#pragma once

// Matrix-level checks over GF(q): generator and parity-check matrices,
// exact minimum distance, MDS certification and hull dimension.

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "negacode/code.hpp"

namespace negacode {

using RepMatrix = Eigen::Matrix<Rep, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct FieldMatrix {
  FieldPtr field;
  RepMatrix a;

  Eigen::Index rows() const noexcept { return a.rows(); }
  Eigen::Index cols() const noexcept { return a.cols(); }
  bool is_zero() const { return (a.array() == 0).all(); }
};

/// Row i is x^i g(x), 0 <= i < k. Throws ZeroCode.
FieldMatrix generator_matrix(const NegacyclicCode& code);
/// Generator matrix of the dual code. Throws FullCode.
FieldMatrix parity_check_matrix(const NegacyclicCode& code);

/// A B^T over the common field.
FieldMatrix multiply_transpose(const FieldMatrix& a, const FieldMatrix& b);
/// Rows of a stacked over rows of b.
FieldMatrix stack(const FieldMatrix& a, const FieldMatrix& b);
std::size_t rank(FieldMatrix m);

inline constexpr std::uint64_t kDefaultDistanceBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultMdsBudget = 1'000'000;

struct DistanceOptions {
  std::uint64_t budget = kDefaultDistanceBudget;
  unsigned threads = 0;  // 0: hardware concurrency
  /// Primal search stops once a codeword of this weight is seen. Only pass a
  /// bound proved elsewhere; 0 enumerates everything.
  std::uint64_t known_lower_bound = 0;
};

enum class DistanceSide { Trivial, Primal, Dual };
std::string to_string(DistanceSide side);

struct DistanceResult {
  std::uint64_t d = 0;
  DistanceSide side = DistanceSide::Trivial;
  std::uint64_t work = 0;  // codewords visited or column subsets tested
};

/// Exact minimum distance. Primal: all (q^k - 1)/(q - 1) projective messages.
/// Dual: smallest w such that some w columns of H are dependent. The side
/// with the smaller estimated cost is taken. Throws BudgetExceeded.
DistanceResult min_distance(const NegacyclicCode& code, const DistanceOptions& opts = {});
std::uint64_t min_distance_exhaustive(const NegacyclicCode& code, const DistanceOptions& opts = {});

/// Every (n - k)-subset of columns of H is nonsingular. Throws BudgetExceeded
/// when C(n, n - k) > budget, ZeroCode/FullCode for trivial codes.
bool certify_mds(const NegacyclicCode& code, std::uint64_t budget = kDefaultMdsBudget);

/// n - rank [G; H], the dimension of C ∩ C^⊥. Throws ZeroCode, FullCode.
std::uint64_t hull_dim_matrix(const NegacyclicCode& code);

}  // namespace negacode
