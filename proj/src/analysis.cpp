#include "negacode/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "negacode/error.hpp"

namespace negacode {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact while no intermediate overflows; saturates afterwards.
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

template <typename Fn>
void run_workers(unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    fn();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(fn);
  for (auto& t : pool) t.join();
}

FieldMatrix rows_of(const Poly& g, std::uint64_t count, std::uint64_t n) {
  FieldMatrix m{g.field(), RepMatrix::Zero(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(n))};
  for (std::uint64_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) m.a(i, i + j) = g.coeffs()[j];
  return m;
}

// Columns of H as dense vectors.
std::vector<std::vector<Rep>> columns(const FieldMatrix& h) {
  std::vector<std::vector<Rep>> out(h.cols(), std::vector<Rep>(h.rows()));
  for (Eigen::Index j = 0; j < h.cols(); ++j)
    for (Eigen::Index i = 0; i < h.rows(); ++i) out[j][i] = h.a(i, j);
  return out;
}

// Incremental echelon basis; add() reports whether v was independent.
class Echelon {
 public:
  Echelon(const FiniteField& f, std::size_t dim) : f_(f), dim_(dim) {}

  bool add(std::vector<Rep> v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Rep c = v[pivots_[b]];
      if (c == 0) continue;
      const Rep neg = f_.neg(c);
      for (std::size_t i = 0; i < dim_; ++i) v[i] = f_.add(v[i], f_.mul(neg, basis_[b][i]));
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rep inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  void pop() {
    basis_.pop_back();
    pivots_.pop_back();
  }

 private:
  const FiniteField& f_;
  std::size_t dim_;
  std::vector<std::vector<Rep>> basis_;
  std::vector<std::size_t> pivots_;
};

std::uint64_t primal_cost(std::uint64_t q, std::uint64_t k) {
  std::uint64_t total = 0;
  std::uint64_t block = 1;
  for (std::uint64_t p = 0; p < k; ++p) {
    total = sat_add(total, block);
    block = sat_mul(block, q);
  }
  return total;
}

DistanceResult primal_search(const NegacyclicCode& code, std::uint64_t lower, unsigned threads) {
  const auto g = generator_matrix(code);
  const FiniteField& f = *code.field();
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::uint64_t q = f.size();

  // scaled[i][c] = c * G_i.
  std::vector<std::vector<std::vector<Rep>>> scaled(k, std::vector<std::vector<Rep>>(q, std::vector<Rep>(n)));
  for (std::size_t i = 0; i < k; ++i)
    for (Rep c = 0; c < q; ++c)
      for (std::size_t j = 0; j < n; ++j) scaled[i][c][j] = f.mul(c, g.a(i, j));

  // Messages with leading nonzero digit 1 at pivot p; digits after p are free.
  struct Chunk {
    std::size_t pivot;
    std::uint64_t lo, hi;
  };
  constexpr std::uint64_t kChunk = 4096;
  std::vector<Chunk> chunks;
  std::uint64_t block = 1;
  for (std::size_t p = k; p-- > 0;) {
    for (std::uint64_t lo = 0; lo < block; lo += kChunk) chunks.push_back({p, lo, std::min(block, lo + kChunk)});
    block *= q;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> best{n};
  std::atomic<std::uint64_t> work{0};
  run_workers(threads, [&] {
    std::vector<Rep> c(n);
    std::vector<Rep> digit;
    for (std::size_t idx; (idx = next.fetch_add(1)) < chunks.size();) {
      if (best.load() <= lower) break;
      const auto& ch = chunks[idx];
      const std::size_t free = k - 1 - ch.pivot;
      digit.assign(free, 0);
      std::uint64_t x = ch.lo;
      for (std::size_t j = 0; j < free; ++j, x /= q) digit[j] = static_cast<Rep>(x % q);
      c = scaled[ch.pivot][1];
      for (std::size_t j = 0; j < free; ++j)
        for (std::size_t t = 0; t < n; ++t) c[t] = f.add(c[t], scaled[ch.pivot + 1 + j][digit[j]][t]);
      std::uint64_t local = best.load();
      for (std::uint64_t m = ch.lo; m < ch.hi; ++m) {
        const auto w = static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](Rep v) { return v != 0; }));
        local = std::min(local, w);
        if (m + 1 == ch.hi) break;
        for (std::size_t j = 0; j < free; ++j) {
          const Rep old = digit[j];
          const Rep nxt = static_cast<Rep>((old + 1) % q);
          digit[j] = nxt;
          const auto& step = scaled[ch.pivot + 1 + j][f.sub(nxt, old)];
          for (std::size_t t = 0; t < n; ++t) c[t] = f.add(c[t], step[t]);
          if (nxt != 0) break;
        }
      }
      work.fetch_add(ch.hi - ch.lo);
      std::uint64_t cur = best.load();
      while (local < cur && !best.compare_exchange_weak(cur, local)) {
      }
    }
  });
  return {best.load(), DistanceSide::Primal, work.load()};
}

DistanceResult dual_search(const NegacyclicCode& code, std::uint64_t budget, unsigned threads) {
  const auto h = parity_check_matrix(code);
  const auto cols = columns(h);
  const FiniteField& f = *code.field();
  const std::size_t n = code.n();
  const std::size_t r = n - code.k();
  std::atomic<std::uint64_t> work{0};

  // Any r + 1 columns are dependent, so the search ends by w = r + 1.
  for (std::size_t w = 1; w <= r + 1; ++w) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};
    std::atomic<bool> over{false};
    run_workers(threads, [&] {
      // Depth-first over increasing index tuples; true on a dependency.
      auto dfs = [&](auto&& self, Echelon& ech, std::size_t start, std::size_t depth) -> bool {
        for (std::size_t j = start; j + (w - depth) <= n; ++j) {
          if (found.load() || over.load()) return false;
          if (work.fetch_add(1) >= budget) {
            over.store(true);
            return false;
          }
          if (!ech.add(cols[j])) return true;
          if (depth + 1 < w && self(self, ech, j + 1, depth + 1)) return true;
          ech.pop();
        }
        return false;
      };
      for (std::size_t first; (first = next.fetch_add(1)) + w <= n;) {
        if (found.load() || over.load()) break;
        if (work.fetch_add(1) >= budget) {
          over.store(true);
          break;
        }
        Echelon ech(f, r);
        if (!ech.add(cols[first]) || (w > 1 && dfs(dfs, ech, first + 1, 1))) found.store(true);
      }
    });
    if (found.load()) return {w, DistanceSide::Dual, work.load()};
    require(!over.load(), Errc::BudgetExceeded,
            "dual column search exceeded " + std::to_string(budget) + " steps at weight " + std::to_string(w));
  }
  fail(Errc::InternalInconsistency, "no dependent column set of size <= n - k + 1");
}

bool nonsingular(const FiniteField& f, const std::vector<std::vector<Rep>>& cols,
                 const std::vector<std::size_t>& pick, std::size_t dim) {
  Echelon ech(f, dim);
  for (auto j : pick)
    if (!ech.add(cols[j])) return false;
  return true;
}

}  // namespace

FieldMatrix generator_matrix(const NegacyclicCode& code) {
  require(!code.is_zero_code(), Errc::ZeroCode, "the zero code has no generator matrix");
  return rows_of(code.generator(), code.k(), code.n());
}

FieldMatrix parity_check_matrix(const NegacyclicCode& code) {
  require(!code.is_full_code(), Errc::FullCode, "the full code has no parity checks");
  return generator_matrix(dual(code));
}

FieldMatrix multiply_transpose(const FieldMatrix& a, const FieldMatrix& b) {
  require(same_field(a.field, b.field), Errc::FieldMismatch, "matrices over different fields");
  require(a.cols() == b.cols(), Errc::InvalidArgument, "column counts differ");
  const FiniteField& f = *a.field;
  FieldMatrix out{a.field, RepMatrix::Zero(a.rows(), b.rows())};
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      Rep acc = 0;
      for (Eigen::Index t = 0; t < a.cols(); ++t) acc = f.add(acc, f.mul(a.a(i, t), b.a(j, t)));
      out.a(i, j) = acc;
    }
  return out;
}

FieldMatrix stack(const FieldMatrix& a, const FieldMatrix& b) {
  require(same_field(a.field, b.field), Errc::FieldMismatch, "matrices over different fields");
  require(a.cols() == b.cols(), Errc::InvalidArgument, "column counts differ");
  FieldMatrix out{a.field, RepMatrix(a.rows() + b.rows(), a.cols())};
  out.a << a.a, b.a;
  return out;
}

std::size_t rank(FieldMatrix m) {
  const FiniteField& f = *m.field;
  auto& a = m.a;
  std::size_t r = 0;
  for (Eigen::Index col = 0; col < a.cols() && static_cast<Eigen::Index>(r) < a.rows(); ++col) {
    Eigen::Index piv = static_cast<Eigen::Index>(r);
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.row(piv).swap(a.row(static_cast<Eigen::Index>(r)));
    const Rep inv = f.inv(a(r, col));
    for (Eigen::Index t = col; t < a.cols(); ++t) a(r, t) = f.mul(a(r, t), inv);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == static_cast<Eigen::Index>(r) || a(i, col) == 0) continue;
      const Rep neg = f.neg(a(i, col));
      for (Eigen::Index t = col; t < a.cols(); ++t) a(i, t) = f.add(a(i, t), f.mul(neg, a(r, t)));
    }
    ++r;
  }
  return r;
}

std::string to_string(DistanceSide side) {
  switch (side) {
    case DistanceSide::Trivial: return "trivial";
    case DistanceSide::Primal: return "primal";
    case DistanceSide::Dual: return "dual";
  }
  return "trivial";
}

DistanceResult min_distance(const NegacyclicCode& code, const DistanceOptions& opts) {
  require(!code.is_zero_code(), Errc::ZeroCode, "the zero code has no nonzero codeword");
  if (code.is_full_code()) return {1, DistanceSide::Trivial, 0};
  const std::uint64_t q = code.q();
  const std::uint64_t n = code.n();
  const std::uint64_t k = code.k();
  const std::uint64_t primal = primal_cost(q, k);
  std::uint64_t dual = 0;
  for (std::uint64_t w = 1; w <= n - k + 1; ++w) dual = sat_add(dual, binomial(n, w));
  const unsigned threads = worker_count(opts.threads);
  if (primal <= std::min(dual, opts.budget)) return primal_search(code, opts.known_lower_bound, threads);
  return dual_search(code, opts.budget, threads);
}

std::uint64_t min_distance_exhaustive(const NegacyclicCode& code, const DistanceOptions& opts) {
  return min_distance(code, opts).d;
}

bool certify_mds(const NegacyclicCode& code, std::uint64_t budget) {
  require(!code.is_zero_code(), Errc::ZeroCode, "zero code");
  require(!code.is_full_code(), Errc::FullCode, "full code");
  const std::size_t n = code.n();
  const std::size_t r = n - code.k();
  const std::uint64_t subsets = binomial(n, r);
  require(subsets <= budget, Errc::BudgetExceeded,
          "C(" + std::to_string(n) + ", " + std::to_string(r) + ") submatrices exceed the budget");
  const auto cols = columns(parity_check_matrix(code));
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    if (!nonsingular(*code.field(), cols, pick, r)) return false;
    std::size_t i = r;
    while (i-- > 0 && pick[i] == n - r + i) {
    }
    if (i == static_cast<std::size_t>(-1)) return true;
    ++pick[i];
    for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::uint64_t hull_dim_matrix(const NegacyclicCode& code) {
  const auto g = generator_matrix(code);
  const auto h = parity_check_matrix(code);
  return code.n() - rank(stack(g, h));
}

}  // namespace negacode
