#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pvmatch/edit.hpp"
#include "pvmatch/lcp_index.hpp"
#include "pvmatch/pattern.hpp"

namespace pvm {

/// A regular pattern reduced to its terminal word plus the rows where
/// insertions are free. Row indices are 1-based positions in `beta`; row 1 is
/// the sentinel.
struct RegularPatternView {
  Word beta;                            // kSentinel followed by term(p)
  std::vector<std::size_t> free_rows;   // strictly increasing, each in [1, |beta|]
  std::vector<VarId> free_owner;        // surviving variable of each free row
  std::vector<VarId> merge_map;         // original id -> surviving id (itself if it survived)
  std::size_t original_var_count = 0;
  bool sentinel_added = true;

  std::size_t var_count() const noexcept { return free_rows.size(); }
};

struct NormalizedInstance {
  RegularPatternView view;
  Word w;  // kSentinel followed by the input word
};

/// Merges adjacent variables and prepends the sentinel to both sides.
/// Throws InvalidInput if `p` is not regular.
NormalizedInstance normalize(const Pattern& p, WordView w);

/// Full (|beta|+1) x (n+1) table of the free-insertion recurrence.
class DpMatrix {
 public:
  DpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t operator()(std::size_t j, std::size_t l) const { return cells_[j * cols_ + l]; }
  std::uint32_t& operator()(std::size_t j, std::size_t l) { return cells_[j * cols_ + l]; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> cells_;
};

struct DpResult {
  std::size_t distance;
  std::optional<DpMatrix> matrix;
};

/// O(|beta| n) evaluation; `w` is the normalized (sentinel-prefixed) word.
DpResult dp_distance(const RegularPatternView& v, WordView w, bool keep_matrix = false);

/// A substitution for the original pattern and a script turning h(p) into the
/// original word. `cost` equals both the script cost and the distance.
struct Witness {
  Substitution substitution;
  EditScript script;
  std::size_t cost = 0;
};

Witness dp_traceback(const RegularPatternView& v, WordView w, const DpMatrix& d);

inline constexpr std::int32_t kNegInf = std::numeric_limits<std::int32_t>::min() / 2;

/// Frontier rows for levels 0..distance (or 0..max_delta when the distance
/// exceeds it). rows[delta][d + |beta|] is the furthest row on diagonal d whose
/// value is exactly delta, or kNegInf if diagonal d did not advance at delta or
/// was pruned.
struct FrontierTable {
  std::size_t beta_len = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::int32_t>> rows;
  std::vector<std::int64_t> d_prime;  // pruning boundary in force while computing each level
  std::optional<std::size_t> distance;

  std::int32_t at(std::size_t delta, std::int64_t d) const {
    return rows[delta][static_cast<std::size_t>(d + static_cast<std::int64_t>(beta_len))];
  }
};

/// Diagonal-transition decision procedure for the free-insertion distance.
/// Holds the LCE index so that repeated decisions on one instance share it.
class FrontierSolver {
 public:
  FrontierSolver(const RegularPatternView& v, WordView w);

  /// The distance if it is at most `max_delta`.
  std::optional<std::size_t> decide(std::size_t max_delta) const;

  /// Same decision, additionally recording every level (for small inputs).
  FrontierTable trace(std::size_t max_delta) const;

  /// Computes level `delta` into `cur` from `prev` (ignored at delta 0). Both
  /// are indexed by d + |beta| and hold, per diagonal, the furthest row with
  /// value at most the level. Diagonals up to `d_prime` are not computed;
  /// d_prime itself is pinned to |beta|. Returns the largest diagonal whose
  /// row reached |beta| (or d_prime if none did).
  ///
  /// One kind of cell may lag by a level here: the last-column cell directly
  /// above a free row, when it is only reachable by an insertion. No optimal
  /// path to the bottom-right corner needs such a cell, so decisions are exact.
  /// trace() resolves these cells exactly.
  std::int64_t level(std::size_t delta, std::span<const std::int32_t> prev, std::span<std::int32_t> cur,
                     std::int64_t d_prime) const;

  std::size_t width() const noexcept { return beta_len_ + n_ + 1; }

 private:
  // Reach of diagonal d at the previous level restricted to rows below free
  // row r, or kNegInf when unknown.
  using BelowFree = std::function<std::int32_t(std::int64_t r, std::int64_t d)>;

  std::int64_t sweep(std::size_t delta, std::span<const std::int32_t> prev, std::span<std::int32_t> cur,
                     std::int64_t d_prime, std::int64_t bound, const BelowFree* below) const;
  std::int32_t free_row_at_most(std::int64_t i) const;
  bool is_free(std::int64_t row) const;

  std::int64_t beta_len_;
  std::int64_t n_;
  LcpIndex index_;
  std::vector<std::int32_t> last_free_;  // last_free_[i] = largest free row <= i, or kNegInf
};

/// Some(distance) iff the free-insertion distance is at most `max_delta`.
std::optional<std::size_t> diagonal_decide(const RegularPatternView& v, WordView w, std::size_t max_delta);

/// Reconstructs a witness of cost `delta`, which must be the exact distance.
/// Uses a cutoff DP restricted to cells that can lie on a path of cost at most
/// `delta`. Throws std::logic_error if no such path exists.
Witness recover_witness(const RegularPatternView& v, WordView w, std::size_t delta);

/// Linear-time exact match by greedy leftmost placement of the inner blocks.
std::optional<Witness> match_exact(const Pattern& p, WordView w);

struct RegularResult {
  std::size_t distance;
  Witness witness;
};

/// Exact check, then decisions at thresholds 1, 2, 4, ... clamped at
/// |w| + |term(p)|. Throws InvalidInput if `p` is not regular.
RegularResult min_distance(const Pattern& p, WordView w);

}  // namespace pvm
