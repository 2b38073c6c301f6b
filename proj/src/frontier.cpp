#include <algorithm>

#include "pvmatch/regular.hpp"

namespace pvm {

// Internally each level stores, per diagonal d, the furthest row whose value is
// at most the level (the "reach"). The exact-value frontier exposed by trace()
// is the reach where it advanced over the previous level.

FrontierSolver::FrontierSolver(const RegularPatternView& v, WordView w)
    : beta_len_(static_cast<std::int64_t>(v.beta.size())),
      n_(static_cast<std::int64_t>(w.size())),
      index_(LcpIndex::build(v.beta, w)),
      last_free_(v.beta.size() + 1, kNegInf) {
  std::int32_t last = kNegInf;
  std::size_t g = 0;
  for (std::size_t i = 0; i < last_free_.size(); ++i) {
    while (g < v.free_rows.size() && v.free_rows[g] <= i) last = static_cast<std::int32_t>(v.free_rows[g++]);
    last_free_[i] = last;
  }
}

std::int32_t FrontierSolver::free_row_at_most(std::int64_t i) const {
  if (i < 0) return kNegInf;
  return last_free_[static_cast<std::size_t>(std::min(i, beta_len_))];
}

bool FrontierSolver::is_free(std::int64_t row) const {
  return row >= 0 && row <= beta_len_ && last_free_[static_cast<std::size_t>(row)] == row;
}

std::int64_t FrontierSolver::level(std::size_t delta, std::span<const std::int32_t> prev,
                                   std::span<std::int32_t> cur, std::int64_t d_prime) const {
  return sweep(delta, prev, cur, d_prime, beta_len_, nullptr);
}

// Rows are capped at `bound` (|beta| for the full matrix, smaller for the
// prefix frontiers used by trace()).
std::int64_t FrontierSolver::sweep(std::size_t delta, std::span<const std::int32_t> prev,
                                   std::span<std::int32_t> cur, std::int64_t d_prime, std::int64_t bound,
                                   const BelowFree* below) const {
  const std::int64_t B = beta_len_, n = n_;
  const auto slot = [B](std::int64_t d) { return static_cast<std::size_t>(d + B); };
  const auto dl = static_cast<std::int64_t>(delta);

  std::fill(cur.begin(), cur.end(), kNegInf);
  if (d_prime >= -bound) cur[slot(d_prime)] = static_cast<std::int32_t>(bound);

  std::int64_t reached = d_prime;
  const std::int64_t first = std::max({-bound, -dl, d_prime + 1});
  for (std::int64_t d = first; d <= n; ++d) {
    const std::int64_t row_max = std::min(bound, n - d);
    const std::int64_t row_min = std::max<std::int64_t>(0, -d);
    std::int64_t s = kNegInf;

    if (delta == 0) {
      if (d == 0) s = 0;
    } else {
      const std::int64_t same = prev[slot(d)];
      if (same != kNegInf) s = same + 1 <= row_max ? same + 1 : same;
      if (d + 1 <= n) {
        const std::int64_t del = prev[slot(d + 1)];
        if (del != kNegInf && del + 1 <= bound) s = std::max(s, del + 1);
      }
      if (d - 1 >= -bound) {
        std::int64_t ins = prev[slot(d - 1)];
        // A reach in the last column sits one row past this diagonal. The row
        // above it is also within the level unless that cell is in a free row,
        // where values can drop along a diagonal.
        if (ins != kNegInf && ins + d > n) {
          if (!is_free(ins))
            --ins;
          else
            ins = below != nullptr ? (*below)(ins, d - 1) : kNegInf;
        }
        if (ins != kNegInf) s = std::max(s, ins);
      }
    }
    if (d - 1 >= -bound) {
      const std::int64_t left = cur[slot(d - 1)];
      if (left != kNegInf) {
        const std::int64_t f = free_row_at_most(std::min(left, n - d));
        if (f != kNegInf && f >= row_min) s = std::max(s, f);
      }
    }
    if (s == kNegInf) continue;

    const std::int64_t slide =
        s + static_cast<std::int64_t>(index_.lce(static_cast<std::size_t>(s + 1), static_cast<std::size_t>(s + d + 1)));
    const std::int64_t reach = std::min(slide, bound);
    cur[slot(d)] = static_cast<std::int32_t>(reach);
    if (reach == bound) reached = d;
  }
  return reached;
}

std::optional<std::size_t> FrontierSolver::decide(std::size_t max_delta) const {
  const std::int64_t target = n_ - beta_len_;
  std::vector<std::int32_t> prev(width(), kNegInf), cur(width(), kNegInf);
  std::int64_t d_prime = -beta_len_ - 1;
  for (std::size_t delta = 0; delta <= max_delta; ++delta) {
    d_prime = level(delta, prev, cur, d_prime);
    if (target >= -beta_len_ && cur[static_cast<std::size_t>(target + beta_len_)] == beta_len_) return delta;
    prev.swap(cur);
  }
  return std::nullopt;
}

FrontierTable FrontierSolver::trace(std::size_t max_delta) const {
  FrontierTable t;
  t.beta_len = static_cast<std::size_t>(beta_len_);
  t.n = static_cast<std::size_t>(n_);
  const std::int64_t target = n_ - beta_len_;
  const std::size_t W = width();

  // One unpruned prefix frontier per free row r, over rows 0..r-1. They answer
  // the insertion candidates that level() cannot resolve on its own.
  std::vector<std::int64_t> free_rows;
  for (std::int64_t r = 1; r <= beta_len_; ++r)
    if (is_free(r)) free_rows.push_back(r);
  std::vector<std::vector<std::int32_t>> sub_prev(free_rows.size(), std::vector<std::int32_t>(W, kNegInf));
  std::vector<std::vector<std::int32_t>> sub_cur = sub_prev;
  const BelowFree below = [&](std::int64_t r, std::int64_t d) {
    const auto it = std::lower_bound(free_rows.begin(), free_rows.end(), r);
    return sub_prev[static_cast<std::size_t>(it - free_rows.begin())][static_cast<std::size_t>(d + beta_len_)];
  };

  std::vector<std::int32_t> prev(W, kNegInf), cur(W, kNegInf);
  std::int64_t d_prime = -beta_len_ - 1;
  for (std::size_t delta = 0; delta <= max_delta; ++delta) {
    for (std::size_t i = 0; i < free_rows.size(); ++i) {
      const std::int64_t bound = free_rows[i] - 1;
      (void)sweep(delta, sub_prev[i], sub_cur[i], -bound - 1, bound, &below);
    }
    t.d_prime.push_back(d_prime);
    const std::int64_t next = sweep(delta, prev, cur, d_prime, beta_len_, &below);

    std::vector<std::int32_t> exact(W, kNegInf);
    for (std::int64_t d = d_prime + 1; d <= n_; ++d) {
      const std::size_t k = static_cast<std::size_t>(d + beta_len_);
      if (cur[k] != kNegInf && (delta == 0 || cur[k] > prev[k])) exact[k] = cur[k];
    }
    t.rows.push_back(std::move(exact));
    d_prime = next;

    if (target >= -beta_len_ && cur[static_cast<std::size_t>(target + beta_len_)] == beta_len_) {
      t.distance = delta;
      break;
    }
    prev.swap(cur);
    sub_prev.swap(sub_cur);
  }
  return t;
}

std::optional<std::size_t> diagonal_decide(const RegularPatternView& v, WordView w, std::size_t max_delta) {
  return FrontierSolver(v, w).decide(max_delta);
}

}  // namespace pvm
