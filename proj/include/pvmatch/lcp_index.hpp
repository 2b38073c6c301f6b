#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pvmatch/symbol.hpp"

namespace pvm {

/// Longest-common-extension queries between suffixes of a pattern-side word
/// `beta` and a text `w`, answered in O(1) after an O(N log N) build over
/// beta · separator · w.
class LcpIndex {
 public:
  /// Throws InvalidInput if either word contains kSeparator.
  static LcpIndex build(WordView beta, WordView w);

  /// Length of the longest common prefix of beta[i..] and w[j..], 1-based.
  /// One-past-end positions are allowed and give 0; anything further throws
  /// std::out_of_range.
  std::size_t lce(std::size_t i, std::size_t j) const;

  std::size_t beta_len() const noexcept { return beta_len_; }
  std::size_t w_len() const noexcept { return w_len_; }
  const Word& concat() const noexcept { return concat_; }
  const std::vector<std::uint32_t>& suffix_order() const noexcept { return sa_; }
  const std::vector<std::uint32_t>& rank() const noexcept { return rank_; }
  /// adjacent_lcp()[r] = lcp of suffixes suffix_order()[r-1] and suffix_order()[r]; entry 0 is 0.
  const std::vector<std::uint32_t>& adjacent_lcp() const noexcept { return lcp_; }

 private:
  std::uint32_t range_min(std::size_t lo, std::size_t hi) const;  // min of lcp_[lo..hi], lo <= hi

  Word concat_;
  std::size_t beta_len_ = 0;
  std::size_t w_len_ = 0;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;
  std::vector<std::vector<std::uint32_t>> sparse_;  // sparse_[k][i] = min lcp_[i, i + 2^k)
};

}  // namespace pvm
