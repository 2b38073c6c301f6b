#include "pvmatch/lcp_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "pvmatch/errors.hpp"

namespace pvm {
namespace {

// Prefix-doubling suffix array with two counting-sort passes per round.
std::vector<std::uint32_t> suffix_array(const Word& s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  // Initial ranks: dense relabeling of the symbols.
  Word sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin());
  std::size_t classes = sorted.size();

  std::vector<std::uint32_t> count(classes + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
  for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--count[rank[i]]] = static_cast<std::uint32_t>(i);

  std::vector<std::uint32_t> second(n);
  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key (rank[i+k], missing smallest), then stable counting sort by first key.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) second[p++] = static_cast<std::uint32_t>(i);
    for (std::uint32_t i : sa)
      if (i >= k) second[p++] = static_cast<std::uint32_t>(i - k);

    count.assign(classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t q = n; q-- > 0;) sa[--count[rank[second[q]]]] = second[q];

    tmp[sa[0]] = 0;
    classes = 1;
    for (std::size_t q = 1; q < n; ++q) {
      const std::uint32_t a = sa[q - 1], b = sa[q];
      const bool same = rank[a] == rank[b] && (a + k < n ? static_cast<std::int64_t>(rank[a + k]) : -1) ==
                                                  (b + k < n ? static_cast<std::int64_t>(rank[b + k]) : -1);
      if (!same) ++classes;
      tmp[b] = static_cast<std::uint32_t>(classes - 1);
    }
    rank.swap(tmp);
  }
  return sa;
}

}  // namespace

LcpIndex LcpIndex::build(WordView beta, WordView w) {
  if (std::find(beta.begin(), beta.end(), kSeparator) != beta.end() ||
      std::find(w.begin(), w.end(), kSeparator) != w.end())
    throw InvalidInput("input word contains the reserved separator symbol");

  LcpIndex ix;
  ix.beta_len_ = beta.size();
  ix.w_len_ = w.size();
  ix.concat_.reserve(beta.size() + 1 + w.size());
  ix.concat_.insert(ix.concat_.end(), beta.begin(), beta.end());
  ix.concat_.push_back(kSeparator);
  ix.concat_.insert(ix.concat_.end(), w.begin(), w.end());

  const Word& s = ix.concat_;
  const std::size_t n = s.size();
  ix.sa_ = suffix_array(s);
  ix.rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) ix.rank_[ix.sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai.
  ix.lcp_.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t r = ix.rank_[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = ix.sa_[r - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    ix.lcp_[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }

  ix.sparse_.push_back(ix.lcp_);
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const auto& prev = ix.sparse_.back();
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> level(n - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < level.size(); ++i) level[i] = std::min(prev[i], prev[i + half]);
    ix.sparse_.push_back(std::move(level));
  }
  return ix;
}

std::uint32_t LcpIndex::range_min(std::size_t lo, std::size_t hi) const {
  const std::size_t len = hi - lo + 1;
  const auto k = static_cast<std::size_t>(std::bit_width(len) - 1);
  return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (std::size_t{1} << k)]);
}

std::size_t LcpIndex::lce(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > beta_len_ + 1 || j > w_len_ + 1)
    throw std::out_of_range("lce query (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  if (i > beta_len_ || j > w_len_) return 0;
  const std::size_t a = i - 1, b = beta_len_ + j;  // 0-based offsets into concat
  if (concat_[a] != concat_[b]) return 0;
  std::size_t ra = rank_[a], rb = rank_[b];
  if (ra > rb) std::swap(ra, rb);
  return range_min(ra + 1, rb);
}

}  // namespace pvm
