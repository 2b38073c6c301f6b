#include "pvmatch/median.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "pvmatch/edit.hpp"
#include "pvmatch/errors.hpp"

namespace pvm {

MedianResult median(const std::vector<Word>& strings, std::size_t max_cells) {
  const std::size_t k = strings.size();
  if (k == 0) throw InvalidInput("median of an empty set of strings");
  if (k >= 31) throw BudgetExceeded("median over " + std::to_string(k) + " strings is beyond the subset enumeration");

  std::vector<std::size_t> stride(k);
  std::size_t cells = 1;
  for (std::size_t i = k; i-- > 0;) {
    stride[i] = cells;
    const std::size_t extent = strings[i].size() + 1;
    if (cells > max_cells / extent)
      throw BudgetExceeded("median grid exceeds " + std::to_string(max_cells) +
                           " cells; use a smaller instance or the exhaustive oracle");
    cells *= extent;
  }

  // choice: bit 31 set -> single deletion in string (choice & 0xff);
  // otherwise the nonempty mask of strings advanced together with one emitted letter.
  constexpr std::uint32_t kDeleteFlag = 1u << 31;
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> cost(cells, kInf);
  std::vector<std::uint32_t> choice(cells, 0);
  cost[0] = 0;

  std::vector<std::size_t> pos(k, 0);
  std::unordered_map<std::uint32_t, std::uint32_t> counts;

  // Best letter and its cost for advancing `mask` into the cell at `pos`.
  const auto emit_cost = [&](std::uint32_t mask) {
    counts.clear();
    std::uint32_t best = 0;
    std::size_t size = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++size;
      best = std::max(best, ++counts[code(strings[i][pos[i] - 1])]);
    }
    return static_cast<std::uint32_t>(size - best + (k - size));
  };

  for (std::size_t cell = 1; cell < cells; ++cell) {
    // Advance the position tuple (last string varies fastest).
    for (std::size_t i = k; i-- > 0;) {
      if (++pos[i] <= strings[i].size()) break;
      pos[i] = 0;
    }
    std::uint32_t avail = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (pos[i] > 0) avail |= 1u << i;

    std::uint32_t best = kInf, how = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(avail >> i & 1u)) continue;
      const std::uint32_t c = cost[cell - stride[i]] + 1;
      if (c < best) best = c, how = kDeleteFlag | static_cast<std::uint32_t>(i);
    }
    for (std::uint32_t mask = avail; mask != 0; mask = (mask - 1) & avail) {
      std::size_t from = cell;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) from -= stride[i];
      const std::uint32_t c = cost[from] + emit_cost(mask);
      if (c < best) best = c, how = mask;
    }
    cost[cell] = best;
    choice[cell] = how;
  }

  MedianResult out;
  out.cost = cost[cells - 1];
  for (std::size_t i = 0; i < k; ++i) pos[i] = strings[i].size();
  std::size_t cell = cells - 1;
  while (cell != 0) {
    const std::uint32_t how = choice[cell];
    if (how & kDeleteFlag) {
      const std::size_t i = how & 0xffu;
      --pos[i];
      cell -= stride[i];
      continue;
    }
    counts.clear();
    std::uint32_t best = 0, letter = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(how >> i & 1u)) continue;
      const std::uint32_t c = code(strings[i][pos[i] - 1]);
      const std::uint32_t cnt = ++counts[c];
      if (cnt > best) best = cnt, letter = c;
    }
    out.median.push_back(Symbol{letter});
    for (std::size_t i = 0; i < k; ++i)
      if (how >> i & 1u) --pos[i], cell -= stride[i];
  }
  std::reverse(out.median.begin(), out.median.end());
  return out;
}

std::size_t sum_distance(WordView s, const std::vector<Word>& strings) {
  std::size_t total = 0;
  for (const Word& w : strings) total += edit_distance(s, w);
  return total;
}

}  // namespace pvm
