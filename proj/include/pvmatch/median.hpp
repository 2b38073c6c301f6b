#pragma once

#include <cstddef>
#include <vector>

#include "pvmatch/symbol.hpp"

namespace pvm {

struct MedianResult {
  Word median;
  std::size_t cost = 0;  // sum of edit distances from the inputs to `median`
};

inline constexpr std::size_t kDefaultMedianCells = 10'000'000;

/// Exact median string by dynamic programming over the grid of prefix-length
/// tuples. Letters are drawn from the inputs. Throws InvalidInput for an empty
/// set and BudgetExceeded when the grid has more than `max_cells` cells.
MedianResult median(const std::vector<Word>& strings, std::size_t max_cells = kDefaultMedianCells);

std::size_t sum_distance(WordView s, const std::vector<Word>& strings);

}  // namespace pvm
