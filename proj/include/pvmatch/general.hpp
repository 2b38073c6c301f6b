#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "pvmatch/edit.hpp"
#include "pvmatch/median.hpp"
#include "pvmatch/pattern.hpp"

namespace pvm {

struct GeneralBudget {
  std::size_t max_factorizations = 5'000'000;
  std::size_t median_cells = kDefaultMedianCells;
};

struct GeneralResult {
  std::size_t distance = 0;
  Substitution substitution;
  EditScript script;  // turns h(p) into w
  std::size_t factorizations = 0;
};

/// Number of non-decreasing tuples of `2 * k2` cut points in [0, n], saturating
/// at SIZE_MAX.
std::size_t factorization_count(std::size_t n, std::size_t k2);

/// Visits every non-decreasing tuple of 2 * k2 cut points in [0, n] in
/// lexicographic order. Returns the number of tuples visited.
std::size_t enumerate_factorizations(std::size_t n, std::size_t k2,
                                     const std::function<void(std::span<const std::size_t>)>& visit);

/// Exact distance for an arbitrary pattern: for each factorization of w, every
/// variable takes the median of the factors aligned with its occurrences.
/// Throws BudgetExceeded if the factorization count exceeds the budget.
GeneralResult general_min(const Pattern& p, WordView w, const GeneralBudget& budget = {});

}  // namespace pvm
