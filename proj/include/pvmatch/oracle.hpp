#pragma once

#include <cstddef>
#include <vector>

#include "pvmatch/median.hpp"
#include "pvmatch/pattern.hpp"

namespace pvm {

// Brute-force references for testing. None of them calls into the production
// matchers; they share only the data model and plain word edit distance.

struct OracleBound {
  std::size_t max_image_len = 0;
  std::vector<Symbol> alphabet;  // empty: the symbols of the inputs
  std::size_t max_nodes = 10'000'000;
};

/// Image bound |w| + |term(p)|, which makes oracle_any exact.
OracleBound exact_bound(const Pattern& p, WordView w);

struct OracleResult {
  std::size_t distance;
  Substitution substitution;
  std::size_t nodes = 0;
};

/// Minimum of ed(h(p), w) over substitutions with images of length at most
/// the bound over the candidate alphabet. Depth-first with an admissible
/// lower bound, so the result is the exhaustive minimum. Throws BudgetExceeded
/// past `max_nodes` search nodes.
OracleResult oracle_any(const Pattern& p, WordView w, const OracleBound& bound);

/// Row-by-row DP over the pattern items, a variable row being the running
/// minimum of the previous row. Throws InvalidInput for non-regular patterns.
std::size_t oracle_regular_dp(const Pattern& p, WordView w);

/// Exhaustive median over candidates of length at most the bound (default
/// sum of lengths plus the longest length when max_image_len is 0).
MedianResult oracle_median(const std::vector<Word>& strings, const OracleBound& bound = {});

}  // namespace pvm
