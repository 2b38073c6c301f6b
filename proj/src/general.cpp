#include "pvmatch/general.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "pvmatch/errors.hpp"

namespace pvm {

std::size_t factorization_count(std::size_t n, std::size_t k2) {
  // C(n + r, r) with r = 2 * k2, built incrementally; each prefix product is an
  // exact binomial so the division is exact. Saturates (slightly early) on overflow.
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  const std::size_t r = 2 * k2;
  std::size_t acc = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    if (acc > kMax / (n + i)) return kMax;
    acc = acc * (n + i) / i;
  }
  return acc;
}

std::size_t enumerate_factorizations(std::size_t n, std::size_t k2,
                                     const std::function<void(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> cuts(2 * k2, 0);
  std::size_t visited = 0;
  while (true) {
    visit(cuts);
    ++visited;
    std::size_t i = cuts.size();
    while (i > 0 && cuts[i - 1] == n) --i;
    if (i == 0) return visited;
    const std::size_t v = cuts[i - 1] + 1;
    std::fill(cuts.begin() + static_cast<std::ptrdiff_t>(i - 1), cuts.end(), v);
  }
}

GeneralResult general_min(const Pattern& p, WordView w, const GeneralBudget& budget) {
  std::vector<VarId> occ;
  for (const PatternItem& it : p.items())
    if (it.is_variable()) occ.push_back(it.var());
  const std::size_t k2 = occ.size();
  const std::size_t total = factorization_count(w.size(), k2);
  if (total > budget.max_factorizations)
    throw BudgetExceeded(std::to_string(total) + " factorizations exceed the budget of " +
                         std::to_string(budget.max_factorizations) +
                         (classify(p) == PatternClass::kRegular ? "; the pattern is regular, use the diagonal algorithm"
                                                                : "; use a shorter word or fewer variable occurrences"));

  std::vector<std::vector<std::size_t>> groups(p.var_count());
  for (std::size_t i = 0; i < k2; ++i) groups[index(occ[i])].push_back(i);

  std::map<std::vector<Word>, Word> memo;
  GeneralResult best;
  best.distance = std::numeric_limits<std::size_t>::max();
  Substitution h(p.var_count());
  std::vector<Word> segments;

  best.factorizations = enumerate_factorizations(w.size(), k2, [&](std::span<const std::size_t> cuts) {
    for (std::size_t x = 0; x < groups.size(); ++x) {
      segments.clear();
      for (std::size_t i : groups[x])
        segments.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(cuts[2 * i]),
                              w.begin() + static_cast<std::ptrdiff_t>(cuts[2 * i + 1]));
      const VarId id{static_cast<std::uint32_t>(x)};
      if (segments.size() == 1) {
        h.set(id, std::move(segments.front()));
        continue;
      }
      std::sort(segments.begin(), segments.end());
      auto it = memo.find(segments);
      if (it == memo.end()) it = memo.emplace(segments, median(segments, budget.median_cells).median).first;
      h.set(id, it->second);
    }
    // Cuts outside the variable factors must agree with the terminals; the
    // edit distance of the whole image accounts for any mismatch there.
    const std::size_t d = edit_distance(apply_substitution(p, h), w);
    if (d < best.distance) {
      best.distance = d;
      best.substitution = h;
    }
  });

  best.script = edit_script(apply_substitution(p, best.substitution), w);
  return best;
}

}  // namespace pvm
