#include "pvmatch/generator.hpp"

#include <algorithm>
#include <random>

#include "pvmatch/errors.hpp"

namespace pvm {

PlantedInstance planted_instance(const PlantedParams& params) {
  if (params.sigma == 0 || params.sigma > 26) throw InvalidInput("sigma must be in [1, 26]");
  std::mt19937_64 rng(params.seed);
  const auto uniform = [&](std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  Alphabet alphabet;
  std::vector<Symbol> letters;
  for (std::size_t c = 0; c < params.sigma; ++c) letters.push_back(alphabet.intern(U'a' + static_cast<char32_t>(c)));

  Word word(params.n);
  for (Symbol& s : word) s = letters[uniform(0, params.sigma - 1)];

  // Variable factors: sorted start points, each factor clipped at the next start.
  std::vector<std::size_t> starts(params.vars);
  for (std::size_t& s : starts) s = uniform(0, params.n);
  std::sort(starts.begin(), starts.end());

  struct Item {
    bool is_var;
    Symbol symbol;
  };
  std::vector<Item> items;
  std::size_t pos = 0;
  for (std::size_t v = 0; v < starts.size(); ++v) {
    const std::size_t start = std::max(starts[v], pos);
    const std::size_t limit = v + 1 < starts.size() ? std::max(starts[v + 1], start) : params.n;
    const std::size_t len = std::min(uniform(0, params.max_segment), limit - start);
    for (; pos < start; ++pos) items.push_back({false, word[pos]});
    items.push_back({true, {}});
    pos = start + len;
  }
  for (; pos < params.n; ++pos) items.push_back({false, word[pos]});

  for (std::size_t e = 0; e < params.edits; ++e) {
    std::vector<std::size_t> terminals;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (!items[i].is_var) terminals.push_back(i);
    const std::size_t kind = uniform(0, 2);
    if (kind == 0 || terminals.empty()) {
      items.insert(items.begin() + static_cast<std::ptrdiff_t>(uniform(0, items.size())),
                   Item{false, letters[uniform(0, params.sigma - 1)]});
    } else if (kind == 1 && items.size() > 1) {
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(terminals[uniform(0, terminals.size() - 1)]));
    } else {
      Item& it = items[terminals[uniform(0, terminals.size() - 1)]];
      if (params.sigma > 1) {
        Symbol next = it.symbol;
        while (next == it.symbol) next = letters[uniform(0, params.sigma - 1)];
        it.symbol = next;
      }
    }
  }

  std::vector<PatternItem> pattern_items;
  std::vector<std::string> names;
  for (const Item& it : items) {
    if (it.is_var) {
      pattern_items.push_back(PatternItem::variable(VarId{static_cast<std::uint32_t>(names.size())}));
      names.push_back("x" + std::to_string(names.size()));
    } else {
      pattern_items.push_back(PatternItem::terminal(it.symbol));
    }
  }
  if (pattern_items.empty()) throw InvalidInput("planted pattern came out empty; use n > 0 or vars > 0");

  Pattern pattern(std::move(pattern_items), std::move(names));
  std::string pattern_text = to_string(pattern, alphabet);
  std::string word_text = decode(word, alphabet);
  return {std::move(alphabet), std::move(pattern), std::move(word), std::move(pattern_text), std::move(word_text)};
}

}  // namespace pvm
