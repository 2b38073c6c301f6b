#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pvmatch/pattern.hpp"

namespace pvm {

/// Median-string instance over {0,1} to be turned into a one-variable
/// matching instance.
struct ReductionParams {
  std::vector<std::string> strings;  // characters '0' and '1' only
  std::size_t delta = 0;
  std::optional<std::size_t> s_override;
};

/// pattern = (x ($^S #^S)^S)^k, word = w_1 ($^S #^S)^S ... w_k ($^S #^S)^S.
struct ReductionInstance {
  Alphabet alphabet;           // '0' and '1' interned first, in that order
  std::vector<Word> strings;
  Pattern pattern;
  Word word;
  std::size_t delta = 0;
  std::size_t separator = 0;   // S
  bool structural_only = false;  // S was overridden; the equivalence is not guaranteed
};

/// Default S is 6 * (sum of lengths). Throws InvalidInput on non-binary input
/// or when delta exceeds the sum of lengths.
ReductionInstance gen_instance(const ReductionParams& params);

enum class GadgetSide { kLeading, kTrailing };

struct LemmaCheck {
  std::size_t dp_value;
  std::size_t formula_value;
  bool agree;
};

/// Compares the edit distance between a shifted separator gadget and
/// ($^S #^S)^S with g + (S - l). kLeading uses $^g ($^S#^S)^{S-1} $^S #^l,
/// kTrailing uses $^l #^S ($^S#^S)^{S-1} #^g. Throws InvalidInput naming the
/// violated hypothesis unless 2g <= S, S <= 2(l - g) and l <= S.
LemmaCheck lemma1_check(std::size_t S, std::size_t g, std::size_t l, GadgetSide side = GadgetSide::kLeading);

/// True iff ed(h(pattern), word) <= delta for h = {x -> s}.
bool forward_check(const ReductionInstance& inst, WordView s);

}  // namespace pvm
