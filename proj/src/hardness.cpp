#include "pvmatch/hardness.hpp"

#include <string>

#include "pvmatch/edit.hpp"
#include "pvmatch/errors.hpp"

namespace pvm {
namespace {

void append_run(Word& out, Symbol s, std::size_t count) { out.insert(out.end(), count, s); }

// ($^S #^S)^reps
void append_blocks(Word& out, std::size_t S, std::size_t reps) {
  for (std::size_t r = 0; r < reps; ++r) {
    append_run(out, kDollar, S);
    append_run(out, kHash, S);
  }
}

}  // namespace

ReductionInstance gen_instance(const ReductionParams& params) {
  Alphabet alphabet;
  const Symbol zero = alphabet.intern(U'0');
  const Symbol one = alphabet.intern(U'1');

  std::vector<Word> strings;
  std::size_t total = 0;
  for (const std::string& s : params.strings) {
    Word w;
    for (char c : s) {
      if (c != '0' && c != '1') throw InvalidInput("reduction strings must be over {0,1}, got '" + s + "'");
      w.push_back(c == '0' ? zero : one);
    }
    total += w.size();
    strings.push_back(std::move(w));
  }
  if (strings.empty()) throw InvalidInput("reduction needs at least one string");
  if (params.delta > total)
    throw InvalidInput("delta " + std::to_string(params.delta) + " exceeds the total length " + std::to_string(total));
  if (params.s_override && *params.s_override == 0) throw InvalidInput("separator size must be positive");

  const std::size_t S = params.s_override.value_or(6 * total);
  Word block;
  append_blocks(block, S, S);

  std::vector<PatternItem> items;
  Word word;
  for (const Word& w : strings) {
    items.push_back(PatternItem::variable(VarId{0}));
    for (Symbol s : block) items.push_back(PatternItem::terminal(s));
    word.insert(word.end(), w.begin(), w.end());
    word.insert(word.end(), block.begin(), block.end());
  }

  return ReductionInstance{std::move(alphabet),
                           std::move(strings),
                           Pattern(std::move(items), {"x"}),
                           std::move(word),
                           params.delta,
                           S,
                           params.s_override.has_value()};
}

LemmaCheck lemma1_check(std::size_t S, std::size_t g, std::size_t l, GadgetSide side) {
  if (S == 0) throw InvalidInput("separator size S must be positive");
  if (2 * g > S) throw InvalidInput("lemma hypothesis 2g <= S violated");
  if (l < g || S > 2 * (l - g)) throw InvalidInput("lemma hypothesis S/2 <= l - g violated");
  if (l > S) throw InvalidInput("lemma hypothesis l <= S violated");

  Word gadget;
  if (side == GadgetSide::kLeading) {
    append_run(gadget, kDollar, g);
    append_blocks(gadget, S, S - 1);
    append_run(gadget, kDollar, S);
    append_run(gadget, kHash, l);
  } else {
    append_run(gadget, kDollar, l);
    append_run(gadget, kHash, S);
    append_blocks(gadget, S, S - 1);
    append_run(gadget, kHash, g);
  }
  Word reference;
  append_blocks(reference, S, S);

  const std::size_t dp = edit_distance(gadget, reference);
  const std::size_t formula = g + (S - l);
  return {dp, formula, dp == formula};
}

bool forward_check(const ReductionInstance& inst, WordView s) {
  Substitution h(1);
  h.set(VarId{0}, Word(s.begin(), s.end()));
  return edit_distance(apply_substitution(inst.pattern, h), inst.word) <= inst.delta;
}

}  // namespace pvm
