#include "pvmatch/pattern.hpp"

#include <algorithm>

#include "pvmatch/errors.hpp"

namespace pvm {

Pattern::Pattern(std::vector<PatternItem> items, std::vector<std::string> names)
    : items_(std::move(items)), names_(std::move(names)), occurrences_(names_.size(), 0) {
  if (items_.empty()) throw InvalidInput("pattern must be nonempty");
  std::uint32_t next = 0;
  for (const PatternItem& it : items_) {
    if (!it.is_variable()) continue;
    const std::uint32_t id = index(it.var());
    if (id > next || id >= names_.size())
      throw InvalidInput("variable ids must be dense in first-occurrence order");
    if (id == next) ++next;
    ++occurrences_[id];
  }
  if (next != names_.size()) throw InvalidInput("pattern declares unused variable names");
}

std::optional<VarId> Pattern::find_var(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return VarId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::size_t Pattern::total_occurrences() const noexcept {
  std::size_t total = 0;
  for (std::size_t c : occurrences_) total += c;
  return total;
}

std::size_t Pattern::max_occurrences() const noexcept {
  std::size_t best = 0;
  for (std::size_t c : occurrences_) best = std::max(best, c);
  return best;
}

Pattern parse_pattern(std::string_view text, Alphabet& alphabet, TextMode mode) {
  const std::vector<TextUnit> units = split_units(text, mode);
  std::vector<PatternItem> items;
  std::vector<std::string> names;

  for (std::size_t i = 0; i < units.size(); ++i) {
    const char32_t c = units[i].value;
    if (c == U'\\') {
      if (i + 1 == units.size()) throw ParseError("dangling escape", units[i].offset);
      const char32_t next = units[i + 1].value;
      if (next != U'<' && next != U'\\') throw ParseError("invalid escape", units[i].offset);
      items.push_back(PatternItem::terminal(alphabet.intern(next)));
      ++i;
    } else if (c == U'<') {
      std::size_t j = i + 1;
      std::string name;
      while (j < units.size() && units[j].value != U'>') {
        if (units[j].value == U'<') throw ParseError("unterminated '<'", units[i].offset);
        append_unit(name, units[j].value, mode);
        ++j;
      }
      if (j == units.size()) throw ParseError("unterminated '<'", units[i].offset);
      if (name.empty()) throw ParseError("empty variable name", units[i].offset);
      auto found = std::find(names.begin(), names.end(), name);
      const auto id = static_cast<std::uint32_t>(found - names.begin());
      if (found == names.end()) names.push_back(std::move(name));
      items.push_back(PatternItem::variable(VarId{id}));
      i = j;
    } else {
      items.push_back(PatternItem::terminal(alphabet.intern(c)));
    }
  }
  if (items.empty()) throw ParseError("empty pattern", 0);
  return Pattern(std::move(items), std::move(names));
}

std::string to_string(const Pattern& p, const Alphabet& alphabet, TextMode mode) {
  std::string out;
  for (const PatternItem& it : p.items()) {
    if (it.is_variable()) {
      out += '<';
      out += p.name(it.var());
      out += '>';
      continue;
    }
    const char32_t u = alphabet.unit(it.symbol());
    if (u == U'<' || u == U'\\') out += '\\';
    append_unit(out, u, mode);
  }
  return out;
}

std::string_view to_string(PatternClass c) noexcept {
  switch (c) {
    case PatternClass::kRegular: return "regular";
    case PatternClass::kUnary: return "unary";
    case PatternClass::kNonCross: return "noncross";
    case PatternClass::kGeneral: return "general";
  }
  return "general";
}

PatternClass classify(const Pattern& p) {
  if (p.max_occurrences() <= 1) return PatternClass::kRegular;
  if (p.var_count() == 1) return PatternClass::kUnary;

  // Non-cross: the span [first, last] of each variable contains no other variable.
  std::vector<std::size_t> first(p.var_count(), p.size()), last(p.var_count(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_variable()) continue;
    const auto v = index(p[i].var());
    first[v] = std::min(first[v], i);
    last[v] = i;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_variable()) continue;
    const auto v = index(p[i].var());
    for (std::size_t u = 0; u < p.var_count(); ++u)
      if (u != v && first[u] < i && i < last[u]) return PatternClass::kGeneral;
  }
  return PatternClass::kNonCross;
}

Word term_projection(const Pattern& p) {
  Word out;
  for (const PatternItem& it : p.items())
    if (!it.is_variable()) out.push_back(it.symbol());
  return out;
}

void Substitution::set(VarId v, Word image) {
  if (index(v) >= images_.size()) images_.resize(index(v) + 1);
  images_[index(v)] = std::move(image);
}

const Word* Substitution::find(VarId v) const noexcept {
  if (index(v) >= images_.size() || !images_[index(v)]) return nullptr;
  return &*images_[index(v)];
}

Word apply_substitution(const Pattern& p, const Substitution& h) {
  Word out;
  for (const PatternItem& it : p.items()) {
    if (!it.is_variable()) {
      out.push_back(it.symbol());
      continue;
    }
    const Word* image = h.find(it.var());
    if (image == nullptr) throw InvalidInput("substitution has no image for variable '" + p.name(it.var()) + "'");
    out.insert(out.end(), image->begin(), image->end());
  }
  return out;
}

}  // namespace pvm
