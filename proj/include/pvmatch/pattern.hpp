#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvmatch/symbol.hpp"

namespace pvm {

enum class VarId : std::uint32_t {};

constexpr std::uint32_t index(VarId v) noexcept { return static_cast<std::uint32_t>(v); }

class PatternItem {
 public:
  static constexpr PatternItem terminal(Symbol s) noexcept { return {false, code(s)}; }
  static constexpr PatternItem variable(VarId v) noexcept { return {true, index(v)}; }

  constexpr bool is_variable() const noexcept { return is_var_; }
  constexpr Symbol symbol() const noexcept { return Symbol{value_}; }
  constexpr VarId var() const noexcept { return VarId{value_}; }

  friend constexpr bool operator==(PatternItem, PatternItem) = default;

 private:
  constexpr PatternItem(bool is_var, std::uint32_t value) noexcept : is_var_(is_var), value_(value) {}

  bool is_var_;
  std::uint32_t value_;
};

/// A nonempty string over terminals and variables. Variable ids are dense and
/// numbered in order of first occurrence.
class Pattern {
 public:
  /// Throws InvalidInput if `items` is empty, ids are not dense in
  /// first-occurrence order, or `names` does not have one entry per variable.
  Pattern(std::vector<PatternItem> items, std::vector<std::string> names);

  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<PatternItem>& items() const noexcept { return items_; }
  const PatternItem& operator[](std::size_t i) const { return items_[i]; }

  std::size_t var_count() const noexcept { return names_.size(); }
  const std::string& name(VarId v) const { return names_.at(index(v)); }
  std::optional<VarId> find_var(std::string_view name) const;
  std::size_t occurrences(VarId v) const { return occurrences_.at(index(v)); }

  /// Total number of variable occurrences (k2 in the general algorithm's bound).
  std::size_t total_occurrences() const noexcept;
  /// Largest occurrence count of any variable (k1).
  std::size_t max_occurrences() const noexcept;

 private:
  std::vector<PatternItem> items_;
  std::vector<std::string> names_;
  std::vector<std::size_t> occurrences_;
};

/// Terminals are literal characters, variables are written `<name>`;
/// `\<` and `\\` escape a literal '<' or '\'.
Pattern parse_pattern(std::string_view text, Alphabet& alphabet, TextMode mode = TextMode::kUtf8);

/// Inverse of parse_pattern (escapes '<' and '\').
std::string to_string(const Pattern& p, const Alphabet& alphabet, TextMode mode = TextMode::kUtf8);

enum class PatternClass { kRegular, kUnary, kNonCross, kGeneral };

std::string_view to_string(PatternClass c) noexcept;

/// Regular wins over Unary for a single once-occurring variable.
PatternClass classify(const Pattern& p);

Word term_projection(const Pattern& p);

class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::size_t var_count) : images_(var_count) {}

  void set(VarId v, Word image);
  /// nullptr when `v` has no image.
  const Word* find(VarId v) const noexcept;
  std::size_t var_count() const noexcept { return images_.size(); }

 private:
  std::vector<std::optional<Word>> images_;
};

/// Throws InvalidInput naming the first variable without an image.
Word apply_substitution(const Pattern& p, const Substitution& h);

}  // namespace pvm
