#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pvm {

/// A letter of the integer alphabet.
enum class Symbol : std::uint32_t {};

constexpr std::uint32_t code(Symbol s) noexcept { return static_cast<std::uint32_t>(s); }

// Reserved codes. Interned input symbols start at kFirstUserCode, so they never
// collide with these.
inline constexpr Symbol kSentinel{0};
inline constexpr Symbol kDollar{1};
inline constexpr Symbol kHash{2};
inline constexpr Symbol kSeparator{0xFFFFFFFFu};
inline constexpr std::uint32_t kFirstUserCode = 3;

using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

enum class TextMode { kUtf8, kBinary };

/// Per-instance dense mapping between text units (code points or bytes) and symbols.
class Alphabet {
 public:
  Symbol intern(char32_t unit);
  std::optional<Symbol> find(char32_t unit) const;

  /// Text unit of `s`. Reserved $ and # print as '$' and '#'.
  char32_t unit(Symbol s) const;

  /// Number of interned (non-reserved) symbols.
  std::size_t size() const noexcept { return units_.size(); }

 private:
  std::unordered_map<char32_t, Symbol> symbols_;
  std::vector<char32_t> units_;
};

/// One decoded text unit and the byte offset it started at.
struct TextUnit {
  char32_t value;
  std::size_t offset;
};

/// Splits text into units: UTF-8 code points, or raw bytes in binary mode.
/// Throws ParseError on malformed UTF-8.
std::vector<TextUnit> split_units(std::string_view text, TextMode mode);

void append_unit(std::string& out, char32_t unit, TextMode mode);

Word encode(std::string_view text, Alphabet& alphabet, TextMode mode = TextMode::kUtf8);
std::string decode(WordView word, const Alphabet& alphabet, TextMode mode = TextMode::kUtf8);

}  // namespace pvm
