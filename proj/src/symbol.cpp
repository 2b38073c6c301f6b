#include "pvmatch/symbol.hpp"

#include <stdexcept>

#include "pvmatch/errors.hpp"

namespace pvm {

Symbol Alphabet::intern(char32_t unit) {
  if (auto it = symbols_.find(unit); it != symbols_.end()) return it->second;
  const Symbol s{static_cast<std::uint32_t>(kFirstUserCode + units_.size())};
  symbols_.emplace(unit, s);
  units_.push_back(unit);
  return s;
}

std::optional<Symbol> Alphabet::find(char32_t unit) const {
  if (auto it = symbols_.find(unit); it != symbols_.end()) return it->second;
  return std::nullopt;
}

char32_t Alphabet::unit(Symbol s) const {
  if (s == kDollar) return U'$';
  if (s == kHash) return U'#';
  const std::uint32_t c = code(s);
  if (c < kFirstUserCode || c - kFirstUserCode >= units_.size())
    throw std::out_of_range("symbol " + std::to_string(c) + " has no text form");
  return units_[c - kFirstUserCode];
}

std::vector<TextUnit> split_units(std::string_view text, TextMode mode) {
  std::vector<TextUnit> out;
  out.reserve(text.size());
  if (mode == TextMode::kBinary) {
    for (std::size_t i = 0; i < text.size(); ++i)
      out.push_back({static_cast<unsigned char>(text[i]), i});
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len;
    char32_t cp;
    if (lead < 0x80) {
      len = 1;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
    } else {
      throw ParseError("invalid UTF-8 lead byte", i);
    }
    if (i + len > text.size()) throw ParseError("truncated UTF-8 sequence", i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) throw ParseError("invalid UTF-8 continuation byte", i + k);
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw ParseError("invalid UTF-8 code point", i);
    out.push_back({cp, i});
    i += len;
  }
  return out;
}

void append_unit(std::string& out, char32_t unit, TextMode mode) {
  if (mode == TextMode::kBinary || unit < 0x80) {
    out.push_back(static_cast<char>(unit));
  } else if (unit < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (unit >> 6)));
    out.push_back(static_cast<char>(0x80 | (unit & 0x3F)));
  } else if (unit < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (unit >> 12)));
    out.push_back(static_cast<char>(0x80 | ((unit >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (unit & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (unit >> 18)));
    out.push_back(static_cast<char>(0x80 | ((unit >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((unit >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (unit & 0x3F)));
  }
}

Word encode(std::string_view text, Alphabet& alphabet, TextMode mode) {
  Word w;
  for (const TextUnit& u : split_units(text, mode)) w.push_back(alphabet.intern(u.value));
  return w;
}

std::string decode(WordView word, const Alphabet& alphabet, TextMode mode) {
  std::string out;
  out.reserve(word.size());
  for (Symbol s : word) append_unit(out, alphabet.unit(s), mode);
  return out;
}

}  // namespace pvm
