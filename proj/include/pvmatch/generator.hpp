#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "pvmatch/pattern.hpp"

namespace pvm {

/// Regular instance with a planted solution: a uniform word over `sigma`
/// letters, copied into a pattern with `vars` factors of length at most
/// `max_segment` replaced by fresh variables, then `edits` random edits
/// applied to the pattern's terminals. The distance is at most `edits`.
struct PlantedParams {
  std::size_t n = 100;
  std::size_t sigma = 4;
  std::size_t vars = 3;
  std::size_t max_segment = 5;
  std::size_t edits = 2;
  std::uint64_t seed = 1;
};

struct PlantedInstance {
  Alphabet alphabet;  // letters 'a', 'b', ... interned in order
  Pattern pattern;
  Word word;
  std::string pattern_text;
  std::string word_text;
};

PlantedInstance planted_instance(const PlantedParams& params);

}  // namespace pvm
