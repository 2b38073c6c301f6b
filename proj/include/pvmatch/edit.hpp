#pragma once

#include <cstddef>
#include <vector>

#include "pvmatch/symbol.hpp"

namespace pvm {

/// Unit-cost Levenshtein distance.
std::size_t edit_distance(WordView u, WordView v);

enum class EditKind : std::uint8_t { kKeep, kDelete, kSubstitute, kInsert };

/// `pos` is the index of the consumed source symbol, or for kInsert the
/// insertion point (number of source symbols consumed before it).
struct EditOp {
  EditKind kind;
  std::size_t pos;
  Symbol symbol{};  // substitute/insert payload

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditScript {
  std::vector<EditOp> ops;

  std::size_t cost() const noexcept;
};

/// Throws InvalidInput if an op's position disagrees with the source cursor or
/// the script does not consume the whole source.
Word apply_script(WordView source, const EditScript& script);

/// An optimal script turning `u` into `v` (full-matrix traceback).
EditScript edit_script(WordView u, WordView v);

}  // namespace pvm
