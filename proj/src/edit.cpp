#include "pvmatch/edit.hpp"

#include <algorithm>
#include <numeric>

#include "pvmatch/errors.hpp"

namespace pvm {

std::size_t edit_distance(WordView u, WordView v) {
  if (u.size() < v.size()) std::swap(u, v);
  // Row over the shorter word.
  std::vector<std::uint32_t> row(v.size() + 1);
  std::iota(row.begin(), row.end(), 0u);
  for (std::size_t i = 1; i <= u.size(); ++i) {
    std::uint32_t diag = row[0];
    row[0] = static_cast<std::uint32_t>(i);
    const Symbol a = u[i - 1];
    for (std::size_t j = 1; j <= v.size(); ++j) {
      const std::uint32_t up = row[j];
      const std::uint32_t sub = diag + (a == v[j - 1] ? 0u : 1u);
      row[j] = std::min({up + 1, row[j - 1] + 1, sub});
      diag = up;
    }
  }
  return row[v.size()];
}

std::size_t EditScript::cost() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [](const EditOp& op) { return op.kind != EditKind::kKeep; }));
}

Word apply_script(WordView source, const EditScript& script) {
  Word out;
  std::size_t cursor = 0;
  for (const EditOp& op : script.ops) {
    if (op.pos != cursor)
      throw InvalidInput("edit op at position " + std::to_string(op.pos) + " but cursor is at " +
                         std::to_string(cursor));
    if (op.kind == EditKind::kInsert) {
      out.push_back(op.symbol);
      continue;
    }
    if (cursor >= source.size())
      throw InvalidInput("edit op position " + std::to_string(op.pos) + " is out of range");
    if (op.kind == EditKind::kKeep) out.push_back(source[cursor]);
    if (op.kind == EditKind::kSubstitute) out.push_back(op.symbol);
    ++cursor;
  }
  if (cursor != source.size()) throw InvalidInput("edit script leaves source symbols unconsumed");
  return out;
}

EditScript edit_script(WordView u, WordView v) {
  const std::size_t rows = u.size() + 1, cols = v.size() + 1;
  std::vector<std::uint32_t> d(rows * cols);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return d[i * cols + j]; };
  for (std::size_t i = 0; i < rows; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j < cols; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i < rows; ++i)
    for (std::size_t j = 1; j < cols; ++j)
      at(i, j) = std::min({at(i - 1, j) + 1, at(i, j - 1) + 1, at(i - 1, j - 1) + (u[i - 1] == v[j - 1] ? 0u : 1u)});

  EditScript s;
  std::size_t i = u.size(), j = v.size();
  while (i > 0 || j > 0) {
    if (i > 0 && at(i - 1, j) + 1 == at(i, j)) {
      s.ops.push_back({EditKind::kDelete, i - 1});
      --i;
    } else if (i > 0 && j > 0 && at(i - 1, j - 1) + (u[i - 1] == v[j - 1] ? 0u : 1u) == at(i, j)) {
      if (u[i - 1] == v[j - 1])
        s.ops.push_back({EditKind::kKeep, i - 1});
      else
        s.ops.push_back({EditKind::kSubstitute, i - 1, v[j - 1]});
      --i;
      --j;
    } else {
      s.ops.push_back({EditKind::kInsert, i, v[j - 1]});
      --j;
    }
  }
  std::reverse(s.ops.begin(), s.ops.end());
  return s;
}

}  // namespace pvm
