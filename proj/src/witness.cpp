#include <algorithm>
#include <stdexcept>

#include "pvmatch/regular.hpp"

namespace pvm {
namespace {

enum class Move : std::uint8_t { kDelete, kDiagonal, kInsert, kFree };

struct Step {
  Move move;
  std::size_t j, l;  // destination cell
};

// Walks back from (|beta|, n) choosing, at each cell, the first predecessor in
// the order Delete, Diagonal, Insert, Free that explains its value. `value`
// must return a number larger than any path value for unknown cells.
template <class Value>
std::vector<Step> trace_path(const RegularPatternView& v, WordView w, const std::vector<char>& is_free,
                             Value&& value) {
  std::vector<Step> path;
  std::size_t j = v.beta.size(), l = w.size();
  while (j > 0 || l > 0) {
    const std::uint64_t here = value(j, l);
    if (j > 0 && value(j - 1, l) + 1 == here) {
      path.push_back({Move::kDelete, j, l});
      --j;
    } else if (j > 0 && l > 0 && value(j - 1, l - 1) + (v.beta[j - 1] == w[l - 1] ? 0u : 1u) == here) {
      path.push_back({Move::kDiagonal, j, l});
      --j;
      --l;
    } else if (l > 0 && !is_free[j] && value(j, l - 1) + 1 == here) {
      path.push_back({Move::kInsert, j, l});
      --l;
    } else if (l > 0 && is_free[j] && value(j, l - 1) == here) {
      path.push_back({Move::kFree, j, l});
      --l;
    } else {
      throw std::logic_error("traceback found no predecessor");
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Converts a normalized path into a witness over the original pattern and word.
// The first step always matches the two sentinels and is dropped.
Witness to_witness(const RegularPatternView& v, WordView w, const std::vector<Step>& path) {
  std::vector<std::size_t> owner_of_row(v.beta.size() + 1, v.free_rows.size());
  for (std::size_t g = 0; g < v.free_rows.size(); ++g) owner_of_row[v.free_rows[g]] = g;

  std::vector<Word> images(v.free_rows.size());
  Witness wit;
  std::size_t src = 0;
  for (const Step& s : path) {
    if (s.j == 1 && s.l == 1 && s.move == Move::kDiagonal) continue;
    const Symbol target = s.l > 0 ? w[s.l - 1] : Symbol{};
    switch (s.move) {
      case Move::kDiagonal:
        if (v.beta[s.j - 1] == target)
          wit.script.ops.push_back({EditKind::kKeep, src});
        else
          wit.script.ops.push_back({EditKind::kSubstitute, src, target});
        ++src;
        break;
      case Move::kDelete:
        wit.script.ops.push_back({EditKind::kDelete, src});
        ++src;
        break;
      case Move::kInsert:
        wit.script.ops.push_back({EditKind::kInsert, src, target});
        break;
      case Move::kFree:
        images[owner_of_row[s.j]].push_back(target);
        wit.script.ops.push_back({EditKind::kKeep, src});
        ++src;
        break;
    }
  }

  wit.substitution = Substitution(v.original_var_count);
  for (std::size_t x = 0; x < v.original_var_count; ++x) wit.substitution.set(VarId{static_cast<std::uint32_t>(x)}, {});
  for (std::size_t g = 0; g < images.size(); ++g) wit.substitution.set(v.free_owner[g], std::move(images[g]));
  wit.cost = wit.script.cost();
  return wit;
}

std::vector<char> free_flags(const RegularPatternView& v) {
  std::vector<char> is_free(v.beta.size() + 1, 0);
  for (std::size_t f : v.free_rows) is_free[f] = 1;
  return is_free;
}

// Rows of the cutoff DP: row j stores columns [lo, lo + len) contiguously.
struct BandRow {
  std::size_t lo = 0, len = 0, offset = 0;
};

}  // namespace

Witness dp_traceback(const RegularPatternView& v, WordView w, const DpMatrix& d) {
  const auto is_free = free_flags(v);
  const auto path = trace_path(v, w, is_free, [&](std::size_t j, std::size_t l) -> std::uint64_t { return d(j, l); });
  return to_witness(v, w, path);
}

Witness recover_witness(const RegularPatternView& v, WordView w, std::size_t delta) {
  const auto is_free = free_flags(v);
  const std::size_t B = v.beta.size(), n = w.size();
  const std::uint32_t inf = static_cast<std::uint32_t>(delta) + 1;

  // A cell can lie on a path of cost <= delta only if its value plus the
  // deletions still forced by the remaining lengths stays within delta.
  const auto admissible = [&](std::size_t j, std::size_t l, std::uint32_t val) {
    const std::size_t rest_beta = B - j, rest_w = n - l;
    const std::size_t forced = rest_beta > rest_w ? rest_beta - rest_w : 0;
    return val + forced <= delta;
  };

  std::vector<BandRow> rows(B + 1);
  std::vector<std::uint32_t> cells;
  const auto get = [&](std::size_t j, std::size_t l) -> std::uint32_t {
    const BandRow& r = rows[j];
    if (l < r.lo || l >= r.lo + r.len) return inf;
    return cells[r.offset + (l - r.lo)];
  };

  // Row 0: D[0][l] = l.
  {
    BandRow& r = rows[0];
    r.offset = 0;
    for (std::size_t l = 0; l <= n && admissible(0, l, static_cast<std::uint32_t>(l)); ++l) {
      cells.push_back(static_cast<std::uint32_t>(l));
      ++r.len;
    }
  }

  for (std::size_t j = 1; j <= B; ++j) {
    const BandRow& up = rows[j - 1];
    if (up.len == 0) break;
    BandRow r;
    r.lo = up.lo;
    r.offset = cells.size();
    const std::uint32_t horizontal = is_free[j] ? 0u : 1u;
    const Symbol b = v.beta[j - 1];
    const std::size_t up_end = up.lo + up.len;  // first column past the previous row's band

    std::uint32_t left = inf;
    std::size_t last_admissible = r.lo;
    bool any = false;
    for (std::size_t l = r.lo; l <= n; ++l) {
      std::uint32_t val;
      if (l == 0) {
        val = static_cast<std::uint32_t>(j);
      } else {
        val = std::min({get(j - 1, l) + 1, left + horizontal, get(j - 1, l - 1) + (b == w[l - 1] ? 0u : 1u)});
      }
      if (val > inf || !admissible(j, l, val)) val = inf;
      if (val < inf) {
        last_admissible = l;
        any = true;
      }
      if (l >= up_end && val == inf) break;  // only horizontal sources remain, and they are exhausted
      cells.push_back(val);
      left = val;
    }
    if (any) {
      r.len = last_admissible - r.lo + 1;
      cells.resize(r.offset + r.len);
      // Trim leading inadmissible cells so the next row starts at the band.
      std::size_t skip = 0;
      while (skip < r.len && cells[r.offset + skip] == inf) ++skip;
      if (skip > 0) {
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(r.offset),
                    cells.begin() + static_cast<std::ptrdiff_t>(r.offset + skip));
        r.lo += skip;
        r.len -= skip;
      }
    } else {
      cells.resize(r.offset);
    }
    rows[j] = r;
  }

  if (get(B, n) != delta) throw std::logic_error("cutoff DP does not reach the claimed distance");
  const auto path = trace_path(v, w, is_free, [&](std::size_t j, std::size_t l) -> std::uint64_t { return get(j, l); });
  return to_witness(v, w, path);
}

}  // namespace pvm
