#include "pvmatch/regular.hpp"

#include <algorithm>
#include <stdexcept>

#include "pvmatch/errors.hpp"

namespace pvm {

NormalizedInstance normalize(const Pattern& p, WordView w) {
  if (classify(p) != PatternClass::kRegular) throw InvalidInput("pattern not regular");

  NormalizedInstance out;
  RegularPatternView& v = out.view;
  v.original_var_count = p.var_count();
  v.merge_map.resize(p.var_count());
  v.beta.reserve(p.size() + 1);
  v.beta.push_back(kSentinel);

  bool prev_was_var = false;
  VarId survivor{};
  for (const PatternItem& it : p.items()) {
    if (!it.is_variable()) {
      v.beta.push_back(it.symbol());
      prev_was_var = false;
      continue;
    }
    if (!prev_was_var) {
      survivor = it.var();
      v.free_rows.push_back(v.beta.size());
      v.free_owner.push_back(survivor);
    }
    v.merge_map[index(it.var())] = survivor;
    prev_was_var = true;
  }

  out.w.reserve(w.size() + 1);
  out.w.push_back(kSentinel);
  out.w.insert(out.w.end(), w.begin(), w.end());
  return out;
}

DpResult dp_distance(const RegularPatternView& v, WordView w, bool keep_matrix) {
  const std::size_t rows = v.beta.size() + 1, cols = w.size() + 1;
  std::vector<char> is_free(rows, 0);
  for (std::size_t f : v.free_rows) is_free[f] = 1;

  std::optional<DpMatrix> matrix;
  if (keep_matrix) matrix.emplace(rows, cols);

  std::vector<std::uint32_t> prev(cols), cur(cols);
  for (std::size_t l = 0; l < cols; ++l) prev[l] = static_cast<std::uint32_t>(l);
  if (matrix)
    for (std::size_t l = 0; l < cols; ++l) (*matrix)(0, l) = prev[l];

  for (std::size_t j = 1; j < rows; ++j) {
    const Symbol b = v.beta[j - 1];
    const std::uint32_t horizontal = is_free[j] ? 0u : 1u;
    cur[0] = static_cast<std::uint32_t>(j);
    for (std::size_t l = 1; l < cols; ++l) {
      const std::uint32_t diag = prev[l - 1] + (b == w[l - 1] ? 0u : 1u);
      cur[l] = std::min({prev[l] + 1, cur[l - 1] + horizontal, diag});
    }
    if (matrix)
      for (std::size_t l = 0; l < cols; ++l) (*matrix)(j, l) = cur[l];
    prev.swap(cur);
  }
  return {prev[cols - 1], std::move(matrix)};
}

namespace {

// Leftmost occurrence of `needle` in hay[from, to), or npos.
std::size_t find_kmp(WordView hay, std::size_t from, std::size_t to, const Word& needle) {
  if (needle.empty()) return from;
  std::vector<std::size_t> fail(needle.size(), 0);
  for (std::size_t i = 1, k = 0; i < needle.size(); ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = from, k = 0; i < to; ++i) {
    while (k > 0 && hay[i] != needle[k]) k = fail[k - 1];
    if (hay[i] == needle[k]) ++k;
    if (k == needle.size()) return i + 1 - needle.size();
  }
  return std::string::npos;
}

}  // namespace

std::optional<Witness> match_exact(const Pattern& p, WordView w) {
  if (classify(p) != PatternClass::kRegular) throw InvalidInput("pattern not regular");

  std::vector<Word> blocks(1);
  std::vector<VarId> vars;
  for (const PatternItem& it : p.items()) {
    if (it.is_variable()) {
      vars.push_back(it.var());
      blocks.emplace_back();
    } else {
      blocks.back().push_back(it.symbol());
    }
  }

  Witness wit{Substitution(p.var_count()), {}, 0};
  const auto keep_all = [&] {
    for (std::size_t i = 0; i < w.size(); ++i) wit.script.ops.push_back({EditKind::kKeep, i});
  };
  const Word& head = blocks.front();
  const Word& tail = blocks.back();
  if (vars.empty()) {
    if (!std::ranges::equal(head, w)) return std::nullopt;
    keep_all();
    return wit;
  }
  if (head.size() + tail.size() > w.size() || !std::equal(head.begin(), head.end(), w.begin()) ||
      !std::equal(tail.begin(), tail.end(), w.end() - static_cast<std::ptrdiff_t>(tail.size())))
    return std::nullopt;

  std::size_t pos = head.size();
  const std::size_t end = w.size() - tail.size();
  for (std::size_t i = 1; i < vars.size(); ++i) {
    const std::size_t at = find_kmp(w, pos, end, blocks[i]);
    if (at == std::string::npos) return std::nullopt;
    wit.substitution.set(vars[i - 1], Word(w.begin() + pos, w.begin() + at));
    pos = at + blocks[i].size();
  }
  wit.substitution.set(vars.back(), Word(w.begin() + pos, w.begin() + end));
  keep_all();
  return wit;
}

RegularResult min_distance(const Pattern& p, WordView w) {
  if (auto exact = match_exact(p, w)) return {0, std::move(*exact)};

  const NormalizedInstance norm = normalize(p, w);
  const FrontierSolver solver(norm.view, norm.w);
  const std::size_t cap = w.size() + (norm.view.beta.size() - 1);
  for (std::size_t delta = 1;; delta *= 2) {
    const std::size_t bound = std::min(delta, cap);
    if (auto found = solver.decide(bound)) return {*found, recover_witness(norm.view, norm.w, *found)};
    if (bound == cap) throw std::logic_error("distance exceeds the |w| + |term| bound");
  }
}

}  // namespace pvm
