#include "pvmatch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "pvmatch/edit.hpp"
#include "pvmatch/errors.hpp"

namespace pvm {
namespace {

using Row = std::vector<std::uint32_t>;

Row step(const Row& row, Symbol c, WordView w) {
  Row next(row.size());
  next[0] = row[0] + 1;
  for (std::size_t l = 1; l < row.size(); ++l)
    next[l] = std::min({row[l] + 1, next[l - 1] + 1, row[l - 1] + (w[l - 1] == c ? 0u : 1u)});
  return next;
}

std::vector<Symbol> default_alphabet(const std::vector<WordView>& words, const std::vector<Symbol>& given) {
  if (!given.empty()) return given;
  std::set<Symbol> s;
  for (WordView v : words) s.insert(v.begin(), v.end());
  return {s.begin(), s.end()};
}

class AnySearch {
 public:
  AnySearch(const Pattern& p, WordView w, const OracleBound& b)
      : p_(p), w_(w), b_(b), images_(p.var_count()), assigned_(p.var_count(), false) {
    const Word term = term_projection(p);
    alphabet_ = default_alphabet({w, term}, b.alphabet);

    // occ_after_[i][x]: occurrences of x strictly after item i.
    occ_after_.assign(p.size() + 1, std::vector<std::size_t>(p.var_count(), 0));
    terms_after_.assign(p.size() + 1, 0);
    for (std::size_t i = p.size(); i-- > 0;) {
      occ_after_[i] = occ_after_[i + 1];
      terms_after_[i] = terms_after_[i + 1];
      if (p[i].is_variable())
        ++occ_after_[i][index(p[i].var())];
      else
        ++terms_after_[i];
    }
    // Relaxed suffix distances: every variable occurrence from item i on is a
    // free gap. suffix_[i][l] lower-bounds ed(rest, w[l..]).
    const std::size_t n = w.size();
    suffix_.assign(p.size() + 1, Row(n + 1));
    for (std::size_t l = 0; l <= n; ++l) suffix_[p.size()][l] = static_cast<std::uint32_t>(n - l);
    for (std::size_t i = p.size(); i-- > 0;) {
      const Row& next = suffix_[i + 1];
      Row& cur = suffix_[i];
      if (p[i].is_variable()) {
        std::uint32_t run = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t l = n + 1; l-- > 0;) cur[l] = run = std::min(run, next[l]);
      } else {
        cur[n] = next[n] + 1;
        for (std::size_t l = n; l-- > 0;)
          cur[l] = std::min({next[l] + 1, cur[l + 1] + 1, next[l + 1] + (w[l] == p[i].symbol() ? 0u : 1u)});
      }
    }

    Substitution empty(p.var_count());
    for (std::size_t x = 0; x < p.var_count(); ++x) empty.set(VarId{static_cast<std::uint32_t>(x)}, {});
    best_ = edit_distance(term, w);
    best_h_ = empty;
  }

  OracleResult run() {
    Row row(w_.size() + 1);
    std::iota(row.begin(), row.end(), 0u);
    visit(0, row);
    return {best_, best_h_, nodes_};
  }

 private:
  // Lower bound for any completion from `row`, where the remaining image is the
  // relaxed suffix from item `from` and has at least `min_rest` symbols.
  std::size_t bound(const Row& row, std::size_t from, std::size_t min_rest) const {
    const std::size_t n = w_.size();
    std::size_t lb = std::numeric_limits<std::size_t>::max();
    for (std::size_t l = 0; l <= n; ++l) {
      const std::size_t len_lb = min_rest > n - l ? min_rest - (n - l) : 0;
      lb = std::min(lb, row[l] + std::max<std::size_t>(suffix_[from][l], len_lb));
    }
    return lb;
  }

  // Minimum length of items after `i`, given the images fixed so far.
  std::size_t rest_len(std::size_t i) const {
    std::size_t len = terms_after_[i + 1];
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (assigned_[x]) len += occ_after_[i + 1][x] * images_[x].size();
    return len;
  }

  void tick() {
    if (++nodes_ > b_.max_nodes)
      throw BudgetExceeded("oracle search exceeded " + std::to_string(b_.max_nodes) + " nodes");
  }

  void visit(std::size_t i, const Row& row) {
    tick();
    if (i == p_.size()) {
      if (row.back() < best_) {
        best_ = row.back();
        for (std::size_t x = 0; x < images_.size(); ++x) best_h_.set(VarId{static_cast<std::uint32_t>(x)}, images_[x]);
      }
      return;
    }
    const PatternItem& it = p_[i];
    if (!it.is_variable()) {
      Row next = step(row, it.symbol(), w_);
      if (bound(next, i + 1, rest_len(i)) < best_) visit(i + 1, next);
      return;
    }
    const auto x = index(it.var());
    if (assigned_[x]) {
      Row next = row;
      for (Symbol c : images_[x]) next = step(next, c, w_);
      if (bound(next, i + 1, rest_len(i)) < best_) visit(i + 1, next);
      return;
    }
    assigned_[x] = true;
    images_[x].clear();
    build(i, x, row);
    assigned_[x] = false;
    images_[x].clear();
  }

  // Enumerates the image of variable x at its first occurrence (item i).
  void build(std::size_t i, std::size_t x, const Row& row) {
    tick();
    // x counts as assigned, so rest_len includes the later copies of the current prefix.
    if (bound(row, i, rest_len(i)) >= best_) return;
    visit(i + 1, row);
    if (images_[x].size() == b_.max_image_len) return;

    // Try the letter following the best alignment first to tighten the bound early.
    std::size_t at = 0;
    for (std::size_t l = 1; l <= w_.size(); ++l)
      if (row[l] < row[at]) at = l;
    std::vector<Symbol> order = alphabet_;
    if (at < w_.size()) {
      auto hit = std::find(order.begin(), order.end(), w_[at]);
      if (hit != order.end()) std::rotate(order.begin(), hit, hit + 1);
    }
    for (Symbol c : order) {
      images_[x].push_back(c);
      build(i, x, step(row, c, w_));
      images_[x].pop_back();
    }
  }

  const Pattern& p_;
  WordView w_;
  const OracleBound& b_;
  std::vector<Symbol> alphabet_;
  std::vector<Word> images_;
  std::vector<bool> assigned_;
  std::vector<std::vector<std::size_t>> occ_after_;
  std::vector<std::size_t> terms_after_;
  std::vector<Row> suffix_;
  std::size_t best_ = 0;
  Substitution best_h_;
  std::size_t nodes_ = 0;
};

}  // namespace

OracleBound exact_bound(const Pattern& p, WordView w) {
  OracleBound b;
  b.max_image_len = w.size() + term_projection(p).size();
  return b;
}

OracleResult oracle_any(const Pattern& p, WordView w, const OracleBound& bound) {
  return AnySearch(p, w, bound).run();
}

std::size_t oracle_regular_dp(const Pattern& p, WordView w) {
  if (classify(p) != PatternClass::kRegular) throw InvalidInput("pattern not regular");
  Row row(w.size() + 1);
  std::iota(row.begin(), row.end(), 0u);
  for (const PatternItem& it : p.items()) {
    if (it.is_variable()) {
      for (std::size_t l = 1; l < row.size(); ++l) row[l] = std::min(row[l], row[l - 1]);
    } else {
      row = step(row, it.symbol(), w);
    }
  }
  return row.back();
}

MedianResult oracle_median(const std::vector<Word>& strings, const OracleBound& bound) {
  if (strings.empty()) throw InvalidInput("median of an empty set of strings");
  std::vector<WordView> views(strings.begin(), strings.end());
  const std::vector<Symbol> alphabet = default_alphabet(views, bound.alphabet);
  std::size_t max_len = bound.max_image_len;
  if (max_len == 0) {
    std::size_t sum = 0, longest = 0;
    for (const Word& s : strings) sum += s.size(), longest = std::max(longest, s.size());
    max_len = sum + longest;
  }

  std::vector<Row> rows;
  for (const Word& s : strings) {
    Row r(s.size() + 1);
    std::iota(r.begin(), r.end(), 0u);
    rows.push_back(std::move(r));
  }

  MedianResult best{{}, 0};
  for (const Row& r : rows) best.cost += r.back();
  Word cand;
  std::size_t nodes = 0;

  const auto dfs = [&](auto&& self, const std::vector<Row>& cur) -> void {
    if (++nodes > bound.max_nodes)
      throw BudgetExceeded("median oracle exceeded " + std::to_string(bound.max_nodes) + " nodes");
    std::size_t total = 0, lb = 0;
    for (const Row& r : cur) total += r.back(), lb += *std::min_element(r.begin(), r.end());
    if (total < best.cost) best = {cand, total};
    if (cand.size() == max_len || lb >= best.cost) return;
    for (Symbol c : alphabet) {
      std::vector<Row> next;
      next.reserve(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) next.push_back(step(cur[i], c, strings[i]));
      cand.push_back(c);
      self(self, next);
      cand.pop_back();
    }
  };
  dfs(dfs, rows);
  return best;
}

}  // namespace pvm
