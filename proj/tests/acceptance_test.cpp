// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pvmatch/edit.hpp"
#include "pvmatch/general.hpp"
#include "pvmatch/generator.hpp"
#include "pvmatch/hardness.hpp"
#include "pvmatch/median.hpp"
#include "pvmatch/oracle.hpp"
#include "pvmatch/regular.hpp"
#include "test_util.hpp"

namespace {

using namespace pvm;
using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              seconds(t0));
  std::fflush(stdout);
}

// Counters for criterion 4, filled while criteria 1-3 run.
std::size_t witnesses_checked = 0;
std::size_t witness_violations = 0;

void check_witness(const Pattern& p, WordView w, const Witness& wit, std::size_t distance) {
  ++witnesses_checked;
  const Word image = apply_substitution(p, wit.substitution);
  if (edit_distance(image, w) != distance || wit.script.cost() != distance || apply_script(image, wit.script) != Word(w.begin(), w.end()))
    ++witness_violations;
}

// Regular instance: planted (low distance) or uniformly random (higher distance).
testing::Instance random_regular_instance(std::mt19937_64& rng, std::size_t max_n, std::size_t max_vars,
                                          std::size_t max_sigma) {
  const std::size_t sigma = 1 + rng() % max_sigma;
  if (rng() % 2 == 0) {
    PlantedParams pp;
    pp.n = rng() % (max_n + 1);
    pp.sigma = sigma;
    pp.vars = 1 + rng() % max_vars;
    pp.max_segment = 1 + rng() % 6;
    pp.edits = rng() % 5;
    pp.seed = rng();
    PlantedInstance inst = planted_instance(pp);
    return {std::move(inst.alphabet), std::move(inst.pattern), std::move(inst.word)};
  }
  const std::size_t n = rng() % (max_n + 1);
  return testing::make(testing::random_regular(rng, rng() % (max_n + 1), max_vars, sigma),
                       testing::random_text(rng, n, sigma));
}

Outcome criterion1() {
  std::mt19937_64 rng(1001);
  std::size_t mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto in = random_regular_instance(rng, 20, 5, 3);
    const auto norm = normalize(in.pattern, in.word);
    const std::size_t dp = dp_distance(norm.view, norm.w).distance;
    const RegularResult md = min_distance(in.pattern, in.word);
    const std::size_t oracle = oracle_any(in.pattern, in.word, exact_bound(in.pattern, in.word)).distance;
    if (dp != md.distance || dp != oracle) ++mismatches;
    check_witness(in.pattern, in.word, md.witness, md.distance);
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over 1000 instances"};
}

Outcome criterion2() {
  std::mt19937_64 rng(2002);
  std::size_t violations = 0, entries = 0;
  for (int t = 0; t < 200; ++t) {
    const auto in = random_regular_instance(rng, 60, 5, 3);
    const auto norm = normalize(in.pattern, in.word);
    const auto dp = dp_distance(norm.view, norm.w, true);
    const DpMatrix& d = *dp.matrix;
    const FrontierTable table = FrontierSolver(norm.view, norm.w).trace(dp.distance);
    if (table.distance != dp.distance) ++violations;
    const auto B = static_cast<std::int64_t>(norm.view.beta.size());
    const auto n = static_cast<std::int64_t>(norm.w.size());
    // reach(delta, d): furthest row on diagonal d with D <= delta, or kNegInf.
    const auto reach = [&](std::int64_t delta, std::int64_t diag) {
      std::int32_t r = kNegInf;
      if (delta < 0) return r;
      for (std::int64_t j = std::max<std::int64_t>(0, -diag); j <= B && j + diag <= n; ++j)
        if (d(j, j + diag) <= static_cast<std::size_t>(delta)) r = static_cast<std::int32_t>(j);
      return r;
    };
    for (std::size_t delta = 0; delta < table.rows.size(); ++delta)
      for (std::int64_t diag = table.d_prime[delta] + 1; diag <= n; ++diag) {
        const std::int32_t now = reach(static_cast<std::int64_t>(delta), diag);
        const std::int32_t before = reach(static_cast<std::int64_t>(delta) - 1, diag);
        const std::int32_t expected = now != kNegInf && now > before ? now : kNegInf;
        const std::int32_t m = table.at(delta, diag);
        if (m != kNegInf) ++entries;
        if (m != expected || (m != kNegInf && d(m, m + diag) != delta)) ++violations;
      }
  }
  return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(entries) + " entries"};
}

Outcome criterion3() {
  std::mt19937_64 rng(3003);
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    PlantedParams pp;
    pp.n = 1 + rng() % 2000;
    pp.sigma = 2 + rng() % 3;
    pp.vars = 1 + rng() % 20;
    pp.max_segment = 1 + rng() % 30;
    pp.edits = rng() % 200;
    pp.seed = rng();
    const PlantedInstance in = planted_instance(pp);
    const auto norm = normalize(in.pattern, in.word);
    const std::size_t dp = dp_distance(norm.view, norm.w).distance;
    const RegularResult md = min_distance(in.pattern, in.word);
    if (dp != md.distance) ++mismatches;
    check_witness(in.pattern, in.word, md.witness, md.distance);
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over 100 instances"};
}

Outcome criterion4() {
  return {witness_violations == 0 && witnesses_checked == 1100,
          std::to_string(witness_violations) + " violations over " + std::to_string(witnesses_checked) + " witnesses"};
}

// The fixed large instance shared by criteria 5 and 6.
struct Large {
  PlantedInstance inst;
  NormalizedInstance norm;
};

const Large& large_instance() {
  static const Large large = [] {
    PlantedParams pp;
    pp.n = 100'000;
    pp.sigma = 4;
    pp.vars = 10;
    pp.max_segment = 20;
    pp.edits = 400;
    pp.seed = 5005;
    PlantedInstance inst = planted_instance(pp);
    NormalizedInstance norm = normalize(inst.pattern, inst.word);
    return Large{std::move(inst), std::move(norm)};
  }();
  return large;
}

// Median wall time of `reps` runs after one warm-up.
double timed(const std::function<void()>& fn, int reps = 3) {
  fn();
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    fn();
    t.push_back(seconds(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::size_t large_distance = 0;

Outcome criterion5() {
  const Large& L = large_instance();
  const auto exact = diagonal_decide(L.norm.view, L.norm.w, 100'000);
  if (!exact) return {false, "no distance found"};
  large_distance = *exact;
  if (large_distance < 256) return {false, "instance distance " + std::to_string(large_distance) + " < 256"};
  const double t16 = timed([&] { (void)diagonal_decide(L.norm.view, L.norm.w, 16); });
  const double t256 = timed([&] { (void)diagonal_decide(L.norm.view, L.norm.w, 256); });
  const double ratio = t256 / t16;
  char buf[200];
  std::snprintf(buf, sizeof buf, "distance %zu, t(16)=%.3fs t(256)=%.3fs ratio %.2f (limit 32), single run < 30s",
                large_distance, t16, t256, ratio);
  return {ratio <= 32.0 && t256 < 30.0, buf};
}

Outcome criterion6() {
  const Large& L = large_instance();
  if (large_distance == 0) return {false, "criterion 5 instance unavailable"};
  std::size_t phi = 0;
  const double t_min = timed([&] { phi = min_distance(L.inst.pattern, L.inst.word).distance; });
  const double t_one = timed([&] { (void)diagonal_decide(L.norm.view, L.norm.w, large_distance); });
  const double ratio = t_min / t_one;
  char buf[200];
  std::snprintf(buf, sizeof buf, "phi %zu, min_distance %.3fs vs one decision %.3fs, ratio %.2f (limit 4)", phi, t_min,
                t_one, ratio);
  return {phi == large_distance && ratio <= 4.0, buf};
}

Outcome criterion7() {
  Alphabet a;
  std::vector<Word> all;
  for (std::size_t len = 0; len <= 3; ++len)
    for (std::size_t bits = 0; bits < (1u << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s.push_back(bits >> i & 1 ? '1' : '0');
      all.push_back(encode(s, a));
    }
  a.intern(U'0');
  a.intern(U'1');
  std::size_t count = 0, mismatches = 0;
  std::vector<std::size_t> idx;
  const std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (!idx.empty()) {
      std::vector<Word> in;
      for (std::size_t i : idx) in.push_back(all[i]);
      ++count;
      const MedianResult m = median(in);
      if (m.cost != oracle_median(in).cost || m.cost != sum_distance(m.median, in)) ++mismatches;
    }
    if (k == 0) return;
    for (std::size_t i = 0; i < all.size(); ++i) {
      idx.push_back(i);
      rec(k - 1);
      idx.pop_back();
    }
  };
  rec(3);
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over " + std::to_string(count) + " instances"};
}

Outcome criterion8() {
  std::mt19937_64 rng(8008);
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t sigma = 1 + rng() % 3;
    const auto in = testing::make(testing::random_regular(rng, rng() % 10, 2, sigma),
                                  testing::random_text(rng, rng() % 13, sigma));
    const auto norm = normalize(in.pattern, in.word);
    const GeneralResult g = general_min(in.pattern, in.word);
    if (g.distance != dp_distance(norm.view, norm.w).distance) ++mismatches;
    if (edit_distance(apply_substitution(in.pattern, g.substitution), in.word) != g.distance) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over 100 instances"};
}

Outcome criterion9() {
  std::size_t cells = 0, bad = 0;
  for (std::size_t S : {2, 4, 6, 8})
    for (std::size_t g = 0; 2 * g <= S; ++g)
      for (std::size_t l = g; l <= S; ++l) {
        if (S > 2 * (l - g)) continue;
        for (GadgetSide side : {GadgetSide::kLeading, GadgetSide::kTrailing}) {
          ++cells;
          if (!lemma1_check(S, g, l, side).agree) ++bad;
        }
      }
  return {bad == 0 && cells > 0, std::to_string(bad) + " disagreements over " + std::to_string(cells) + " cells"};
}

ReductionParams random_ms(std::mt19937_64& rng, std::size_t max_total) {
  ReductionParams p;
  const std::size_t k = 1 + rng() % 3;
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t room = max_total - total;
    const std::size_t len = room == 0 ? 0 : rng() % (std::min<std::size_t>(room, 3) + 1);
    std::string s;
    for (std::size_t j = 0; j < len; ++j) s.push_back(rng() % 2 ? '1' : '0');
    total += len;
    p.strings.push_back(s);
  }
  p.delta = rng() % (total + 1);
  return p;
}

Outcome criterion10() {
  std::mt19937_64 rng(10010);
  std::size_t violations = 0, applicable = 0;
  for (int t = 0; t < 50; ++t) {
    const ReductionParams params = random_ms(rng, 4);
    const ReductionInstance inst = gen_instance(params);
    const MedianResult m = median(inst.strings);
    if (m.cost > params.delta) continue;
    ++applicable;
    if (!forward_check(inst, m.median)) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(applicable) +
                               " instances with median cost <= delta (50 generated)"};
}

Outcome criterion11() {
  std::mt19937_64 rng(11011);
  std::size_t mismatches = 0;
  for (int t = 0; t < 20; ++t) {
    ReductionParams params = random_ms(rng, 4);
    params.s_override = 1 + rng() % 3;
    const ReductionInstance inst = gen_instance(params);
    if (!inst.structural_only) return {false, "override not flagged"};
    const bool ms_yes = oracle_median(inst.strings).cost <= params.delta;
    const bool match_yes =
        oracle_any(inst.pattern, inst.word, exact_bound(inst.pattern, inst.word)).distance <= params.delta;
    if (ms_yes != match_yes) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over 20 structural-only instances"};
}

}  // namespace

int main() {
  report(1, "regular oracle equivalence", criterion1);
  report(2, "frontier/DP agreement", criterion2);
  report(3, "cross-scale agreement", criterion3);
  report(4, "witness identity", criterion4);
  report(5, "linear-in-delta scaling", criterion5);
  report(6, "doubling cost", criterion6);
  report(7, "median exactness", criterion7);
  report(8, "general/regular cross-check", criterion8);
  report(9, "separator gadget grid", criterion9);
  report(10, "reduction forward soundness", criterion10);
  report(11, "micro reduction equivalence", criterion11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
