#include "pvmatch/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pvmatch/errors.hpp"
#include "pvmatch/general.hpp"
#include "pvmatch/generator.hpp"
#include "pvmatch/oracle.hpp"
#include "pvmatch/regular.hpp"

namespace pvm {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t parse_count(std::string_view text, std::string_view what, std::size_t offset) {
  if (text.empty()) throw ParseError(std::string(what) + " is empty", offset);
  std::size_t value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError(std::string(what) + " must be a non-negative integer", offset + i);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

// Everything a solver needs, decoded once.
struct Decoded {
  Alphabet alphabet;
  Pattern pattern;
  Word word;
};

Decoded decode_request(const MatchRequest& r) {
  Alphabet alphabet;
  Pattern p = parse_pattern(r.pattern_text, alphabet, r.mode);
  Word w = encode(r.word_text, alphabet, r.mode);
  return {std::move(alphabet), std::move(p), std::move(w)};
}

std::string unit_text(Symbol s, const Alphabet& a, TextMode mode) {
  std::string out;
  append_unit(out, a.unit(s), mode);
  return out;
}

void fill_witness(MatchReport& rep, const Decoded& d, const Substitution& h, const EditScript& script,
                  TextMode mode) {
  std::vector<std::pair<std::string, std::string>> subst;
  for (std::size_t x = 0; x < d.pattern.var_count(); ++x) {
    const VarId id{static_cast<std::uint32_t>(x)};
    const Word* image = h.find(id);
    subst.emplace_back(d.pattern.name(id), image ? decode(*image, d.alphabet, mode) : std::string());
  }
  rep.substitution = std::move(subst);
  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditKind::kKeep: rep.script.emplace_back("K"); break;
      case EditKind::kDelete: rep.script.emplace_back("D"); break;
      case EditKind::kSubstitute: rep.script.push_back("S:" + unit_text(op.symbol, d.alphabet, mode)); break;
      case EditKind::kInsert: rep.script.push_back("I:" + unit_text(op.symbol, d.alphabet, mode)); break;
    }
  }
  rep.script_cost = script.cost();
}

Algo resolve(Algo requested, PatternClass cls) {
  if (requested != Algo::kAuto) return requested;
  return cls == PatternClass::kRegular ? Algo::kDiagonal : Algo::kGeneral;
}

void check_dp_budget(const Decoded& d, const MatchRequest& r) {
  const std::size_t cap = r.budget.value_or(kDefaultDpCells);
  const std::size_t rows = term_projection(d.pattern).size() + 2, cols = d.word.size() + 2;
  if (rows > cap / cols)
    throw BudgetExceeded("dp matrix of " + std::to_string(rows) + " x " + std::to_string(cols) +
                         " cells exceeds the budget; use --algo diagonal");
}

GeneralBudget general_budget(const MatchRequest& r) {
  GeneralBudget b;
  if (r.budget) b.max_factorizations = *r.budget;
  return b;
}

OracleBound oracle_bound(const Decoded& d, const MatchRequest& r) {
  OracleBound b = exact_bound(d.pattern, d.word);
  if (r.budget) b.max_nodes = *r.budget;
  return b;
}

// Runs the selected exact algorithm; `decision` limits the regular frontier
// search to the given threshold.
MatchReport solve(const MatchRequest& r, std::optional<std::size_t> decision) {
  auto t0 = Clock::now();
  const Decoded d = decode_request(r);
  MatchReport rep;
  rep.timings.emplace_back("parse", seconds_since(t0));
  rep.pattern_class = classify(d.pattern);
  const Algo algo = resolve(r.algo, rep.pattern_class);
  rep.algo = std::string(to_string(algo));
  rep.delta = r.delta;

  t0 = Clock::now();
  switch (algo) {
    case Algo::kDiagonal: {
      if (!decision) {
        const RegularResult res = min_distance(d.pattern, d.word);
        rep.timings.emplace_back("solve", seconds_since(t0));
        rep.distance = res.distance;
        fill_witness(rep, d, res.witness.substitution, res.witness.script, r.mode);
        break;
      }
      const NormalizedInstance norm = normalize(d.pattern, d.word);
      const std::size_t cap = d.word.size() + norm.view.beta.size() - 1;
      const auto found = diagonal_decide(norm.view, norm.w, std::min(*decision, cap));
      rep.timings.emplace_back("solve", seconds_since(t0));
      if (found) {
        rep.distance = *found;
        t0 = Clock::now();
        const Witness wit = recover_witness(norm.view, norm.w, *found);
        rep.timings.emplace_back("witness", seconds_since(t0));
        fill_witness(rep, d, wit.substitution, wit.script, r.mode);
      }
      break;
    }
    case Algo::kDp: {
      check_dp_budget(d, r);
      const NormalizedInstance norm = normalize(d.pattern, d.word);
      const DpResult res = dp_distance(norm.view, norm.w, true);
      rep.timings.emplace_back("solve", seconds_since(t0));
      t0 = Clock::now();
      const Witness wit = dp_traceback(norm.view, norm.w, *res.matrix);
      rep.timings.emplace_back("witness", seconds_since(t0));
      rep.distance = res.distance;
      fill_witness(rep, d, wit.substitution, wit.script, r.mode);
      break;
    }
    case Algo::kGeneral: {
      const GeneralResult res = general_min(d.pattern, d.word, general_budget(r));
      rep.timings.emplace_back("solve", seconds_since(t0));
      rep.distance = res.distance;
      fill_witness(rep, d, res.substitution, res.script, r.mode);
      break;
    }
    case Algo::kOracle: {
      const OracleResult res = oracle_any(d.pattern, d.word, oracle_bound(d, r));
      rep.timings.emplace_back("solve", seconds_since(t0));
      rep.distance = res.distance;
      const EditScript script = edit_script(apply_substitution(d.pattern, res.substitution), d.word);
      fill_witness(rep, d, res.substitution, script, r.mode);
      break;
    }
    case Algo::kAuto: break;  // resolved above
  }

  if (r.delta) {
    rep.within_delta = rep.distance && *rep.distance <= *r.delta;
    if (decision && !*rep.within_delta) {
      // Decision reports do not disclose a distance above the threshold.
      rep.distance.reset();
      rep.substitution.reset();
      rep.script.clear();
      rep.script_cost = 0;
    }
  }
  return rep;
}

}  // namespace

InstanceFile parse_instance(std::string_view contents) {
  std::string_view body = contents;
  if (body.ends_with('\n')) body.remove_suffix(1);
  std::vector<std::pair<std::string_view, std::size_t>> lines;  // text, byte offset
  for (std::size_t start = 0;;) {
    const std::size_t nl = body.find('\n', start);
    lines.emplace_back(body.substr(start, nl == std::string_view::npos ? body.npos : nl - start), start);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.size() < 2) throw ParseError("instance needs a pattern line and a word line", contents.size());
  if (lines.size() > 3) throw ParseError("instance has more than three lines", lines[3].second);

  InstanceFile f;
  f.pattern_text = std::string(lines[0].first);
  f.word_text = std::string(lines[1].first);
  if (lines.size() == 3) f.delta = parse_count(lines[2].first, "delta line", lines[2].second);
  return f;
}

InstanceFile read_instance(const std::string& path) {
  std::string contents;
  if (path == "-") {
    contents.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
    contents.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_instance(contents);
}

Algo parse_algo(std::string_view name) {
  if (name == "auto") return Algo::kAuto;
  if (name == "dp") return Algo::kDp;
  if (name == "diagonal") return Algo::kDiagonal;
  if (name == "general") return Algo::kGeneral;
  if (name == "oracle") return Algo::kOracle;
  throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algo a) noexcept {
  switch (a) {
    case Algo::kAuto: return "auto";
    case Algo::kDp: return "dp";
    case Algo::kDiagonal: return "diagonal";
    case Algo::kGeneral: return "general";
    case Algo::kOracle: return "oracle";
  }
  return "auto";
}

MatchReport run_match(const MatchRequest& request) {
  if (!request.delta) throw InvalidInput("match needs a delta (--delta or line 3 of the instance)");
  return solve(request, request.delta);
}

MatchReport run_min(const MatchRequest& request) { return solve(request, std::nullopt); }

nlohmann::ordered_json to_json(const MatchReport& r) {
  nlohmann::ordered_json j;
  j["algo"] = r.algo;
  j["pattern_class"] = std::string(to_string(r.pattern_class));
  if (r.distance)
    j["distance"] = *r.distance;
  else
    j["distance"] = "exceeds_delta";
  j["delta"] = r.delta ? nlohmann::ordered_json(*r.delta) : nlohmann::ordered_json(nullptr);
  j["within_delta"] = r.within_delta ? nlohmann::ordered_json(*r.within_delta) : nlohmann::ordered_json(nullptr);
  if (r.substitution) {
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (const auto& [name, image] : *r.substitution) s[name] = image;
    j["substitution"] = std::move(s);
    j["script"] = r.script;
    j["script_cost"] = r.script_cost;
  } else {
    j["substitution"] = nullptr;
    j["script"] = nullptr;
    j["script_cost"] = nullptr;
  }
  nlohmann::ordered_json t = nlohmann::ordered_json::object();
  for (const auto& [phase, secs] : r.timings) t[phase] = secs;
  j["timings"] = std::move(t);
  return j;
}

std::string to_text(const MatchReport& r) {
  std::ostringstream out;
  out << "algo: " << r.algo << '\n' << "class: " << to_string(r.pattern_class) << '\n';
  out << "distance: " << (r.distance ? std::to_string(*r.distance) : std::string("exceeds_delta")) << '\n';
  if (r.delta) out << "delta: " << *r.delta << '\n';
  if (r.within_delta) out << "within_delta: " << (*r.within_delta ? "true" : "false") << '\n';
  if (r.substitution) {
    for (const auto& [name, image] : *r.substitution) out << name << " -> \"" << image << "\"\n";
    out << "script:";
    for (const std::string& tok : r.script) out << ' ' << tok;
    out << "\nscript_cost: " << r.script_cost << '\n';
  }
  return out.str();
}

int exit_code(const MatchReport& report) noexcept {
  return report.within_delta && !*report.within_delta ? 1 : 0;
}

BenchConfig parse_bench_config(const nlohmann::json& j, BenchConfig c) {
  const auto list = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    out.clear();
    if (v.is_array())
      for (const auto& e : v) out.push_back(e.get<typename std::decay_t<decltype(out)>::value_type>());
    else
      out.push_back(v.get<typename std::decay_t<decltype(out)>::value_type>());
  };
  list("n", c.n);
  list("delta", c.delta);
  list("algo", c.algos);
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("density")) c.density = j.at("density").get<double>();
  if (j.contains("sigma")) c.sigma = j.at("sigma").get<std::size_t>();
  if (j.contains("edits")) c.edits = j.at("edits").get<std::size_t>();
  if (j.contains("repeats")) c.repeats = j.at("repeats").get<std::size_t>();
  if (j.contains("dp_max_cells")) c.dp_max_cells = j.at("dp_max_cells").get<std::size_t>();
  return c;
}

void run_bench(const BenchConfig& config, std::ostream& csv, std::ostream& log) {
  for (const std::string& a : config.algos)
    if (a != "diagonal" && a != "dp" && a != "min")
      throw InvalidInput("bench algorithm must be diagonal, dp or min, got '" + a + "'");

  csv << "n,delta,algo,seconds,distance\n";
  const std::size_t max_delta = config.delta.empty() ? 1 : *std::max_element(config.delta.begin(), config.delta.end());
  const std::size_t repeats = std::max<std::size_t>(config.repeats, 1);

  for (std::size_t n : config.n) {
    PlantedParams pp;
    pp.n = n;
    pp.sigma = config.sigma;
    pp.vars = std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(n) * config.density + 0.5));
    pp.max_segment = 20;
    pp.edits = config.edits.value_or(std::max<std::size_t>(1, 2 * max_delta));
    pp.seed = config.seed + n;
    const PlantedInstance inst = planted_instance(pp);
    const NormalizedInstance norm = normalize(inst.pattern, inst.word);

    // Times `fn` after one untimed warm-up; reports the median of the repeats.
    const auto timed = [&](auto&& fn) {
      long long value = fn();
      std::vector<double> secs;
      for (std::size_t i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        value = fn();
        secs.push_back(seconds_since(t0));
      }
      std::sort(secs.begin(), secs.end());
      return std::pair{secs[secs.size() / 2], value};
    };

    std::vector<std::pair<std::size_t, double>> diagonal_times;
    for (std::size_t delta : config.delta) {
      for (const std::string& algo : config.algos) {
        std::pair<double, long long> cell;
        if (algo == "diagonal") {
          cell = timed([&] {
            const auto r = diagonal_decide(norm.view, norm.w, delta);
            return r ? static_cast<long long>(*r) : -1LL;
          });
          diagonal_times.emplace_back(delta, cell.first);
        } else if (algo == "dp") {
          if ((norm.view.beta.size() + 1) > config.dp_max_cells / (norm.w.size() + 1)) continue;
          cell = timed([&] {
            const std::size_t d = dp_distance(norm.view, norm.w).distance;
            return d <= delta ? static_cast<long long>(d) : -1LL;
          });
        } else {
          cell = timed([&] { return static_cast<long long>(min_distance(inst.pattern, inst.word).distance); });
        }
        csv << n << ',' << delta << ',' << algo << ',' << cell.first << ',' << cell.second << '\n';
      }
    }
    if (diagonal_times.size() >= 2) {
      const auto lo = std::min_element(diagonal_times.begin(), diagonal_times.end());
      const auto hi = std::max_element(diagonal_times.begin(), diagonal_times.end());
      log << "n=" << n << ": diagonal time ratio delta " << hi->first << "/" << lo->first << " = "
          << (lo->second > 0 ? hi->second / lo->second : 0.0) << " (delta ratio "
          << static_cast<double>(hi->first) / static_cast<double>(std::max<std::size_t>(lo->first, 1)) << ")\n";
    }
  }
}

}  // namespace pvm
