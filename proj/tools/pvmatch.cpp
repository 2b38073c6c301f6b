// Command-line front end: match, min, classify, gen-hardness, bench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pvmatch/errors.hpp"
#include "pvmatch/hardness.hpp"
#include "pvmatch/report.hpp"

namespace {

struct InstanceOptions {
  std::string file;
  std::optional<std::string> pattern;
  std::optional<std::string> word;
  std::optional<std::size_t> delta;
  std::string algo = "auto";
  bool json = false;
  bool binary = false;
  std::optional<std::size_t> budget;

  bool pattern_only = false;  // classify needs no word

  void attach(CLI::App* cmd) {
    cmd->add_option("instance", file, "Instance file (pattern, word, optional delta); '-' reads stdin");
    cmd->add_option("--pattern", pattern, "Pattern text, instead of an instance file");
    cmd->add_flag("--json", json, "Emit a JSON report");
    cmd->add_flag("--binary", binary, "Treat every byte as one symbol");
    if (!pattern_only) {
      cmd->add_option("--word", word, "Word text, instead of an instance file");
      cmd->add_option("--delta", delta, "Distance threshold (overrides line 3)");
      cmd->add_option("--algo", algo, "auto|dp|diagonal|general|oracle")
          ->check(CLI::IsMember({"auto", "dp", "diagonal", "general", "oracle"}));
      cmd->add_option("--budget", budget, "Work cap: factorizations, oracle nodes or dp cells");
    }
  }

  pvm::MatchRequest request() const {
    pvm::MatchRequest r;
    if (pattern_only && pattern) {
      if (!file.empty()) throw pvm::InvalidInput("give either an instance file or --pattern");
      r.pattern_text = *pattern;
    } else if (pattern || word) {
      if (!pattern || !word) throw pvm::InvalidInput("--pattern and --word must be given together");
      if (!file.empty()) throw pvm::InvalidInput("give either an instance file or --pattern/--word");
      r.pattern_text = *pattern;
      r.word_text = *word;
    } else {
      if (file.empty()) throw pvm::InvalidInput("no instance: pass a file, '-', or --pattern/--word");
      pvm::InstanceFile f = pvm::read_instance(file);
      r.pattern_text = std::move(f.pattern_text);
      r.word_text = std::move(f.word_text);
      r.delta = f.delta;
    }
    if (delta) r.delta = delta;
    r.algo = pvm::parse_algo(algo);
    r.mode = binary ? pvm::TextMode::kBinary : pvm::TextMode::kUtf8;
    r.budget = budget;
    return r;
  }
};

int emit(const pvm::MatchReport& rep, bool json) {
  if (json)
    std::cout << pvm::to_json(rep).dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) << '\n';
  else
    std::cout << pvm::to_text(rep);
  return pvm::exit_code(rep);
}

template <class T>
std::vector<T> split_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    if constexpr (std::is_same_v<T, std::string>)
      out.push_back(item);
    else
      out.push_back(static_cast<T>(std::stoull(item)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edit distance between patterns with variables and words"};
  app.require_subcommand(1);

  InstanceOptions match_opts, min_opts, classify_opts;
  CLI::App* match = app.add_subcommand("match", "Decide whether the distance is at most delta");
  match_opts.attach(match);
  CLI::App* min = app.add_subcommand("min", "Compute the distance and a witness");
  min->alias("min-match");
  min_opts.attach(min);
  CLI::App* cls = app.add_subcommand("classify", "Print the pattern class");
  classify_opts.pattern_only = true;
  classify_opts.attach(cls);

  CLI::App* gen = app.add_subcommand("gen-hardness", "Generate a reduction instance from binary strings");
  std::string gen_strings;
  std::size_t gen_delta = 0;
  std::optional<std::size_t> gen_s;
  std::string gen_out;
  gen->add_option("--strings", gen_strings, "Comma-separated binary strings")->required();
  gen->add_option("--delta", gen_delta, "Median cost budget")->required();
  gen->add_option("--s-override", gen_s, "Separator size (marks the instance structural only)");
  gen->add_option("--out", gen_out, "Write PREFIX.txt and PREFIX.json instead of printing");

  CLI::App* bench = app.add_subcommand("bench", "Time the algorithms on planted instances (CSV on stdout)");
  std::string bench_n, bench_delta, bench_algo, bench_config;
  std::optional<std::uint64_t> bench_seed;
  std::optional<double> bench_density;
  std::optional<std::size_t> bench_sigma, bench_edits, bench_repeats;
  bench->add_option("--n", bench_n, "Comma-separated word lengths");
  bench->add_option("--delta", bench_delta, "Comma-separated thresholds");
  bench->add_option("--algo", bench_algo, "Comma-separated: diagonal, dp, min");
  bench->add_option("--seed", bench_seed, "Instance seed");
  bench->add_option("--density", bench_density, "Variables per word symbol");
  bench->add_option("--sigma", bench_sigma, "Alphabet size");
  bench->add_option("--edits", bench_edits, "Planted edits (default twice the largest delta)");
  bench->add_option("--repeats", bench_repeats, "Timed repetitions after one warm-up");
  bench->add_option("--config", bench_config, "JSON config with the same keys; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (match->parsed()) return emit(pvm::run_match(match_opts.request()), match_opts.json);
    if (min->parsed()) return emit(pvm::run_min(min_opts.request()), min_opts.json);

    if (cls->parsed()) {
      const pvm::MatchRequest r = classify_opts.request();
      pvm::Alphabet alphabet;
      const auto c = pvm::classify(pvm::parse_pattern(r.pattern_text, alphabet, r.mode));
      if (classify_opts.json)
        std::cout << nlohmann::ordered_json{{"pattern_class", std::string(pvm::to_string(c))}}.dump() << '\n';
      else
        std::cout << pvm::to_string(c) << '\n';
      return 0;
    }

    if (gen->parsed()) {
      pvm::ReductionParams params;
      params.strings = split_list<std::string>(gen_strings);
      params.delta = gen_delta;
      params.s_override = gen_s;
      const pvm::ReductionInstance inst = pvm::gen_instance(params);
      std::size_t sum = 0;
      for (const auto& s : inst.strings) sum += s.size();

      const std::string instance_text = pvm::to_string(inst.pattern, inst.alphabet) + '\n' +
                                        pvm::decode(inst.word, inst.alphabet) + '\n' + std::to_string(inst.delta) +
                                        '\n';
      nlohmann::ordered_json side{{"S", inst.separator},
                                  {"k", inst.strings.size()},
                                  {"delta", inst.delta},
                                  {"structural_only", inst.structural_only},
                                  {"word_length", inst.word.size()},
                                  {"sum_lengths", sum}};
      if (gen_out.empty()) {
        std::cout << instance_text;
      } else {
        std::ofstream(gen_out + ".txt", std::ios::binary) << instance_text;
        std::ofstream(gen_out + ".json") << side.dump(2) << '\n';
        if (!std::ifstream(gen_out + ".json")) throw pvm::InvalidInput("cannot write to '" + gen_out + "'");
      }
      return 0;
    }

    if (bench->parsed()) {
      pvm::BenchConfig config;
      if (!bench_config.empty()) {
        std::ifstream in(bench_config);
        if (!in) throw pvm::InvalidInput("cannot open bench config '" + bench_config + "'");
        config = pvm::parse_bench_config(nlohmann::json::parse(in), config);
      }
      if (bench->count("--n")) config.n = split_list<std::size_t>(bench_n);
      if (bench->count("--delta")) config.delta = split_list<std::size_t>(bench_delta);
      if (bench->count("--algo")) config.algos = split_list<std::string>(bench_algo);
      if (bench_seed) config.seed = *bench_seed;
      if (bench_density) config.density = *bench_density;
      if (bench_sigma) config.sigma = *bench_sigma;
      if (bench_edits) config.edits = bench_edits;
      if (bench_repeats) config.repeats = *bench_repeats;
      pvm::run_bench(config, std::cout, std::cerr);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
