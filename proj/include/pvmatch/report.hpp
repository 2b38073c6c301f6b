#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pvmatch/pattern.hpp"

namespace pvm {

/// Line 1 pattern, line 2 word, optional line 3 delta. Only the trailing
/// newline of each line is removed.
struct InstanceFile {
  std::string pattern_text;
  std::string word_text;
  std::optional<std::size_t> delta;
};

InstanceFile parse_instance(std::string_view contents);
/// `-` reads standard input.
InstanceFile read_instance(const std::string& path);

enum class Algo { kAuto, kDp, kDiagonal, kGeneral, kOracle };

Algo parse_algo(std::string_view name);
std::string_view to_string(Algo a) noexcept;

struct MatchRequest {
  std::string pattern_text;
  std::string word_text;
  std::optional<std::size_t> delta;
  Algo algo = Algo::kAuto;
  TextMode mode = TextMode::kUtf8;
  /// Work cap of the chosen algorithm: factorizations (general), search nodes
  /// (oracle) or matrix cells (dp). Unset means the algorithm's default.
  std::optional<std::size_t> budget;
};

inline constexpr std::size_t kDefaultDpCells = 100'000'000;

struct MatchReport {
  std::string algo;
  PatternClass pattern_class = PatternClass::kGeneral;
  std::optional<std::size_t> distance;  // unset: exceeds delta
  std::optional<std::size_t> delta;
  std::optional<bool> within_delta;
  std::optional<std::vector<std::pair<std::string, std::string>>> substitution;  // in variable order
  std::vector<std::string> script;  // K, D, S:c, I:c
  std::size_t script_cost = 0;
  std::vector<std::pair<std::string, double>> timings;  // seconds per phase
};

/// Decision: is the distance at most request.delta (required)?
MatchReport run_match(const MatchRequest& request);
/// Minimization; reports within_delta as well when a delta is given.
MatchReport run_min(const MatchRequest& request);

nlohmann::ordered_json to_json(const MatchReport& report);
std::string to_text(const MatchReport& report);
/// 0 within delta (or no delta), 1 exceeds.
int exit_code(const MatchReport& report) noexcept;

struct BenchConfig {
  std::vector<std::size_t> n;
  std::vector<std::size_t> delta;
  std::vector<std::string> algos{"diagonal"};
  std::uint64_t seed = 1;
  double density = 0.001;  // variables per word symbol
  std::size_t sigma = 4;
  std::optional<std::size_t> edits;  // default: twice the largest delta
  std::size_t repeats = 3;
  std::size_t dp_max_cells = 400'000'000;  // dp rows above this size are skipped
};

BenchConfig parse_bench_config(const nlohmann::json& j, BenchConfig base = {});

/// Writes `n,delta,algo,seconds,distance` rows to `csv` and time ratios across
/// delta for the diagonal algorithm to `log`.
void run_bench(const BenchConfig& config, std::ostream& csv, std::ostream& log);

}  // namespace pvm
