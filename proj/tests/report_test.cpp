#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "pvmatch/edit.hpp"
#include "pvmatch/errors.hpp"
#include "pvmatch/generator.hpp"
#include "pvmatch/report.hpp"

namespace pvm {
namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(PVMATCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

nlohmann::json without_timings(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  j.erase("timings");
  return j;
}

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(PVMATCH_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  return nlohmann::json::parse(in);
}

TEST(InstanceFile, ParsesLines) {
  const auto f = parse_instance("<x>ab<y>\nba\n1\n");
  EXPECT_EQ(f.pattern_text, "<x>ab<y>");
  EXPECT_EQ(f.word_text, "ba");
  EXPECT_EQ(f.delta, std::optional<std::size_t>(1));
  const auto g = parse_instance("a<x>\nword");
  EXPECT_EQ(g.word_text, "word");
  EXPECT_FALSE(g.delta);
  EXPECT_EQ(parse_instance("<x>\n\n").word_text, "");
  EXPECT_EQ(parse_instance("a \nb \n").word_text, "b ");
}

TEST(InstanceFile, Errors) {
  EXPECT_THROW(parse_instance("<x>\n"), ParseError);
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("a\nb\nx1\n"), ParseError);
  EXPECT_THROW(parse_instance("a\nb\n1\nextra\n"), ParseError);
}

TEST(Report, SubstitutionReproducesDistance) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 40; ++t) {
    PlantedParams pp;
    pp.n = 5 + rng() % 40;
    pp.sigma = 2 + rng() % 2;
    pp.vars = 1 + rng() % 3;
    pp.edits = rng() % 5;
    pp.seed = rng();
    const PlantedInstance inst = planted_instance(pp);
    for (Algo algo : {Algo::kAuto, Algo::kDp}) {
      MatchRequest req{inst.pattern_text, inst.word_text, std::nullopt, algo};
      const MatchReport rep = run_min(req);
      ASSERT_TRUE(rep.distance && rep.substitution);
      Alphabet a;
      const Pattern p = parse_pattern(inst.pattern_text, a);
      const Word w = encode(inst.word_text, a);
      Substitution h(p.var_count());
      for (const auto& [name, image] : *rep.substitution) h.set(*p.find_var(name), encode(image, a));
      EXPECT_EQ(edit_distance(apply_substitution(p, h), w), *rep.distance);
      EXPECT_EQ(rep.script_cost, *rep.distance);
      EXPECT_LE(*rep.distance, pp.edits);
    }
  }
}

TEST(Report, AutoNeverFallsBack) {
  const MatchReport regular = run_min({"<x>ab<y>", "ba"});
  EXPECT_EQ(regular.algo, "diagonal");
  const MatchReport general = run_min({"<x>a<x>", "bab"});
  EXPECT_EQ(general.algo, "general");
  EXPECT_THROW(run_match({"<x><y><x>", "ab", 1, Algo::kDiagonal}), InvalidInput);
  EXPECT_THROW(run_match({"<x>", "ab"}), InvalidInput);  // no delta
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("match --pattern '<x>ab<y>' --word ba --delta 1").code, 0);
  EXPECT_EQ(run_cli("match --pattern '<x>ab<y>' --word ba --delta 0").code, 1);
  EXPECT_EQ(run_cli("match --pattern '<x><y><x>' --word ab --delta 1 --algo diagonal").code, 2);
  EXPECT_EQ(run_cli("match --pattern '<x' --word ab --delta 1").code, 2);
  EXPECT_EQ(run_cli("match --nonsense").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("min --pattern '<x>aaa<y>' --word bbb").code, 0);
  EXPECT_EQ(run_cli("classify --pattern 'ab<x>ab<x><x>baab'").out, "unary\n");
}

TEST(Cli, InstanceFilesAndStdin) {
  const auto dir = std::filesystem::temp_directory_path() / "pvmatch_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "inst.txt";
  std::ofstream(file) << "<x>ab<y>\nba\n1\n";
  EXPECT_EQ(run_cli("match " + file.string()).code, 0);
  EXPECT_EQ(run_cli("match --delta 0 " + file.string()).code, 1);
  EXPECT_EQ(run_cli("match - < " + file.string()).code, 0);
  EXPECT_EQ(run_cli("match " + (dir / "missing.txt").string()).code, 2);
}

struct GoldenCase {
  const char* file;
  const char* args;
  int code;
};

class CliGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, MatchesGoldenJson) {
  const GoldenCase& c = GetParam();
  const CliRun r = run_cli(std::string(c.args) + " --json");
  EXPECT_EQ(r.code, c.code);
  EXPECT_EQ(without_timings(r.out), golden(c.file)) << r.out;
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("timings"));
}

INSTANTIATE_TEST_SUITE_P(
    Goldens, CliGolden,
    ::testing::Values(GoldenCase{"min_regular.json", "min --pattern '<x>ab<y>' --word ba", 0},
                      GoldenCase{"match_within.json", "match --pattern '<x>ab<y>' --word ba --delta 1", 0},
                      GoldenCase{"match_exceeds.json", "match --pattern '<x>ab<y>' --word ba --delta 0", 1},
                      GoldenCase{"match_variable_only.json", "match --pattern '<x>' --word zzz --delta 0", 0},
                      GoldenCase{"min_noncross.json", "min --pattern '<x><x>bbb<y><y>' --word aaaabbbbb", 0},
                      GoldenCase{"min_dp.json", "min --pattern '<x>aaa<y>' --word bbb --algo dp", 0},
                      GoldenCase{"min_oracle.json", "min --pattern '<x>a<x>' --word bab --algo oracle", 0},
                      GoldenCase{"min_planted.json", "min " PVMATCH_GOLDEN_DIR "/planted_seed7.txt", 0}));

TEST(Cli, GenHardnessWritesInstanceAndSidecar) {
  const auto prefix = std::filesystem::temp_directory_path() / "pvmatch_gen";
  EXPECT_EQ(run_cli("gen-hardness --strings 0,1 --delta 1 --out " + prefix.string()).code, 0);
  std::ifstream side(prefix.string() + ".json");
  ASSERT_TRUE(side);
  const auto j = nlohmann::json::parse(side);
  EXPECT_EQ(j["S"], 12);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["word_length"], 578);
  EXPECT_EQ(j["structural_only"], false);
  std::ifstream inst(prefix.string() + ".txt");
  std::stringstream buf;
  buf << inst.rdbuf();
  const InstanceFile f = parse_instance(buf.str());
  EXPECT_EQ(f.delta, std::optional<std::size_t>(1));
  EXPECT_EQ(f.word_text.size(), 578u);

  EXPECT_EQ(run_cli("gen-hardness --strings 0,2 --delta 1").code, 2);
  const CliRun small = run_cli("gen-hardness --strings 0 --delta 0 --s-override 1");
  EXPECT_EQ(small.out, "<x>$#\n0$#\n0\n");
}

TEST(Bench, EmptyListGivesHeaderOnly) {
  std::ostringstream csv, log;
  BenchConfig c;
  c.delta = {8};
  run_bench(c, csv, log);
  EXPECT_EQ(csv.str(), "n,delta,algo,seconds,distance\n");
  EXPECT_EQ(run_cli("bench --delta 8").out, "n,delta,algo,seconds,distance\n");
}

std::vector<std::vector<std::string>> rows_of(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Bench, DpAndDiagonalAgree) {
  std::ostringstream csv, log;
  BenchConfig c;
  c.n = {100};
  c.delta = {10};
  c.algos = {"dp", "diagonal"};
  c.repeats = 1;
  run_bench(c, csv, log);
  const auto rows = rows_of(csv.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][2], "dp");
  EXPECT_EQ(rows[0][4], rows[1][4]);
}

TEST(Bench, RowsPerDeltaAndRatio) {
  std::ostringstream csv, log;
  const BenchConfig c = parse_bench_config(nlohmann::json::parse(R"({"n":[1000],"delta":[8,64],"algo":"diagonal","repeats":1})"));
  run_bench(c, csv, log);
  const auto rows = rows_of(csv.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][1], "8");
  EXPECT_EQ(rows[1][1], "64");
  EXPECT_NE(log.str().find("ratio"), std::string::npos);
  EXPECT_THROW(run_bench(parse_bench_config(nlohmann::json::parse(R"({"n":[10],"delta":[1],"algo":"x"})")), csv, log),
               InvalidInput);
}

}  // namespace
}  // namespace pvm
