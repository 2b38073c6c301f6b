#include <gtest/gtest.h>

#include <random>

#include "pvmatch/errors.hpp"
#include "pvmatch/hardness.hpp"
#include "pvmatch/median.hpp"

namespace pvm {
namespace {

TEST(GenInstance, Examples) {
  const auto two = gen_instance({{"0", "1"}, 1, std::nullopt});
  EXPECT_EQ(two.separator, 12u);
  EXPECT_EQ(two.word.size(), 578u);
  EXPECT_EQ(two.pattern.occurrences(VarId{0}), 2u);
  EXPECT_EQ(classify(two.pattern), PatternClass::kUnary);
  EXPECT_FALSE(two.structural_only);

  const auto one = gen_instance({{"0"}, 0, std::nullopt});
  EXPECT_EQ(one.separator, 6u);
  EXPECT_EQ(one.word.size(), 73u);
  EXPECT_EQ(decode(WordView(one.word).first(8), one.alphabet), "0$$$$$$#");

  const auto small = gen_instance({{"0", "1"}, 1, 2});
  EXPECT_TRUE(small.structural_only);
  EXPECT_EQ(small.separator, 2u);
}

TEST(GenInstance, TemplateShape) {
  const auto inst = gen_instance({{"01", "", "110"}, 3, std::nullopt});
  const std::size_t S = inst.separator;
  EXPECT_EQ(S, 30u);
  EXPECT_EQ(inst.word.size(), 5 + 3 * 2 * S * S);
  EXPECT_EQ(inst.pattern.size(), 3 * (1 + 2 * S * S));
  EXPECT_GE(S, 6 * inst.delta);
  // Every block is ($^S #^S)^S.
  std::size_t pos = 2;
  for (std::size_t r = 0; r < S; ++r) {
    for (std::size_t i = 0; i < S; ++i) EXPECT_EQ(inst.word[pos++], kDollar);
    for (std::size_t i = 0; i < S; ++i) EXPECT_EQ(inst.word[pos++], kHash);
  }
}

TEST(GenInstance, Errors) {
  EXPECT_THROW(gen_instance({{"012"}, 0, std::nullopt}), InvalidInput);
  EXPECT_THROW(gen_instance({{"01"}, 3, std::nullopt}), InvalidInput);
  EXPECT_THROW(gen_instance({{}, 0, std::nullopt}), InvalidInput);
}

TEST(Lemma, Examples) {
  const auto a = lemma1_check(4, 0, 4);
  EXPECT_EQ(a.dp_value, 0u);
  EXPECT_TRUE(a.agree);
  const auto b = lemma1_check(4, 1, 4);
  EXPECT_EQ(b.dp_value, 1u);
  EXPECT_EQ(b.formula_value, 1u);
  const auto c = lemma1_check(6, 1, 4);
  EXPECT_EQ(c.dp_value, 3u);
  EXPECT_TRUE(c.agree);
}

TEST(Lemma, HypothesisViolationsAreNamed) {
  const auto message = [](std::size_t S, std::size_t g, std::size_t l) -> std::string {
    try {
      lemma1_check(S, g, l);
    } catch (const InvalidInput& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message(4, 3, 4).find("2g <= S"), std::string::npos);
  EXPECT_NE(message(8, 2, 5).find("S/2 <= l - g"), std::string::npos);
  EXPECT_NE(message(4, 0, 5).find("l <= S"), std::string::npos);
}

TEST(ForwardCheck, Examples) {
  const auto zero = [&](const ReductionInstance& inst) { return Word{*inst.alphabet.find(U'0')}; };
  const auto same = gen_instance({{"0", "0"}, 0, std::nullopt});
  EXPECT_TRUE(forward_check(same, zero(same)));
  const auto one_edit = gen_instance({{"0", "1"}, 1, std::nullopt});
  EXPECT_TRUE(forward_check(one_edit, zero(one_edit)));
  const auto none = gen_instance({{"0", "1"}, 0, std::nullopt});
  EXPECT_FALSE(forward_check(none, zero(none)));
}

TEST(ForwardCheck, MedianWithinBudgetIsAccepted) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    ReductionParams params;
    const std::size_t k = 1 + rng() % 2;
    std::size_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::string s;
      for (std::size_t j = rng() % 3; j > 0; --j) s.push_back(rng() % 2 ? '1' : '0');
      total += s.size();
      params.strings.push_back(s);
    }
    params.delta = total == 0 ? 0 : rng() % (total + 1);
    const auto inst = gen_instance(params);
    const auto m = median(inst.strings);
    if (m.cost <= params.delta) EXPECT_TRUE(forward_check(inst, m.median));
  }
}

}  // namespace
}  // namespace pvm
