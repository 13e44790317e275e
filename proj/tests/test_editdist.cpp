#include <gtest/gtest.h>

#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spellfix/editdist.hpp"
#include "spellfix/rng.hpp"

using namespace spellfix;
using spellfix::testing::dp_levenshtein;
using spellfix::testing::u;

namespace {

// Every string of length 0..max_len over `alphabet`.
std::vector<std::u32string> all_strings(const std::u32string& alphabet, std::size_t max_len) {
  std::vector<std::u32string> out{U""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char32_t c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

}  // namespace

TEST(Levenshtein, KnownValues) {
  EXPECT_EQ(levenshtein(u("خوان"), u("خامه")), 3u);
  EXPECT_EQ(levenshtein(U"kitten", U"sitting"), 3u);
  EXPECT_EQ(levenshtein(U"", U"abc"), 3u);
  EXPECT_EQ(levenshtein(U"abc", U""), 3u);
  EXPECT_EQ(levenshtein(U"flaw", U"lawn"), 2u);
  EXPECT_EQ(levenshtein(U"ab", U"ba"), 2u);
}

TEST(Levenshtein, IdentityIsZero) {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto x = spellfix::testing::random_word(rng, spellfix::testing::persian_letters(), 0, 12);
    EXPECT_EQ(levenshtein(x, x), 0u);
  }
}

TEST(Levenshtein, MatchesOracleExhaustively) {
  const auto strings = all_strings(U"abc", 5);
  ASSERT_EQ(strings.size(), 364u);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      ASSERT_EQ(levenshtein(a, b), dp_levenshtein(a, b)) << spellfix::testing::s8(a) << " "
                                                         << spellfix::testing::s8(b);
    }
  }
}

TEST(Levenshtein, MetricProperties) {
  Rng rng(2);
  const std::vector<char32_t> alpha{U'a', U'b', U'c', U'd'};
  for (int i = 0; i < 3000; ++i) {
    const auto a = spellfix::testing::random_word(rng, alpha, 0, 9);
    const auto b = spellfix::testing::random_word(rng, alpha, 0, 9);
    const auto c = spellfix::testing::random_word(rng, alpha, 0, 9);
    const auto ab = levenshtein(a, b);
    EXPECT_EQ(ab, levenshtein(b, a));
    EXPECT_LE(ab, levenshtein(a, c) + levenshtein(c, b));
    const std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    EXPECT_GE(ab, diff);
    EXPECT_LE(ab, std::max(a.size(), b.size()));
    EXPECT_EQ(ab == 0, a == b);
  }
}

TEST(WithinDistance, KnownValues) {
  EXPECT_FALSE(within_distance(u("خوان"), u("خامه"), 2));
  EXPECT_TRUE(within_distance(u("خوان"), u("خامه"), 3));
  EXPECT_TRUE(within_distance(U"x", U"x", 0));
  EXPECT_FALSE(within_distance(U"x", U"y", 0));
  EXPECT_TRUE(within_distance(U"", U"", 0));
}

TEST(WithinDistance, AgreesWithFullDistanceExhaustively) {
  const auto strings = all_strings(U"abc", 5);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      const auto d = dp_levenshtein(a, b);
      for (std::size_t k = 0; k <= 6; ++k) {
        ASSERT_EQ(within_distance(a, b, k), d <= k);
      }
    }
  }
}

TEST(WithinDistance, AgreesOnLongRandomPairs) {
  Rng rng(4);
  const std::vector<char32_t> alpha{U'a', U'b', U'c'};
  for (int i = 0; i < 2000; ++i) {
    const auto a = spellfix::testing::random_word(rng, alpha, 0, 30);
    const auto b = spellfix::testing::random_word(rng, alpha, 0, 30);
    const std::size_t k = rng.below(12);
    EXPECT_EQ(within_distance(a, b, k), dp_levenshtein(a, b) <= k);
  }
}

TEST(AdjacentTransposition, KnownValues) {
  EXPECT_TRUE(is_adjacent_transposition(u("بسته"), u("سبته")));
  EXPECT_FALSE(is_adjacent_transposition(U"ab", U"ab"));
  EXPECT_FALSE(is_adjacent_transposition(U"abcd", U"badc"));
  EXPECT_TRUE(is_adjacent_transposition(U"ab", U"ba"));
  EXPECT_FALSE(is_adjacent_transposition(U"abc", U"cba"));
  EXPECT_FALSE(is_adjacent_transposition(U"abc", U"ab"));
}

TEST(AdjacentTransposition, MatchesOracleAndBoundsDistance) {
  const auto strings = all_strings(U"abc", 4);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      const bool t = is_adjacent_transposition(a, b);
      ASSERT_EQ(t, spellfix::testing::oracle_swap(a, b));
      if (t) {
        EXPECT_LE(levenshtein(a, b), 2u);
        EXPECT_TRUE(is_adjacent_transposition(b, a));
      }
    }
  }
}

TEST(SingleSubstitution, FindsPosition) {
  EXPECT_EQ(single_substitution_position(U"abc", U"abd"), 2u);
  EXPECT_EQ(single_substitution_position(U"abc", U"abc"), std::u32string_view::npos);
  EXPECT_EQ(single_substitution_position(U"abc", U"xbd"), std::u32string_view::npos);
  EXPECT_EQ(single_substitution_position(U"abc", U"ab"), std::u32string_view::npos);
}
