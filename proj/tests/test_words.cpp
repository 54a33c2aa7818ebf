#include <gtest/gtest.h>

#include "mmt/words.hpp"
#include "mmt/numbers.hpp"
#include "oracles.hpp"

using namespace mmt;

TEST(Words, ParamsRejectOutOfRange) {
  EXPECT_THROW(AlgebraParams(3, 1), std::invalid_argument);
  EXPECT_THROW(AlgebraParams(3, 4), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraParams(2, 2));
}

TEST(Words, ParseAndPrint) {
  EXPECT_EQ(parse_word("4,3,2,6,1"), (Word{4, 3, 2, 6, 1}));
  EXPECT_EQ(to_string(Word{4, 3, 2, 6, 1}), "4,3,2,6,1");
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_THROW(parse_word("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_word("1,x"), std::invalid_argument);
}

TEST(Words, IsAdmissibleExamples) {
  EXPECT_TRUE(is_admissible(Word{1, 2, 3}, AlgebraParams(3, 2)));
  EXPECT_FALSE(is_admissible(Word{4, 3, 2, 6, 1}, AlgebraParams(6, 3)));
  EXPECT_TRUE(is_admissible(Word{2, 1, 2, 1}, AlgebraParams(3, 3)));
  EXPECT_TRUE(is_admissible(Word{}, AlgebraParams(3, 3)));
  EXPECT_TRUE(is_admissible(Word{3, 2}, AlgebraParams(3, 3)));
}

TEST(Words, IsAdmissibleRejectsBadLetters) {
  EXPECT_THROW(is_admissible(Word{1, 4}, AlgebraParams(3, 2)), std::invalid_argument);
}

TEST(Words, InversionExamples) {
  EXPECT_EQ(inversions(Word{4, 3, 2, 6, 1}), 7u);
  EXPECT_EQ(inversions(Word{4, 6, 3, 2, 1}), 9u);
  EXPECT_EQ(inversions(Word{1, 2, 3}), 0u);
}

TEST(Words, SmallestDecreasingRun) {
  // 0-based: position 1 is the block (6,3,2).
  EXPECT_EQ(smallest_decreasing_run(Word{4, 6, 3, 2, 1}, AlgebraParams(6, 3)), std::optional<std::size_t>(1));
  EXPECT_EQ(smallest_decreasing_run(Word{1, 2, 3}, AlgebraParams(3, 2)), std::nullopt);
  const Word w{3, 2, 1, 3, 2, 1};
  auto expected = oracle::first_window(w, 3);
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(*expected, 0u);
  EXPECT_EQ(smallest_decreasing_run(w, AlgebraParams(3, 3)), expected);
  EXPECT_EQ(largest_decreasing_run(w, AlgebraParams(3, 3)), std::optional<std::size_t>(3));
}

TEST(Words, EnumerateExamples) {
  auto pairs = enumerate_admissible(AlgebraParams(3, 2), 2);
  EXPECT_EQ(pairs, oracle::admissible_by_filter(3, 2, 2));
  EXPECT_EQ(pairs, (std::vector<Word>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}));

  auto triples = enumerate_admissible(AlgebraParams(3, 3), 3);
  EXPECT_EQ(triples.size(), 26u);
  EXPECT_EQ(triples, oracle::admissible_by_filter(3, 3, 3));
  EXPECT_EQ(std::find(triples.begin(), triples.end(), Word{3, 2, 1}), triples.end());

  auto empty = enumerate_admissible(AlgebraParams(4, 3), 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
}

TEST(Words, WeakVariantMatchesFilter) {
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= m; ++k)
      for (std::size_t len = 0; len <= 5; ++len)
        EXPECT_EQ(enumerate_admissible(AlgebraParams(m, k), len, Variant::weak),
                  oracle::admissible_by_filter(m, k, len, Variant::weak))
            << m << "," << k << "," << len;
}

// Properties

TEST(WordsProperty, AdmissibleIffNoRun) {
  oracle::Gen gen(11);
  for (int n = 0; n < 2000; ++n) {
    int m = gen.integer(2, 5);
    int k = gen.integer(2, m);
    Word w = gen.word(m, static_cast<std::size_t>(gen.integer(0, 9)));
    AlgebraParams p(m, k);
    EXPECT_EQ(is_admissible(w, p), !smallest_decreasing_run(w, p).has_value());
    EXPECT_EQ(is_admissible(w, p), oracle::admissible_by_windows(w, k));
    EXPECT_EQ(smallest_decreasing_run(w, p), oracle::first_window(w, k));
  }
}

TEST(WordsProperty, SuffixClosure) {
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= m; ++k) {
      AlgebraParams p(m, k);
      for_each_admissible(p, 6, Variant::strict, [&](const Word& w) {
        for (std::size_t s = 0; s <= w.size(); ++s) ASSERT_TRUE(is_admissible(w.suffix(s), p));
      });
    }
}

TEST(WordsProperty, CountAtLengthK) {
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= m; ++k) {
      auto brute = oracle::admissible_by_filter(m, k, static_cast<std::size_t>(k)).size();
      Integer expected = power(m, static_cast<unsigned long>(k)) - binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      EXPECT_EQ(Integer(static_cast<unsigned long>(brute)), expected);
      EXPECT_EQ(enumerate_admissible(AlgebraParams(m, k), static_cast<std::size_t>(k)).size(), brute);
    }
}

TEST(WordsProperty, DecreasingWordInversions) {
  for (int n = 0; n <= 12; ++n) {
    Word w;
    for (int x = n; x >= 1; --x) w.push_back(x);
    EXPECT_EQ(inversions(w), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(WordsProperty, EnumerationIsLexicographicAndUnique) {
  auto words = enumerate_admissible(AlgebraParams(4, 3), 5);
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  EXPECT_EQ(std::adjacent_find(words.begin(), words.end()), words.end());
}
