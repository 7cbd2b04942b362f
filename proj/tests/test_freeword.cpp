#include <gtest/gtest.h>

#include "palwidth/freeword.hpp"
#include "palwidth/oracle/free_reduce.hpp"
#include "palwidth/random.hpp"

using namespace palwidth;

namespace {

Word ab(const char* text) { return parse(text, alphabet_ab()); }

std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST(Reduce, CancelsInversePair) { EXPECT_TRUE(ab("a A").empty()); }

TEST(Reduce, CancelsInnerPair) {
  const std::vector<Letter> raw{{0, false}, {1, false}, {1, true}, {0, false}};
  EXPECT_EQ(reduce(raw, alphabet_ab()), ab("a a"));
}

TEST(Reduce, KeepsReducedWord) { EXPECT_EQ(format(ab("a b A")), "a b a^-1"); }

TEST(Reduce, CascadingCancellation) {
  const std::vector<Letter> raw{{0, false}, {1, false}, {0, false}, {0, true}, {1, true}, {0, true}};
  EXPECT_TRUE(reduce(raw, alphabet_ab()).empty());
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(ab("a B")), ab("B a"));
  EXPECT_TRUE(reverse(Word(alphabet_ab())).empty());
  EXPECT_EQ(reverse(ab("aba")), ab("aba"));
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(ab("ab")), ab("B A"));
  EXPECT_TRUE(invert(Word(alphabet_ab())).empty());
  EXPECT_EQ(invert(ab("A")), ab("a"));
}

TEST(IsPalindrome, Examples) {
  EXPECT_TRUE(is_palindrome(ab("aba")));
  EXPECT_FALSE(is_palindrome(ab("ab")));
  EXPECT_TRUE(is_palindrome(ab("A b A")));
  EXPECT_FALSE(is_palindrome(ab("a b a^-1")));
  EXPECT_TRUE(is_palindrome(Word(alphabet_ab())));
}

TEST(Parse, GrammarExamples) {
  EXPECT_EQ(format(ab("a^2 B")), "a^2 b^-1");
  EXPECT_TRUE(ab("a A").empty());
  EXPECT_EQ(format(parse("t^-1 a t", alphabet_at())), "t^-1 a t");
  EXPECT_EQ(ab("aBab"), ab("a b^-1 a b"));
  EXPECT_EQ(ab("a^3 b^-2").size(), 5u);
  EXPECT_EQ(ab("A^2"), ab("a^-2"));
  EXPECT_EQ(ab("b^+2"), ab("bb"));
  EXPECT_EQ(ab("a^0"), Word(alphabet_ab()));
  EXPECT_EQ(ab("b⁻¹ a"), ab("B a"));
}

TEST(Parse, ReportsPosition) {
  try {
    parse("a b ^", alphabet_ab());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse("a t", alphabet_ab());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse("a^", alphabet_ab()), ParseError);
  EXPECT_THROW(parse("a^-", alphabet_ab()), ParseError);
  EXPECT_THROW(parse("a*b", alphabet_ab()), ParseError);
  EXPECT_THROW(parse("1", alphabet_ab()), ParseError);
  EXPECT_THROW(parse("a^99999999999999999999", alphabet_ab()), ParseError);
  EXPECT_THROW(parse("a^100000000", alphabet_ab()), ParseError);
}

TEST(Format, CanonicalRuns) {
  EXPECT_EQ(format(ab("")), "");
  EXPECT_EQ(format(ab("A")), "a^-1");
  EXPECT_EQ(format(ab("aab BB a")), "a^2 b^-1 a");
}

TEST(Alphabet, SeparateContexts) {
  const Word w = ab("ab");
  const Word v = parse("at", alphabet_at());
  EXPECT_THROW(w * v, AlphabetError);
  EXPECT_FALSE(w == v);
  EXPECT_THROW(Alphabet("aa"), Error);
  EXPECT_THROW(Alphabet("aB"), Error);
}

TEST(Shortlex, GeneratorOrder) {
  // a < A < b < B, shorter words first
  EXPECT_LT(ab("a"), ab("A"));
  EXPECT_LT(ab("A"), ab("b"));
  EXPECT_LT(ab("b"), ab("B"));
  EXPECT_LT(ab("B"), ab("aa"));
}

TEST(Power, PalindromePowers) {
  EXPECT_EQ(power(ab("aba"), 2), ab("abaaba"));
  EXPECT_EQ(power(ab("a"), -3), ab("AAA"));
  EXPECT_TRUE(power(ab("ab"), 0).empty());
}

TEST(Properties, AgreeWithNaiveReduction) {
  Rng rng(11);
  const Alphabet abc{"abc"};
  const auto letters = abc.letters();
  for (int i = 0; i < 2000; ++i) {
    std::vector<Letter> raw;
    const auto len = rng.uniform(0, 40);
    for (int j = 0; j < len; ++j) raw.push_back(letters[static_cast<std::size_t>(rng.uniform(0, 5))]);
    const Word w = reduce(raw, abc);
    ASSERT_EQ(letters_of(w), oracle::naive_reduce(raw));
    ASSERT_EQ(reduce(w.letters(), abc), w);
    ASSERT_EQ(reverse(reverse(w)), w);
    ASSERT_EQ(invert(invert(w)), w);
    ASSERT_EQ(invert(reverse(w)), reverse(invert(w)));
    ASSERT_TRUE((w * invert(w)).empty());
    ASSERT_EQ(parse(format(w), abc), w);
  }
}

TEST(Properties, SymmetricSequencesReduceToPalindromes) {
  Rng rng(12);
  const auto letters = alphabet_ab().letters();
  for (int i = 0; i < 5000; ++i) {
    std::vector<Letter> half;
    const auto len = rng.uniform(0, 12);
    for (int j = 0; j < len; ++j) half.push_back(letters[static_cast<std::size_t>(rng.uniform(0, 3))]);
    std::vector<Letter> sym(half);
    if (rng.coin()) sym.push_back(letters[static_cast<std::size_t>(rng.uniform(0, 3))]);
    sym.insert(sym.end(), half.rbegin(), half.rend());
    ASSERT_TRUE(is_palindrome(reduce(sym, alphabet_ab())));
  }
}

TEST(Properties, PalindromePowersStayPalindromes) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const Word p = rng.palindrome(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 9)));
    ASSERT_TRUE(is_palindrome(p));
    ASSERT_TRUE(is_palindrome(power(p, rng.uniform(-5, 5)))) << format(p);
  }
}
