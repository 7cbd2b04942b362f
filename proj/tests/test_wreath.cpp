#include <gtest/gtest.h>

#include "palwidth/literals.hpp"
#include "palwidth/oracle/lamplighter.hpp"
#include "palwidth/random.hpp"
#include "palwidth/verify.hpp"
#include "palwidth/widthsearch.hpp"
#include "palwidth/wreath.hpp"

using namespace palwidth;

namespace {

Word ab(const char* text) { return parse(text, alphabet_ab()); }

WreathElement ev(const char* text) { return wr_eval(ab(text)); }

}  // namespace

TEST(SupportVector, DropsZeros) {
  SupportVector f{{0, 1}, {2, 0}};
  EXPECT_EQ(f.size(), 1u);
  f.add(0, -1);
  EXPECT_TRUE(f.empty());
}

TEST(WrShift, Examples) {
  EXPECT_EQ(wr_shift(SupportVector{{0, 1}}, 1), (SupportVector{{1, 1}}));
  const SupportVector f{{-1, 2}, {3, -1}};
  EXPECT_EQ(wr_shift(f, 0), f);
  EXPECT_EQ(wr_shift(f, -3), (SupportVector{{-4, 2}, {0, -1}}));
}

TEST(WrEval, Examples) {
  EXPECT_EQ(ev("a"), (WreathElement{{{0, 1}}, 0}));
  EXPECT_EQ(ev("b^3"), (WreathElement{{}, 3}));
  EXPECT_EQ(ev("B a b"), (WreathElement{{{1, 1}}, 0}));
  EXPECT_EQ(ev("B A b a"), (WreathElement{{{0, 1}, {1, -1}}, 0}));
  EXPECT_THROW(wr_eval(parse("t", alphabet_at())), AlphabetError);
}

TEST(WrMul, Examples) {
  const WreathElement g{{{-1, 2}, {0, -2}}, 3};
  EXPECT_EQ(wr_mul(wr_identity(), g), g);
  EXPECT_EQ(wr_mul(ev("a"), ev("b")), ev("ab"));
  EXPECT_EQ(wr_mul(wr_inv(g), g), wr_identity());
  EXPECT_EQ(wr_mul(g, wr_inv(g)), wr_identity());
}

TEST(WrMul, OverflowIsReported) {
  const WreathElement big{{{0, std::numeric_limits<std::int64_t>::max()}}, 0};
  EXPECT_THROW(wr_mul(big, big), OverflowError);
}

TEST(WrLog, Examples) {
  EXPECT_EQ(wr_log({}), 0);
  EXPECT_EQ(wr_log(SupportVector{{0, -1}, {1, 1}}), 0);
  EXPECT_EQ(wr_log(SupportVector{{2, 5}, {-1, -2}}), 3);
}

TEST(InDerived, Examples) {
  EXPECT_TRUE(in_derived(wr_identity()));
  EXPECT_TRUE(in_derived({{{0, -1}, {1, 1}}, 0}));
  EXPECT_FALSE(in_derived(wr_b()));
  EXPECT_FALSE(in_derived(wr_a()));
}

TEST(CommutatorWitness, Examples) {
  EXPECT_EQ(commutator_witness({{{0, -1}, {1, 1}}, 0}), (SupportVector{{0, 1}}));
  EXPECT_TRUE(commutator_witness(wr_identity()).empty());
  const SupportVector f = commutator_witness({{{-2, 1}, {0, -2}, {3, 1}}, 0});
  EXPECT_EQ(f, (SupportVector{{-2, -1}, {-1, -1}, {0, 1}, {1, 1}, {2, 1}}));
  EXPECT_THROW(commutator_witness(wr_b()), PreconditionError);
  EXPECT_THROW(commutator_witness(wr_a()), PreconditionError);
}

TEST(CommutatorWitness, GroupLawCheck) {
  // [f, b] = f^-1 b^-1 f b through wr_mul, not through commutator_with_b.
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const WreathElement c = verify::random_derived(rng, -6, 6, 6);
    const WreathElement f{commutator_witness(c), 0};
    const WreathElement comm = wr_mul(wr_mul(wr_inv(f), wr_inv(wr_b())), wr_mul(f, wr_b()));
    ASSERT_EQ(comm, c) << verify::describe(c);
    if (!c.tail.empty() && !f.tail.empty()) {
      ASSERT_GE(f.tail.min_index(), c.tail.min_index());
      ASSERT_LE(f.tail.max_index(), c.tail.max_index() - 1);
    }
  }
}

TEST(Render, WalksSupportLeftToRight) {
  Word w = render(SupportVector{{-1, 2}, {1, -1}});
  EXPECT_EQ(format(w), "b a^2 b^-2 a^-1 b");
  EXPECT_EQ(wr_eval(w), (WreathElement{{{-1, 2}, {1, -1}}, 0}));
  EXPECT_TRUE(render(SupportVector{}).empty());
}

TEST(ThreePal, Examples) {
  const auto b = three_pal_decomposition(wr_b());
  ASSERT_EQ(b.length(), 1u);
  EXPECT_EQ(format(b.factors[0]), "b");

  const auto d = three_pal_decomposition(ev("ab"));
  EXPECT_LE(d.length(), 3u);
  EXPECT_TRUE(validate(d, [](const Word& w) { return wr_eval(w); }).valid);

  const WreathElement g{{{-1, 2}, {0, -2}}, 3};
  const auto e = three_pal_decomposition(g);
  EXPECT_LE(e.length(), 3u);
  EXPECT_TRUE(validate(e, [](const Word& w) { return wr_eval(w); }).valid);

  EXPECT_EQ(three_pal_decomposition(wr_identity()).length(), 0u);
  EXPECT_EQ(three_pal_decomposition({{{0, -4}}, 0}).length(), 1u);
}

TEST(ThreePal, LiteralVariantNeedsLogZero) {
  // The uncorrected placement of a^k only works for elements of log 0.
  const auto eval = [](const Word& w) { return wr_eval(w); };
  const WreathElement log_zero{{{0, 1}, {2, -1}}, 1};
  EXPECT_TRUE(validate(three_pal_candidate(log_zero, ThreePalVariant::literal), eval).valid);
  const WreathElement log_one{{{1, 1}}, 2};
  EXPECT_FALSE(validate(three_pal_candidate(log_one, ThreePalVariant::literal), eval).valid);
  EXPECT_TRUE(validate(three_pal_candidate(log_one, ThreePalVariant::corrected), eval).valid);
}

TEST(ThreePal, RandomElementsAgainstLamplighter) {
  Rng rng(32);
  for (int i = 0; i < 2000; ++i) {
    const WreathElement g = verify::random_wreath(rng, 5, 5, 5);
    const auto d = three_pal_decomposition(g);
    ASSERT_LE(d.length(), 3u);
    for (const Word& f : d.factors) ASSERT_TRUE(is_palindrome(f));
    ASSERT_TRUE(verify::lamp_match(g, oracle::lamplighter_walk(d.product()))) << verify::describe(g);
  }
}

TEST(Forms, Examples) {
  const auto aba = classify_palindrome_form(ev("aba"));
  EXPECT_EQ(aba.kind, PalindromeForm::Kind::b_form);  // shift 1
  ASSERT_TRUE(aba.palindrome);
  EXPECT_EQ(wr_eval(*aba.palindrome), ev("aba"));

  const auto bab = classify_palindrome_form(ev("bab"));
  EXPECT_EQ(bab.kind, PalindromeForm::Kind::a_form);
  EXPECT_EQ(bab.k, 1);
  EXPECT_EQ(bab.l, 1);

  EXPECT_EQ(classify_palindrome_form(ev("ab")).kind, PalindromeForm::Kind::neither);
  EXPECT_EQ(classify_palindrome_form_literal(ev("ab")).kind, PalindromeForm::Kind::neither);
  EXPECT_EQ(classify_palindrome_form(wr_identity()).kind, PalindromeForm::Kind::a_form);
}

TEST(Forms, AbIsNotAPalindromeImage) {
  bool found = false;
  const WreathElement target = ev("ab");
  for_each_palindrome(alphabet_ab(), 10, [&](const Word& p) { found = found || wr_eval(p) == target; });
  EXPECT_FALSE(found);
}

TEST(Forms, EveryShortPalindromeClassifies) {
  for_each_palindrome(alphabet_ab(), 10, [&](const Word& p) {
    const auto form = classify_palindrome_form(wr_eval(p));
    ASSERT_NE(form.kind, PalindromeForm::Kind::neither) << format(p);
    ASSERT_TRUE(form.palindrome && wr_eval(*form.palindrome) == wr_eval(p));
  });
}

TEST(Forms, ClassifierMatchesEnumerationInABox) {
  // Small elements: anything reached by a palindrome of length <= 14 must classify.
  std::unordered_map<std::string, bool> reached;
  WreathGroup group;
  for_each_palindrome(alphabet_ab(), 14, [&](const Word& p) { reached[group.encode(wr_eval(p))] = true; });
  Rng rng(33);
  for (int i = 0; i < 3000; ++i) {
    WreathElement g{verify::random_support(rng, -2, 0, 1), rng.uniform(-2, 2)};
    const auto form = classify_palindrome_form(g);
    if (form.kind != PalindromeForm::Kind::neither) {
      ASSERT_TRUE(form.palindrome && is_palindrome(*form.palindrome) && wr_eval(*form.palindrome) == g);
    } else {
      ASSERT_FALSE(reached.contains(group.encode(g))) << verify::describe(g);
    }
  }
}

TEST(Forms, LiteralClassifierDisagreesWithPalindromeImages) {
  // B a b^5 a B is a palindrome, but its image is not of either literal form.
  const Word p = ab("B a b^5 a B");
  ASSERT_TRUE(is_palindrome(p));
  EXPECT_EQ(wr_eval(p), (WreathElement{{{1, 1}, {-4, 1}}, 3}));
  EXPECT_EQ(classify_palindrome_form_literal(wr_eval(p)).kind, PalindromeForm::Kind::neither);
  EXPECT_NE(classify_palindrome_form(wr_eval(p)).kind, PalindromeForm::Kind::neither);
}

TEST(Forms, LiteralFormsReproduceTheirElements) {
  Rng rng(34);
  for (int i = 0; i < 2000; ++i) {
    const WreathElement g = verify::random_wreath(rng, 3, 3, 4);
    const auto form = classify_palindrome_form_literal(g);
    if (form.kind != PalindromeForm::Kind::neither) {
      ASSERT_EQ(literal_form_element(form), g);
    }
  }
}

TEST(Properties, HomomorphismAndConjugation) {
  Rng rng(35);
  for (int i = 0; i < 3000; ++i) {
    const Word u = rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 20)));
    const Word v = rng.random_word(alphabet_ab(), static_cast<std::size_t>(rng.uniform(0, 20)));
    ASSERT_EQ(wr_eval(u * v), wr_mul(wr_eval(u), wr_eval(v)));
    ASSERT_TRUE(verify::lamp_match(wr_eval(u), oracle::lamplighter_walk(u))) << format(u);

    const SupportVector f = verify::random_support(rng, -4, 4, 3);
    const std::int64_t k = rng.uniform(-4, 4);
    const Word w = render(f);
    const Word conj = generator_power(alphabet_ab(), 'b', -k) * w * generator_power(alphabet_ab(), 'b', k);
    ASSERT_EQ(wr_eval(conj), (WreathElement{wr_shift(f, k), 0}));
  }
}

TEST(Literal, JsonRoundTrip) {
  const WreathElement g = parse_wreath_literal(R"({"support": {"-1": 2, "0": -2}, "shift": 3})");
  EXPECT_EQ(g, (WreathElement{{{-1, 2}, {0, -2}}, 3}));
  EXPECT_EQ(wreath_from_json(to_json(g)), g);
  EXPECT_EQ(parse_wreath_literal(R"({"support":{},"shift":1})"), wr_b());
  EXPECT_THROW(parse_wreath_literal(R"({"support":{"x":1},"shift":0})"), ParseError);
  EXPECT_THROW(parse_wreath_literal(R"({"support":{"0":0}})"), ParseError);
  EXPECT_THROW(parse_wreath_literal(R"({"support":{"0":1.5}})"), ParseError);
  EXPECT_THROW(parse_wreath_literal(R"({"shift":1,"extra":2})"), ParseError);
  EXPECT_THROW(parse_wreath_literal("{"), ParseError);
}
