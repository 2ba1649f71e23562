#include <gtest/gtest.h>

#include "quantnli/segmenter.h"

namespace quantnli {
namespace {

const LexiconSet &Lex() { return LexiconSet::Default(); }

Interval Norm(std::string_view text) {
  auto v = NormalizeNumber(text, Lex());
  EXPECT_TRUE(v) << text;
  return v ? *v : Interval::Point(-999);
}

std::vector<std::string> MentionTexts(std::string_view s) {
  std::vector<std::string> out;
  for (const auto &m : Segment(s, Lex())) out.push_back(m.span.text);
  return out;
}

TEST(Normalize, WrittenNumbers) {
  EXPECT_EQ(Norm("hundred fifty eight thousand"), Interval::Point(158000));
  EXPECT_EQ(Norm("two fifty eight"), Interval::Point(258));
  EXPECT_EQ(Norm("twenty-one"), Interval::Point(21));
  EXPECT_EQ(Norm("a dozen"), Interval::Point(12));
  EXPECT_EQ(Norm("three hundred and five"), Interval::Point(305));
  EXPECT_EQ(Norm("Eight"), Interval::Point(8));
}

TEST(Normalize, DigitsAndSuffixes) {
  EXPECT_EQ(Norm("1,000"), Interval::Point(1000));
  EXPECT_EQ(Norm("374m"), Interval::Point(374000000));
  EXPECT_EQ(Norm("$4.5bn"), Interval::Point(4500000000));
  EXPECT_EQ(Norm("7 billion"), Interval::Point(7000000000));
  EXPECT_EQ(Norm("73.0"), Interval::Point(73));
}

TEST(Normalize, RangesAndBounds) {
  EXPECT_EQ(Norm("between 20 and 30 people"), Interval::Closed(20, 30));
  EXPECT_EQ(Norm("20 to 30"), Interval::Closed(20, 30));
  EXPECT_EQ(Norm("fewer than 10"), Interval::Below(10, true));
  EXPECT_EQ(Norm("less than 700 men"), Interval::Below(700, true));
  EXPECT_EQ(Norm("more than 5"), Interval::Above(5, true));
  EXPECT_EQ(Norm("at least 5"), Interval::Above(5, false));
  EXPECT_EQ(Norm("up to 30"), Interval::Below(30, false));
  EXPECT_EQ(Norm("no more than 4"), Interval::Below(4, false));
}

TEST(Normalize, RatiosAndPercent) {
  EXPECT_EQ(Norm("half"), Interval::Point(Rational(1, 2)));
  EXPECT_EQ(Norm("a quarter"), Interval::Point(Rational(1, 4)));
  EXPECT_EQ(Norm("1 in 4"), Interval::Point(Rational(1, 4)));
  auto d = NormalizeNumberDetailed(Tokenize("25 per cent"), Lex());
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->percent);
  EXPECT_EQ(d->value, Interval::Point(25));
}

TEST(Normalize, NoNumber) {
  EXPECT_FALSE(NormalizeNumber("the mat", Lex()));
}

TEST(Segment, SalesExample) {
  auto ms = Segment("Teva will generate sales of about $ 7 billion a year", Lex());
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].span.text, "about $ 7 billion");
  EXPECT_EQ(ms[0].raw_value, Interval::Point(7000000000));
}

TEST(Segment, NoCardinals) { EXPECT_TRUE(Segment("The cat sat on the mat", Lex()).empty()); }

TEST(Segment, Ages) {
  EXPECT_EQ(MentionTexts("Emmanuel Miller, 16, and Zachary Watson, 17"),
            (std::vector<std::string>{"16", "17"}));
}

TEST(Segment, RangeIsOneMention) {
  auto ms = Segment("Between 20 and 30 people were trapped in the mine", Lex());
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(ms[0].range_marker);
  EXPECT_EQ(ms[0].raw_value, Interval::Closed(20, 30));
}

TEST(Segment, BoundMarker) {
  auto ms = Segment("Less than 700 men attended", Lex());
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].bound_marker, BoundMarker::kLessThan);
}

TEST(Segment, FluxDoesNotMakeARange) {
  auto ms = Segment("Profit rose 12% to $4.5bn", Lex());
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].raw_value, Interval::Point(12));
  EXPECT_TRUE(ms[0].percent);
  EXPECT_EQ(ms[1].raw_value, Interval::Point(4500000000));
}

TEST(Segment, TemporalExpressionsAreSkipped) {
  EXPECT_TRUE(Segment("The war ended in 1945.", Lex()).empty());
  EXPECT_TRUE(Segment("We met at 10:30 am on May 5", Lex()).empty());
  EXPECT_TRUE(Segment("In the 1990s prices fell", Lex()).empty());
  EXPECT_EQ(MentionTexts("He paid $ 2000 for it"), (std::vector<std::string>{"$ 2000"}));
}

TEST(Segment, YearLikeNumberWithNounIsKept) {
  auto ms = Segment("1917 soldiers died", Lex());
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].raw_value, Interval::Point(1917));
}

TEST(Segment, OneAsPronounIsSkipped) {
  EXPECT_TRUE(Segment("No one was hurt", Lex()).empty());
}

TEST(Segment, MentionsDoNotOverlapAndKeepOrder) {
  auto ms = Segment("He had 3 apples, ate 1 and gave away two more to 4 friends", Lex());
  ASSERT_EQ(ms.size(), 4u);
  for (size_t k = 1; k < ms.size(); ++k) {
    EXPECT_LE(ms[k - 1].token_end, ms[k].token_begin);
    EXPECT_LE(ms[k - 1].span.end, ms[k].span.begin);
  }
}

const char *kSentences[] = {
    "Teva will generate sales of about $ 7 billion a year",
    "Emmanuel Miller, 16, and Zachary Watson, 17",
    "Between 20 and 30 people were trapped in the mine",
    "Farmer Cunningham has 6048 lambs. 193 are white.",
    "Some 1900 soldiers were killed in 1917 near the border",
    "Profit rose 12% to $4.5bn in 2011",
    "The storm killed 79 people on March 3",
    "Turnout was 25 per cent, or 1 in 4 Londoners",
    "At 9:45 pm, 3 trains left with 1,200 passengers",
    "There were more than 50 reports between 2001 and 2005",
    "Roughly half of the 374m users are over 30",
    "Eight suspects, two of them women, were held",
};

TEST(SegmentProperty, EveryDigitTokenIsCoveredOrTemporal) {
  for (const char *s : kSentences) {
    auto toks = Tokenize(s);
    auto temporal = TemporalMask(toks);
    auto ms = Segment(toks, s, Lex());
    for (size_t i = 0; i < toks.size(); ++i) {
      if (!toks[i].HasDigit() || temporal[i]) continue;
      bool covered = false;
      for (const auto &m : ms) covered |= i >= m.token_begin && i < m.token_end;
      EXPECT_TRUE(covered) << s << " token " << toks[i].text;
    }
  }
}

TEST(SegmentProperty, RawValueRoundTrips) {
  for (const char *s : kSentences) {
    for (const auto &m : Segment(s, Lex())) {
      EXPECT_FALSE(m.cardinal_positions.empty());
      auto v = NormalizeNumber(m.tokens, Lex());
      ASSERT_TRUE(v) << m.span.text;
      EXPECT_EQ(*v, m.raw_value) << m.span.text;
      if (!m.bound_marker) EXPECT_TRUE(m.raw_value.IsBounded()) << m.span.text;
    }
  }
}

TEST(SegmentProperty, Deterministic) {
  for (const char *s : kSentences) EXPECT_EQ(MentionTexts(s), MentionTexts(s));
}

}  // namespace
}  // namespace quantnli
