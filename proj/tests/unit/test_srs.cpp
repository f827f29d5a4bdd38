#include <gtest/gtest.h>

#include <random>

#include "srsdual/error.hpp"
#include "srsdual/srs.hpp"
#include "support.hpp"

using namespace srsdual;
using support::fmt;
using support::w;

TEST(ParseSrs, TwoEraseRules) {
  auto s = parse_srs("s p -> _\np s -> _");
  ASSERT_EQ(s.rules.size(), 2u);
  EXPECT_EQ(fmt(s, s.rules[0].lhs), "s p");
  EXPECT_TRUE(s.rules[0].rhs.empty());
  EXPECT_EQ(fmt(s, s.rules[1].lhs), "p s");
}

TEST(ParseSrs, EmptyInputHasNoRules) {
  auto s = parse_srs("");
  EXPECT_TRUE(s.rules.empty());
  EXPECT_EQ(s.alphabet.size(), 0u);
}

TEST(ParseSrs, EmptyLhsIsRejected) {
  try {
    parse_srs("-> a");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyLhs);
  }
  EXPECT_THROW(parse_srs("_ -> a"), Error);
}

TEST(ParseSrs, SyntaxErrorsCarryLineNumbers) {
  try {
    parse_srs("a -> b\na b\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_srs("a -> b -> c"), Error);
}

TEST(ParseSrs, CommentsAndAlphabetLines) {
  auto s = parse_srs("# a leading comment\nalphabet: x y z\nx y -> z # trailing\n\n#1 x -> #1\n");
  ASSERT_EQ(s.rules.size(), 2u);
  EXPECT_EQ(s.alphabet.size(), 4u);
  EXPECT_EQ(s.alphabet.name(Symbol{0}), "x");
  EXPECT_EQ(fmt(s, s.rules[1].lhs), "#1 x");
}

TEST(Classify, PaperStyleExamples) {
  auto c1 = classify(parse_srs("a b c -> b a"));
  EXPECT_TRUE(c1.length_reducing);
  EXPECT_FALSE(c1.dwindling);
  EXPECT_FALSE(c1.monadic);
  auto c2 = classify(parse_srs("a b c -> a b"));
  EXPECT_TRUE(c2.dwindling);
  EXPECT_TRUE(c2.length_reducing);
  EXPECT_FALSE(c2.monadic);
  auto c3 = classify(parse_srs("a b c -> b"));
  EXPECT_TRUE(c3.monadic);
  EXPECT_TRUE(c3.length_reducing);
  EXPECT_FALSE(c3.dwindling);
  auto c4 = classify(parse_srs("a b -> _\nb a -> _"));
  EXPECT_TRUE(c4.special);
  EXPECT_TRUE(c4.monadic);
  EXPECT_TRUE(c4.inter_reduced);
  EXPECT_FALSE(classify(parse_srs("a b -> _\na b a -> a")).inter_reduced);
}

TEST(Classify, FlagImplicationsOnRandomSystems) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Srs s;
    s.alphabet = Alphabet{"a", "b"};
    for (int r = 0; r < 2; ++r)
      s.rules.push_back({support::random_nonempty_word(rng, 2, 3), support::random_word(rng, 2, 3)});
    auto c = classify(s);
    if (c.dwindling) {
      EXPECT_TRUE(c.length_reducing);
    }
    if (c.special) {
      EXPECT_TRUE(c.monadic);
    }
    bool prefixes = true;
    for (const auto& r : s.rules) prefixes = prefixes && r.rhs.size() < r.lhs.size() && r.lhs.starts_with(r.rhs);
    EXPECT_EQ(c.dwindling, prefixes);
  }
}

TEST(FormatSrs, RoundTripsRandomSystems) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Srs s;
    s.alphabet = Alphabet{"a", "b", "c'"};
    std::size_t n = rng() % 4;
    for (std::size_t r = 0; r < n; ++r)
      s.rules.push_back({support::random_nonempty_word(rng, 3, 3), support::random_word(rng, 3, 3)});
    auto text = format_srs(s);
    EXPECT_EQ(parse_srs(text), s) << text;
  }
}

TEST(Srs, ValidateRejectsForeignSymbols) {
  Srs s;
  s.alphabet = Alphabet{"a"};
  s.rules.push_back({Word::from_ids({0, 3}), Word{}});
  EXPECT_THROW(s.validate(), Error);
}
