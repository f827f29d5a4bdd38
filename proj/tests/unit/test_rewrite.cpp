#include <gtest/gtest.h>

#include <random>

#include "srsdual/confluence.hpp"
#include "srsdual/error.hpp"
#include "srsdual/rewrite.hpp"
#include "support.hpp"

using namespace srsdual;
using support::fmt;
using support::w;

TEST(Normalize, Examples) {
  auto r = parse_srs("b a a -> b a");
  EXPECT_EQ(fmt(r, normalize(r, w(r, "b a a"))), "b a");
  EXPECT_EQ(fmt(r, normalize(r, w(r, "b b a a"))), "b b a");
  EXPECT_EQ(fmt(r, normalize(r, w(r, "a b"))), "a b");
}

TEST(Normalize, LeftmostRedexWithRuleOrderTieBreak) {
  auto r = parse_srs("a b -> c\na -> d");
  auto red = leftmost_redex(r, w(r, "a b"));
  ASSERT_TRUE(red);
  EXPECT_EQ(red->position, 0u);
  EXPECT_EQ(red->rule, 0u);
  EXPECT_EQ(fmt(r, normalize(r, w(r, "a b"))), "c");
}

TEST(Normalize, FuelExhaustionIsAnError) {
  auto r = parse_srs("a -> a a");
  try {
    normalize(r, w(r, "a"), 100);
    FAIL() << "expected fuel exhaustion";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FuelExhausted);
  }
}

TEST(Normalize, IrreducibilityExamples) {
  auto r = parse_srs("a b -> _");
  EXPECT_TRUE(is_irreducible(r, w(r, "b a")));
  EXPECT_FALSE(is_irreducible(r, w(r, "a a b")));
  EXPECT_TRUE(is_irreducible(parse_srs(""), Word{}));
}

TEST(Normalize, IdempotentAndBoundedOnLengthReducingSystems) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto s = support::random_length_reducing(rng);
    Word x = support::random_word(rng, 2, 10);
    std::size_t steps = 0;
    Word n = normalize(s, x, kDefaultFuel, steps);
    EXPECT_TRUE(is_irreducible(s, n));
    EXPECT_EQ(normalize(s, n), n);
    EXPECT_LE(steps, x.size());
  }
}

TEST(Normalize, ConvergentSystemsHaveOneNormalFormPerWord) {
  std::mt19937_64 rng(3);
  int convergent = 0;
  for (int i = 0; i < 400 && convergent < 60; ++i) {
    auto s = support::random_length_reducing(rng);
    if (!check_convergence(s).convergent()) continue;
    ++convergent;
    for (const auto& x : words_up_to(2, 6)) {
      auto forms = support::all_normal_forms(s, x);
      ASSERT_EQ(forms.size(), 1u) << format_srs(s) << fmt(s, x);
      EXPECT_EQ(*forms.begin(), normalize(s, x));
    }
  }
  EXPECT_GT(convergent, 10);
}

TEST(ReductionStack, AgreesWithNormalizeOnConvergentSystems) {
  std::mt19937_64 rng(8);
  int tested = 0;
  for (int i = 0; i < 400; ++i) {
    auto s = support::random_length_reducing(rng);
    if (!check_convergence(s).convergent()) continue;
    ++tested;
    StackNormalizer nf(s);
    for (int j = 0; j < 30; ++j) {
      Word x = support::random_word(rng, 2, 12), y = support::random_word(rng, 2, 6);
      EXPECT_EQ(nf(x), normalize(s, x));
      EXPECT_EQ(nf(x, y), normalize(s, x + y));
    }
  }
  EXPECT_GT(tested, 20);
}

TEST(ReductionStack, SnapshotRestore) {
  auto s = parse_srs("a b -> _");
  RedexMatcher m(s);
  ReductionStack st(s, m);
  st.push(w(s, "a a"));
  ReductionStack::Snapshot snap;
  st.save(snap);
  st.push(w(s, "b b"));
  EXPECT_TRUE(st.word().empty());
  st.restore(snap);
  EXPECT_EQ(fmt(s, st.word()), "a a");
}

TEST(RedexMatcher, ReportsLowestRuleEndingHere) {
  auto s = parse_srs("b a -> _\na -> b");
  RedexMatcher m(s);
  auto q = m.next(m.root(), s.alphabet.symbol("b"));
  EXPECT_EQ(m.rule_at(q), -1);
  q = m.next(q, s.alphabet.symbol("a"));
  EXPECT_EQ(m.rule_at(q), 0);
}

TEST(RewriteSuccessors, DistinctOneStepResults) {
  auto s = parse_srs("a -> b");
  auto next = rewrite_successors(s, w(s, "a a"));
  ASSERT_EQ(next.size(), 2u);
  EXPECT_EQ(fmt(s, next[0]), "b a");
  EXPECT_EQ(fmt(s, next[1]), "a b");
}
