#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "srsdual/automata.hpp"
#include "srsdual/error.hpp"
#include "support.hpp"

using namespace srsdual;

namespace {

const Symbol A{0}, B{1}, C{2};

Word word(std::initializer_list<Symbol> s) { return Word(s); }

std::set<Word> language(const Dfa& d, std::size_t max_len) {
  std::set<Word> out;
  for (const auto& x : words_up_to(d.alphabet_size, max_len))
    if (d.accepts(x)) out.insert(x);
  return out;
}

std::set<Word> language(const Mefa& d, std::size_t max_len) {
  std::set<Word> out;
  for (const auto& x : words_up_to(d.alphabet_size, max_len))
    if (d.accepts(x)) out.insert(x);
  return out;
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t k, std::size_t states) {
  Dfa d;
  d.alphabet_size = k;
  for (std::size_t q = 0; q < states; ++q) d.add_state(rng() % 3 == 0);
  for (std::size_t q = 0; q < states; ++q)
    for (std::uint32_t c = 0; c < k; ++c) d.set(static_cast<State>(q), Symbol{c}, static_cast<State>(rng() % states));
  return d;
}

// b*a* over {a, b}
Dfa ba_star() {
  Dfa d;
  d.alphabet_size = 2;
  auto q0 = d.add_state(true), q1 = d.add_state(true), dead = d.add_state(false);
  d.set(q0, B, q0);
  d.set(q0, A, q1);
  d.set(q1, A, q1);
  d.set(q1, B, dead);
  d.set(dead, A, dead);
  d.set(dead, B, dead);
  return d;
}

void expect_triple(const Dfa& m, const Dfa& n, const WitnessTriple& t) {
  EXPECT_NE(t.x, t.y);
  EXPECT_TRUE(m.accepts(t.x));
  EXPECT_TRUE(m.accepts(t.y));
  EXPECT_TRUE(n.accepts(t.x + t.z));
  EXPECT_TRUE(n.accepts(t.y + t.z));
}

}  // namespace

TEST(ConcatLetter, SingleWord) {
  auto m = Dfa::from_words(2, {Word{}});
  EXPECT_EQ(language(concat_letter(m, A), 4), (std::set<Word>{word({A})}));
}

TEST(ConcatLetter, MatchesSetConcatenation) {
  auto m = Dfa::from_words(2, {word({A}), word({B})});
  EXPECT_EQ(language(concat_letter(m, A), 4), (std::set<Word>{word({A, A}), word({B, A})}));
}

TEST(ConcatLetter, SharedSuccessorGetsOneNewState) {
  Dfa m;
  m.alphabet_size = 2;
  auto q0 = m.add_state(true), q1 = m.add_state(true), dead = m.add_state(false);
  m.set(q0, B, q1);
  m.set(q0, A, dead);
  m.set(q1, A, dead);
  m.set(q1, B, dead);
  m.set(dead, A, dead);
  m.set(dead, B, dead);
  auto out = concat_letter(m, A);
  EXPECT_LE(out.size(), m.size() + 1);
  EXPECT_EQ(out.accepting_count(), 1u);
  EXPECT_EQ(language(out, 4), (std::set<Word>{word({A}), word({B, A})}));
}

TEST(ConcatLetter, RandomAutomataAgainstNaiveConcatenation) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto m = random_dfa(rng, 2, 1 + rng() % 5);
    Symbol a{static_cast<std::uint32_t>(rng() % 2)};
    auto out = concat_letter(m, a);
    EXPECT_LE(out.size(), m.size() + m.accepting_count());
    for (const auto& x : words_up_to(2, 5)) {
      bool naive = !x.empty() && x[x.size() - 1] == a && m.accepts(x.prefix(x.size() - 1));
      EXPECT_EQ(out.accepts(x), naive);
    }
  }
}

TEST(ConcatLetter, ForeignLetterIsRejected) {
  EXPECT_THROW(concat_letter(Dfa::all_words(2), C), Error);
}

TEST(ConcatWord, EmptySuffixKeepsLanguage) {
  auto m = ba_star();
  EXPECT_EQ(language(concat_word(m, Word{}), 5), language(m, 5));
}

TEST(ConcatWord, Example) {
  auto m = Dfa::from_words(2, {Word{}, word({A})});
  EXPECT_EQ(language(concat_word(m, word({B, B})), 5), (std::set<Word>{word({B, B}), word({A, B, B})}));
}

TEST(IntersectDfa, Examples) {
  auto m = ba_star();
  EXPECT_EQ(language(intersect_dfa(m, Dfa::all_words(2)), 5), language(m, 5));
  // a*b*: same shape with the letters swapped.
  Dfa n;
  n.alphabet_size = 2;
  auto q0 = n.add_state(true), q1 = n.add_state(true), dead = n.add_state(false);
  n.set(q0, A, q0);
  n.set(q0, B, q1);
  n.set(q1, B, q1);
  n.set(q1, A, dead);
  n.set(dead, A, dead);
  n.set(dead, B, dead);
  auto both = intersect_dfa(m, n);
  for (const auto& x : words_up_to(2, 5)) {
    bool uniform = std::all_of(x.begin(), x.end(), [&](Symbol s) { return s == x[0]; });
    EXPECT_EQ(both.accepts(x), x.empty() || uniform);
  }
  auto none = intersect_dfa(Dfa::from_words(2, {word({A})}), Dfa::from_words(2, {word({B})}));
  EXPECT_FALSE(shortest_accepted(none));
}

TEST(LeftQuotient, Examples) {
  auto q1 = left_quotient_mefa(Dfa::from_words(2, {word({A, B})}), Dfa::from_words(2, {word({A})}));
  EXPECT_EQ(language(q1, 4), (std::set<Word>{word({B})}));
  auto q2 = left_quotient_mefa(ba_star(), Dfa::from_words(2, {word({B})}));
  EXPECT_EQ(language(q2, 5), language(ba_star(), 5));
  auto q3 = left_quotient_mefa(ba_star(), Dfa::empty_language(2));
  EXPECT_FALSE(shortest_accepted(q3));
}

TEST(LeftQuotient, RandomAutomataAgainstSampling) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    auto m2 = random_dfa(rng, 2, 1 + rng() % 4);
    auto m1 = random_dfa(rng, 2, 1 + rng() % 4);
    auto q = left_quotient_mefa(m2, m1);
    auto us = language(m1, 4);
    for (const auto& v : words_up_to(2, 4)) {
      bool sampled = std::any_of(us.begin(), us.end(), [&](const Word& u) { return m2.accepts(u + v); });
      if (sampled) {
        EXPECT_TRUE(q.accepts(v));
      }
    }
  }
}

TEST(MefaIntersection, Examples) {
  auto single = Mefa::from_dfa(Dfa::from_words(2, {word({A})}));
  EXPECT_EQ(mefa_intersect_witness(single, single), word({A}));
  auto l1 = Mefa::from_dfa(Dfa::from_words(2, {word({A}), word({B, A})}));
  auto l2 = Mefa::from_dfa(Dfa::from_words(2, {word({B, A}), word({B, B})}));
  EXPECT_EQ(mefa_intersect_witness(l1, l2), word({B, A}));
  auto l3 = Mefa::from_dfa(Dfa::from_words(2, {word({B})}));
  EXPECT_FALSE(mefa_intersect_witness(single, l3));
}

TEST(MefaIntersection, ShortestCommonWordOnRandomAutomata) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto a = Mefa::from_dfa(random_dfa(rng, 2, 1 + rng() % 4));
    auto b = Mefa::from_dfa(random_dfa(rng, 2, 1 + rng() % 4));
    std::optional<Word> brute;
    for (const auto& x : words_up_to(2, 5))
      if (a.accepts(x) && b.accepts(x)) {
        brute = x;
        break;
      }
    auto got = mefa_intersect_witness(a, b);
    if (brute) {
      ASSERT_TRUE(got);
      EXPECT_EQ(got->size(), brute->size());
      EXPECT_TRUE(a.accepts(*got) && b.accepts(*got));
    } else if (got) {
      EXPECT_GT(got->size(), 5u);
    }
  }
}

TEST(ExistsXyz, OrangePair) {
  auto m = Dfa::from_words(3, {word({A}), word({B})});
  auto n = Dfa::from_words(3, {word({A, C}), word({B, C})});
  auto t = exists_xyz(m, n);
  ASSERT_TRUE(t);
  expect_triple(m, n, *t);
  EXPECT_EQ(t->z, word({C}));
}

TEST(ExistsXyz, SingletonHasNoPair) {
  auto m = Dfa::from_words(2, {word({A})});
  EXPECT_FALSE(exists_xyz(m, Dfa::all_words(2)));
}

TEST(ExistsXyz, MergedSuccessorIsGreen) {
  auto m = Dfa::from_words(2, {word({A}), word({B})});
  auto n = minimize(Dfa::from_words(2, {word({A, A}), word({B, A})}));
  EXPECT_EQ(n.next(n.start, A), n.next(n.start, B));
  auto colors = classify_states(m, n);
  EXPECT_NE(std::find(colors.begin(), colors.end(), StateColor::Green), colors.end());
  auto t = exists_xyz(m, n);
  ASSERT_TRUE(t);
  expect_triple(m, n, *t);
}

TEST(ExistsXyz, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto m = random_dfa(rng, 2, 1 + rng() % 4);
    auto n = random_dfa(rng, 2, 1 + rng() % 4);
    auto words = words_up_to(2, 3);
    bool brute = false;
    for (const auto& x : words)
      for (const auto& y : words)
        for (const auto& z : words)
          if (!brute && x != y && m.accepts(x) && m.accepts(y) && n.accepts(x + z) && n.accepts(y + z)) brute = true;
    auto t = exists_xyz(m, n);
    if (t) expect_triple(m, n, *t);
    if (brute) {
      EXPECT_TRUE(t);
    }
  }
}

TEST(Minimize, PreservesLanguage) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto m = random_dfa(rng, 2, 1 + rng() % 6);
    auto small = minimize(m);
    EXPECT_LE(small.size(), m.size());
    EXPECT_EQ(language(small, 6), language(m, 6));
  }
}

TEST(DumpDfa, StartAndAcceptHeaders) {
  Alphabet ab{"a", "b"};
  auto text = dump_dfa(Dfa::from_words(2, {word({A})}), ab);
  EXPECT_EQ(text.rfind("start:", 0), 0u);
  EXPECT_NE(text.find("accept:"), std::string::npos);
  EXPECT_NE(text.find(" a -> "), std::string::npos);
}
