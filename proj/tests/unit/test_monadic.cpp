#include <gtest/gtest.h>

#include <random>

#include "srsdual/error.hpp"
#include "srsdual/monadic.hpp"
#include "srsdual/validation/systems.hpp"
#include "support.hpp"

using namespace srsdual;
using support::fmt;
using support::w;

namespace {

const MonadicOptions kAssume{kDefaultFuel, true};

std::vector<std::string> names(const Srs& s, const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& x : words) out.push_back(fmt(s, x));
  return out;
}

bool same_nf(const Srs& s, const Word& a, const Word& b) { return normalize(s, a) == normalize(s, b); }

}  // namespace

TEST(MpSet, Examples) {
  auto s = support::ab_sys("a a -> a\n");
  EXPECT_EQ(names(s, mp_set(s, Word{}).members), (std::vector<std::string>{"_", "a", "b"}));
  EXPECT_EQ(names(s, mp_set(s, w(s, "a")).members), (std::vector<std::string>{"_", "a", "b", "a b"}));
}

TEST(MpSet, SizeBound) {
  std::mt19937_64 rng(6);
  auto family = validation::monadic_sweep_family();
  for (int i = 0; i < 200; ++i) {
    const auto& s = family[rng() % family.size()];
    Word alpha = support::random_word(rng, 2, 4);
    auto mp = mp_set(s, alpha, kAssume);
    EXPECT_LE(mp.members.size(), (alpha.size() + 1) * (s.alphabet.size() + 1));
  }
}

TEST(Rf1, Examples) {
  auto s = support::ab_sys("a b -> _\n");
  auto l = rf1_dfa(s, w(s, "a"), Word{});
  for (const auto& z : words_up_to(2, 6)) EXPECT_EQ(l.dfa.accepts(z), fmt(s, z) == "b") << fmt(s, z);
  auto e = rf1_dfa(s, Word{}, Word{});
  for (const auto& z : words_up_to(2, 6)) EXPECT_EQ(e.dfa.accepts(z), z.empty());
  auto t = support::ab_sys("a b -> a\n");
  auto bs = rf1_dfa(t, w(t, "a"), w(t, "a"));
  for (const auto& z : words_up_to(2, 6)) {
    bool all_b = std::all_of(z.begin(), z.end(), [&](Symbol c) { return c == t.alphabet.symbol("b"); });
    EXPECT_EQ(bs.dfa.accepts(z), all_b) << fmt(t, z);
  }
}

TEST(Rf, Examples) {
  auto s = support::ab_sys("a b -> _\n");
  auto l = rf_dfa(s, w(s, "a"), w(s, "b"));
  for (const auto& z : words_up_to(2, 6)) EXPECT_EQ(l.dfa.accepts(z), fmt(s, z) == "b b") << fmt(s, z);
  EXPECT_TRUE(rf_dfa(s, w(s, "b a"), w(s, "b a")).dfa.accepts(Word{}));
  auto t = support::ab_sys("a a -> a\n");
  auto m = rf_dfa(t, w(t, "a"), w(t, "a b"));
  EXPECT_TRUE(m.dfa.accepts(w(t, "b")));
  EXPECT_TRUE(m.dfa.accepts(w(t, "a b")));
}

TEST(Rf, SoundAndCompleteOnSweepFamily) {
  auto family = validation::monadic_sweep_family();
  auto zs = words_up_to(2, 6);
  for (std::size_t i = 0; i < family.size(); i += 4) {
    const auto& s = family[i];
    MonadicSolver solver(s, kAssume);
    auto small = validation::irreducible_words(s, 0, 2);
    for (const auto& x : small)
      for (const auto& y : small) {
        auto l = solver.rf(x, y);
        for (const auto& z : zs) {
          bool expected = is_irreducible(s, z) && normalize(s, x + z) == y;
          ASSERT_EQ(l.dfa.accepts(z), expected)
              << format_srs(s) << "x=" << fmt(s, x) << " y=" << fmt(s, y) << " z=" << fmt(s, z);
        }
      }
  }
}

TEST(SolPairs, Examples) {
  auto s = support::ab_sys("a b -> _\nb a -> _\n");
  // alpha1 = alpha2 = empty: the a = b = empty term plus, per letter, a = b,
  // (a, empty) with Z = a, and (empty, b) with Z'' = b.
  auto trivial = sol_pairs(s, Word{}, Word{});
  ASSERT_EQ(trivial.size(), 1 + 3 * s.alphabet.size());
  EXPECT_TRUE(trivial[0].a.empty() && trivial[0].b.empty() && trivial[0].z.empty());
  for (const auto& p : trivial) {
    std::optional<Word> only;
    for (const auto& z : words_up_to(2, 4)) {
      EXPECT_EQ(p.left.accepts(z), p.right.accepts(z));
      if (p.left.accepts(z)) {
        EXPECT_FALSE(only);
        only = z;
      }
    }
    ASSERT_TRUE(only);
    EXPECT_LE(only->size(), 1u);
  }
  for (const auto& z : words_up_to(2, 4)) EXPECT_EQ(trivial[0].left.accepts(z), z.empty());
  bool found = false;
  for (const auto& p : sol_pairs(s, normalize(s, w(s, "b a")), normalize(s, w(s, "a b"))))
    found = found || (p.left.accepts(w(s, "a")) && p.right.accepts(w(s, "a")));
  EXPECT_TRUE(found);
}

TEST(SolPairs, EveryAcceptedPairSolvesTheEquation) {
  auto family = validation::monadic_sweep_family();
  auto zs = words_up_to(2, 4);
  for (std::size_t i = 0; i < family.size(); i += 6) {
    const auto& s = family[i];
    MonadicSolver solver(s, kAssume);
    auto small = validation::irreducible_words(s, 0, 2);
    for (const auto& a1 : small)
      for (const auto& a2 : small)
        for (const auto& p : solver.sol_pairs(a1, a2))
          for (const auto& x : zs)
            if (p.left.accepts(x))
              for (const auto& y : zs)
                if (p.right.accepts(y)) {
                  ASSERT_TRUE(same_nf(s, a1 + x, a2 + y)) << format_srs(s);
                }
  }
}

TEST(SolveCt, Examples) {
  auto s = support::ab_sys("a b -> _\nb a -> _\n");
  auto got = solve_ct_monadic(s, w(s, "b a"), w(s, "a b"));
  ASSERT_TRUE(got);
  // Both inputs already normalize to the empty word, so the empty word wins
  // the shortlex tie-break; the longer witness a is still valid.
  EXPECT_TRUE(got->w.empty());
  EXPECT_TRUE(same_nf(s, w(s, "b a a"), w(s, "a b a")));

  auto same = solve_ct_monadic(s, w(s, "a"), w(s, "a"));
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->w.empty());

  auto t = support::ab_sys("a b -> _\n");
  EXPECT_FALSE(solve_ct_monadic(t, w(t, "a"), w(t, "b")));
}

TEST(SolveCt, NotMonadicIsRefused) {
  auto s = support::ab_sys("b a a -> b a\n");
  EXPECT_THROW(solve_ct_monadic(s, w(s, "a"), w(s, "b")), Error);
  auto nir = support::ab_sys("a b -> _\na b a -> a\n");
  try {
    solve_ct_monadic(nir, w(nir, "a"), w(nir, "b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInterReduced);
  }
}

TEST(SolveCt, DeltaClosure) {
  std::mt19937_64 rng(19);
  auto family = validation::monadic_sweep_family();
  int solved = 0;
  for (int i = 0; i < 300; ++i) {
    const auto& s = family[rng() % family.size()];
    Word alpha = normalize(s, support::random_word(rng, 2, 3));
    Word beta = normalize(s, support::random_word(rng, 2, 3));
    auto got = solve_ct_monadic(s, alpha, beta, kAssume);
    if (!got) continue;
    ++solved;
    for (int j = 0; j < 10; ++j) {
      Word ext = got->w + support::random_word(rng, 2, 4);
      if (!is_irreducible(s, ext)) continue;
      EXPECT_TRUE(same_nf(s, alpha + ext, beta + ext));
    }
  }
  EXPECT_GT(solved, 20);
}

TEST(SolveCeTwo, Examples) {
  auto s = support::ab_sys("a b -> _\nb a -> _\n");
  auto ba = w(s, "b a"), ab = w(s, "a b");
  auto got = solve_ce_two(s, ba, ab, ba, ab);
  ASSERT_TRUE(got);
  EXPECT_TRUE(same_nf(s, ba + got->x, ab + got->y));
  EXPECT_TRUE(got->x.empty() && got->y.empty());
  EXPECT_TRUE(same_nf(s, ba + w(s, "a"), ab + w(s, "a")));

  try {
    solve_ce_two(s, w(s, "a"), w(s, "a"), w(s, "b"), w(s, "b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
  }

  auto free = support::ab_sys("");
  EXPECT_FALSE(solve_ce_two(free, w(free, "a"), w(free, "b"), Word{}, Word{}));
}

TEST(SolveCeOne, Examples) {
  auto s = support::ab_sys("a a -> a\n");
  auto got = solve_ce_one(s, w(s, "a"), w(s, "b a"));
  ASSERT_TRUE(got);
  EXPECT_EQ(fmt(s, got->x), "a");
  EXPECT_EQ(fmt(s, got->y), "_");

  auto g = support::ab_sys("a b -> _\nb a -> _\n");
  EXPECT_FALSE(solve_ce_one(g, w(g, "a"), w(g, "b")));
  EXPECT_FALSE(solve_ce_one(g, Word{}, Word{}));
}

TEST(SolveCeOne, ReducibleInputIsRefused) {
  auto s = support::ab_sys("a a -> a\n");
  try {
    solve_ce_one(s, w(s, "a a"), w(s, "b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InputReducible);
  }
}

TEST(SolveCeOne, WitnessesAreDistinctIrreducibleAndVerified) {
  auto family = validation::monadic_sweep_family();
  for (std::size_t i = 0; i < family.size(); i += 3) {
    const auto& s = family[i];
    MonadicSolver solver(s, kAssume);
    auto small = validation::irreducible_words(s, 0, 2);
    for (const auto& a : small)
      for (const auto& b : small) {
        auto got = solver.ce_one(a, b);
        if (!got) continue;
        EXPECT_NE(got->x, got->y);
        EXPECT_FALSE(got->x < got->y);
        EXPECT_TRUE(is_irreducible(s, got->x) && is_irreducible(s, got->y));
        EXPECT_TRUE(same_nf(s, a + got->x, a + got->y));
        EXPECT_TRUE(same_nf(s, b + got->x, b + got->y));
      }
  }
}
