#include <gtest/gtest.h>

#include <random>

#include "srsdual/irr.hpp"
#include "srsdual/rewrite.hpp"
#include "support.hpp"

using namespace srsdual;
using support::w;

TEST(IrrDfa, EmptySystemAcceptsEverything) {
  auto s = support::ab_sys("");
  auto d = irr_dfa(s);
  for (const auto& x : words_up_to(2, 4)) EXPECT_TRUE(d.accepts(x));
}

TEST(IrrDfa, Examples) {
  auto s = support::ab_sys("a b -> _\n");
  auto d = irr_dfa(s);
  EXPECT_TRUE(d.accepts(w(s, "b a")));
  EXPECT_TRUE(d.accepts(w(s, "b b")));
  EXPECT_FALSE(d.accepts(w(s, "a a b")));
  auto t = parse_srs("b a a -> b a");
  auto e = irr_dfa(t);
  EXPECT_FALSE(e.accepts(w(t, "b a a")));
  EXPECT_TRUE(e.accepts(w(t, "b a")));
}

TEST(IrrDfa, MembershipMatchesIsIrreducible) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto s = support::random_length_reducing(rng);
    auto d = irr_dfa(s);
    for (const auto& x : words_up_to(2, 6)) ASSERT_EQ(d.accepts(x), is_irreducible(s, x)) << format_srs(s);
  }
}
