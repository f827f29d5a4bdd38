#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "srsdual/confluence.hpp"
#include "support.hpp"

using namespace srsdual;
using support::fmt;

namespace {

std::set<std::string> peaks(const Srs& s) {
  std::set<std::string> out;
  for (const auto& p : critical_pairs(s)) out.insert(fmt(s, p.peak));
  return out;
}

// Peaks straight from the overlap definition, without the side bookkeeping.
std::set<std::string> brute_peaks(const Srs& s) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < s.rules.size(); ++i)
    for (std::size_t j = 0; j < s.rules.size(); ++j) {
      const auto& l1 = s.rules[i].lhs;
      const auto& l2 = s.rules[j].lhs;
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k)
        if (l1.drop_prefix(l1.size() - k) == l2.prefix(k)) out.insert(fmt(s, l1 + l2.drop_prefix(k)));
      if (i != j && l1.contains(l2)) out.insert(fmt(s, l1));
    }
  return out;
}

}  // namespace

TEST(CriticalPairs, Examples) {
  EXPECT_EQ(peaks(parse_srs("a b -> _\nb a -> _")), (std::set<std::string>{"a b a", "b a b"}));
  EXPECT_EQ(peaks(parse_srs("a b a -> a")), (std::set<std::string>{"a b a b a"}));
  EXPECT_TRUE(critical_pairs(parse_srs("a b -> _")).empty());
}

TEST(CriticalPairs, ContainmentReported) {
  auto s = parse_srs("a b a -> a\nb -> _");
  bool found = false;
  for (const auto& p : critical_pairs(s))
    if (p.overlap_kind == OverlapKind::Containment && fmt(s, p.peak) == "a b a") found = true;
  EXPECT_TRUE(found);
}

TEST(CriticalPairs, MatchBruteForceEnumeration) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    auto s = support::random_length_reducing(rng);
    EXPECT_EQ(peaks(s), brute_peaks(s)) << format_srs(s);
    for (const auto& p : critical_pairs(s)) {
      auto next = rewrite_successors(s, p.peak);
      EXPECT_NE(std::find(next.begin(), next.end(), p.left), next.end());
      EXPECT_NE(std::find(next.begin(), next.end(), p.right), next.end());
    }
  }
}

TEST(CheckConvergence, Examples) {
  auto e1 = check_convergence(parse_srs("a b -> _\nb a -> _"));
  EXPECT_EQ(e1.terminating, Evidence::Proved);
  EXPECT_EQ(e1.locally_confluent, Evidence::Proved);
  auto e2 = check_convergence(parse_srs("a b a -> a"));
  EXPECT_TRUE(e2.convergent());
  auto e3 = check_convergence(parse_srs("¢1 c1 -> a ¢1"));
  EXPECT_EQ(e3.terminating, Evidence::Unknown);
  auto e4 = check_convergence(parse_srs("a b -> a\nb b -> a"));
  EXPECT_EQ(e4.locally_confluent, Evidence::Refuted);
  ASSERT_TRUE(e4.witness);
  EXPECT_EQ(fmt(parse_srs("a b -> a\nb b -> a"), e4.witness->peak), "a b b");
}

TEST(CheckConvergence, NonTerminatingPeaksAreUnknownNotRefuted) {
  auto s = parse_srs("a b -> b a\nb a -> a b");
  auto e = check_convergence(s, 1000);
  EXPECT_EQ(e.terminating, Evidence::Unknown);
  EXPECT_NE(e.locally_confluent, Evidence::Refuted);
}
