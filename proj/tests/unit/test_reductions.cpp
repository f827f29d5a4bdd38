#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "srsdual/confluence.hpp"
#include "srsdual/error.hpp"
#include "srsdual/reductions.hpp"
#include "support.hpp"

using namespace srsdual;
using support::fmt;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(SRSDUAL_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

std::set<std::string> rule_lines(const Srs& s) {
  std::set<std::string> out;
  for (const auto& r : s.rules) out.insert(format_rule(s.alphabet, r));
  return out;
}

GpcpInstance small_gpcp() { return parse_gpcp(read_fixture("small.gpcp")); }

}  // namespace

TEST(Gpcp, ParseAndFormatRoundTrip) {
  auto g = small_gpcp();
  EXPECT_EQ(g.pairs.size(), 1u);
  EXPECT_EQ(fmt(Srs{g.alphabet, {}}, g.start.first), "a");
  auto again = parse_gpcp(format_gpcp(g));
  EXPECT_EQ(again.start, g.start);
  EXPECT_EQ(again.pairs, g.pairs);
  EXPECT_EQ(again.end, g.end);
}

TEST(Gpcp, MalformedInstances) {
  EXPECT_EQ(kind_of([] { parse_gpcp("start: a / _\nend: b / b\n"); }), ErrorKind::MalformedInstance);
  EXPECT_EQ(kind_of([] { parse_gpcp("start: a / a\n"); }), ErrorKind::MalformedInstance);
  auto g = small_gpcp();
  EXPECT_EQ(kind_of([&] { gpcp_top(g, {2}); }), ErrorKind::InvalidArgument);
}

TEST(Gpcp, TopAndBottomStrings) {
  auto g = small_gpcp();
  Srs view{g.alphabet, {}};
  EXPECT_EQ(fmt(view, gpcp_top(g, {})), "a b");
  EXPECT_EQ(fmt(view, gpcp_bottom(g, {})), "a b");
  EXPECT_EQ(fmt(view, gpcp_top(g, {1})), "a a b");
  EXPECT_EQ(fmt(view, gpcp_bottom(g, {1})), "a b b");
  EXPECT_TRUE(gpcp_solves(g, {}));
  EXPECT_FALSE(gpcp_solves(g, {1}));
}

TEST(Gpcp, PlantedInstancesAreSolved) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::size_t> sol;
    auto g = random_planted_gpcp(rng, sol);
    validate_gpcp(g);
    EXPECT_TRUE(gpcp_solves(g, sol));
  }
}

TEST(EncodeGpcpToCt, RuleCountForOneIntermediatePair) {
  auto enc = encode_gpcp_to_ct(small_gpcp());
  EXPECT_EQ(enc.srs.rules.size(), 18u);
  EXPECT_EQ(fmt(enc.srs, enc.alpha), "¢1");
  EXPECT_EQ(fmt(enc.srs, enc.beta), "¢2");
}

TEST(EncodeGpcpToCt, DwindlingWithoutOverlaps) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::size_t> sol;
    auto g = random_planted_gpcp(rng, sol);
    auto enc = encode_gpcp_to_ct(g);
    EXPECT_TRUE(classify(enc.srs).dwindling);
    EXPECT_TRUE(critical_pairs(enc.srs).empty());
  }
}

TEST(GpcpCtWitness, SmallInstance) {
  auto g = small_gpcp();
  auto enc = encode_gpcp_to_ct(g);
  auto z = gpcp_ct_witness(g, {}, enc);
  EXPECT_EQ(fmt(enc.srs, z), "a1 a2 a3 b1 b2 b3 c2 B c0");
  EXPECT_TRUE(normalize(enc.srs, enc.alpha + z).empty());
  EXPECT_TRUE(normalize(enc.srs, enc.beta + z).empty());
  EXPECT_EQ(kind_of([&] { gpcp_ct_witness(g, {1}, enc); }), ErrorKind::NotASolution);
}

TEST(GpcpCtWitness, PlantedInstancesErase) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::size_t> sol;
    auto g = random_planted_gpcp(rng, sol);
    auto enc = encode_gpcp_to_ct(g);
    auto z = gpcp_ct_witness(g, sol, enc);
    EXPECT_TRUE(normalize(enc.srs, enc.alpha + z).empty());
    EXPECT_TRUE(normalize(enc.srs, enc.beta + z).empty());
  }
}

TEST(EncodeLetters, LevelsAreInjective) {
  auto enc = encode_gpcp_to_ct(small_gpcp());
  auto a = enc.srs.alphabet.symbol("a"), b = enc.srs.alphabet.symbol("b");
  EXPECT_EQ(fmt(enc.srs, encode_letters(enc, Word{a, b}, 1)), "a1 a2 a3 b1 b2 b3");
  EXPECT_EQ(fmt(enc.srs, encode_letters(enc, Word{a, b}, 2)), "a1 a2 b1 b2");
  EXPECT_EQ(fmt(enc.srs, encode_letters(enc, Word{a, b}, 3)), "a1 b1");
  for (int level = 1; level <= 3; ++level) {
    std::set<Word> images;
    auto words = words_up_to(2, 5);
    for (const auto& x : words) {
      Word mapped;
      for (auto s : x) mapped.push_back(s.id == 0 ? a : b);
      images.insert(encode_letters(enc, mapped, level));
    }
    EXPECT_EQ(images.size(), words.size());
  }
}

TEST(EncodeGpcpToCe, EndRuleAndConvergence) {
  auto enc = encode_gpcp_to_ce(small_gpcp());
  EXPECT_TRUE(rule_lines(enc.srs).count("¢1 c2 -> #1 b $"));
  auto ev = check_convergence(enc.srs);
  EXPECT_EQ(ev.locally_confluent, Evidence::Proved);
  EXPECT_EQ(ev.terminating, Evidence::Unknown);
}

TEST(GpcpCeWitness, SmallInstance) {
  auto g = small_gpcp();
  auto enc = encode_gpcp_to_ce(g);
  auto [w1, w2] = gpcp_ce_witness(g, {}, enc);
  EXPECT_EQ(fmt(enc.srs, w1), "c2");
  EXPECT_EQ(fmt(enc.srs, w2), "a b $");
  auto h1 = enc.srs.alphabet.symbol("#1"), h2 = enc.srs.alphabet.symbol("#2");
  EXPECT_EQ(normalize(enc.srs, enc.alpha + w1), Word{h1} + w2);
  EXPECT_EQ(normalize(enc.srs, enc.beta + w1), Word{h2} + w2);
  EXPECT_EQ(kind_of([&] { gpcp_ce_witness(g, {1}, enc); }), ErrorKind::NotASolution);
}

TEST(EncodeDlba, EmptyTransitionTableGivesOneRule) {
  auto d = parse_dlba("states: q0 qa qr\ninput: a b\nmarkers: ¢ $\nstart: q0\naccept: qa\nreject: qr\n");
  auto enc = encode_dlba_to_srs(d);
  EXPECT_EQ(rule_lines(enc.srs), (std::set<std::string>{"qa ¢ -> ¢"}));
}

TEST(EncodeDlba, RightAndLeftMoves) {
  auto d = parse_dlba(
      "states: q0 q1 q2 qa qr\ninput: a b\nmarkers: ¢ $\nstart: q0\naccept: qa\nreject: qr\n"
      "q0 , a -> q1 , R\nq1 , b -> q2 , L\n");
  auto rules = rule_lines(encode_dlba_to_srs(d).srs);
  EXPECT_TRUE(rules.count("q0 a -> a' q1"));
  EXPECT_TRUE(rules.count("a' q1 b -> q2 a b"));
  EXPECT_TRUE(rules.count("b' q1 b -> q2 b b"));
  EXPECT_EQ(rules.size(), 4u);
}

TEST(Dlba, NondeterminismIsRejected) {
  EXPECT_EQ(kind_of([] {
              parse_dlba(
                  "states: q0 q1 qa qr\ninput: a\nmarkers: ¢ $\nstart: q0\naccept: qa\nreject: qr\n"
                  "q0 , a -> q1 , R\nq0 , a -> qa , L\n");
            }),
            ErrorKind::Nondeterministic);
}

TEST(Dlba, FormatRoundTrip) {
  auto d = parse_dlba(read_fixture("even_a.dlba"));
  auto again = parse_dlba(format_dlba(d));
  EXPECT_EQ(again.states, d.states);
  EXPECT_EQ(again.input, d.input);
  EXPECT_EQ(again.delta.size(), d.delta.size());
}

TEST(RunDlba, AcceptsExactlyA) {
  auto d = parse_dlba(read_fixture("accept_a.dlba"));
  EXPECT_EQ(run_dlba(d, dlba_word(d, "a")), DlbaOutcome::Accept);
  EXPECT_EQ(run_dlba(d, dlba_word(d, "a a")), DlbaOutcome::Reject);
  EXPECT_EQ(run_dlba(d, dlba_word(d, "")), DlbaOutcome::Reject);
  EXPECT_EQ(run_dlba(d, dlba_word(d, "b")), DlbaOutcome::Reject);
  EXPECT_THROW(dlba_word(d, "c"), Error);
  EXPECT_THROW(run_dlba(d, {7}), Error);
}

TEST(RunDlba, LoopingMachineRunsOutOfFuel) {
  auto d = parse_dlba(read_fixture("loop.dlba"));
  EXPECT_EQ(run_dlba(d, dlba_word(d, "a"), 1000), DlbaOutcome::FuelExhausted);
}

TEST(EncodeDlba, AcceptanceMatchesReachability) {
  for (const auto* name : {"accept_a.dlba", "even_a.dlba", "reject_all.dlba"}) {
    auto d = parse_dlba(read_fixture(name));
    auto enc = encode_dlba_to_srs(d);
    for (const auto& x : words_up_to(d.input.size(), 3)) {
      std::vector<std::size_t> input;
      for (auto s : x) input.push_back(s.id);
      bool accepted = run_dlba(d, input) == DlbaOutcome::Accept;
      EXPECT_EQ(rewrites_to_plus(enc.srs, enc.initial(d, input), enc.accepting(d, input)), accepted) << name;
    }
  }
}
