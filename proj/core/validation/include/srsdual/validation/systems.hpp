#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "srsdual/automata.hpp"
#include "srsdual/reductions.hpp"
#include "srsdual/srs.hpp"

namespace srsdual::validation {

enum class RhsShape {
  ProperPrefix,  // dwindling rules
  AtMostOne,     // monadic rules; a one-letter lhs may be renamed to the other letter
};

// Every system over {a, b} with at most `max_rules` distinct rules whose
// left-hand sides have length 1..max_lhs, the right-hand side restricted by
// `shape`. Rules are listed in a canonical order and each set appears once;
// the empty system comes first.
std::vector<Srs> enumerate_systems(RhsShape shape, std::size_t max_rules = 2, std::size_t max_lhs = 3);

// True when every rule is length-reducing except letter-to-letter renamings
// whose graph has no cycle. Such a system terminates: each step lowers the
// length or keeps it and moves one letter down the renaming order.
bool renaming_terminates(const Srs& system);

// Inter-reduced, terminating (per `renaming_terminates`) systems from
// `enumerate_systems` whose critical pairs all join.
std::vector<Srs> dwindling_sweep_family();
std::vector<Srs> monadic_sweep_family();

// Irreducible words with min_len <= |w| <= max_len, shortlex order.
std::vector<Word> irreducible_words(const Srs& system, std::size_t min_len, std::size_t max_len);

// Random complete DFA with 1..max_states states; each state accepts with
// probability 1/2.
Dfa random_dfa(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_states);

struct NamedMachine {
  std::string name;
  Dlba machine;
};

// Small halting machines used by the encoder checks; the same tables are
// shipped as files under tests/fixtures.
std::vector<NamedMachine> fixture_machines();

}  // namespace srsdual::validation
