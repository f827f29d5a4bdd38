#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srsdual/word.hpp"

namespace srsdual {

using State = std::uint32_t;

// Complete deterministic automaton over symbol ids [0, alphabet_size).
struct Dfa {
  std::size_t alphabet_size = 0;
  std::vector<State> delta;  // delta[q * alphabet_size + symbol]
  State start = 0;
  std::vector<char> accepting;

  std::size_t size() const noexcept { return accepting.size(); }
  std::size_t accepting_count() const noexcept;
  State next(State q, Symbol s) const noexcept { return delta[q * alphabet_size + s.id]; }
  State run(State q, const Word& w) const noexcept;
  bool accepts(const Word& w) const noexcept { return accepting[run(start, w)] != 0; }
  State add_state(bool accept = false);
  void set(State q, Symbol s, State to) { delta[q * alphabet_size + s.id] = to; }

  static Dfa empty_language(std::size_t alphabet_size);
  static Dfa all_words(std::size_t alphabet_size);
  static Dfa from_words(std::size_t alphabet_size, const std::vector<Word>& words);
};

// Deterministic transitions, several entry states.
struct Mefa {
  std::size_t alphabet_size = 0;
  std::vector<State> delta;
  std::vector<State> starts;
  std::vector<char> accepting;

  std::size_t size() const noexcept { return accepting.size(); }
  State next(State q, Symbol s) const noexcept { return delta[q * alphabet_size + s.id]; }
  bool accepts(const Word& w) const noexcept;
  static Mefa from_dfa(const Dfa& d);
};

struct WitnessTriple {
  Word x;
  Word y;
  Word z;
};

enum class StateColor { Dead, Blue, Orange, Green };

Dfa prune_unreachable(const Dfa& m);
Dfa minimize(const Dfa& m);
Mefa prune_unreachable(const Mefa& m);

Dfa concat_letter(const Dfa& m, Symbol a);
Dfa concat_word(const Dfa& m, const Word& z);
Dfa intersect_dfa(const Dfa& m1, const Dfa& m2);
Dfa union_dfa(const std::vector<Dfa>& parts, std::size_t alphabet_size);
Dfa complement_dfa(const Dfa& m);

// {v : exists u in L(m1) with uv in L(m2)}
Mefa left_quotient_mefa(const Dfa& m2, const Dfa& m1);

// Shortest accepted word, ties broken by smallest symbol ids.
std::optional<Word> shortest_accepted(const Dfa& m);
std::optional<Word> shortest_accepted(const Mefa& m);
std::optional<Word> mefa_intersect_witness(const Mefa& a1, const Mefa& a2);

// Backward reachability from accepting states; true where no accepting
// state is reachable.
std::vector<char> dead_states(const Dfa& m);

// x != y, x and y in L(m), xz and yz in L(n).
std::optional<WitnessTriple> exists_xyz(const Dfa& m, const Dfa& n);
// Per-state classification of n against m used by exists_xyz.
std::vector<StateColor> classify_states(const Dfa& m, const Dfa& n);

// Debug format: `start: q`, `accept: q...`, then `q SYMBOL -> q'` lines.
std::string dump_dfa(const Dfa& m, const Alphabet& alphabet);

}  // namespace srsdual
