#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srsdual/rewrite.hpp"
#include "srsdual/srs.hpp"

namespace srsdual {

using Domino = std::pair<Word, Word>;

// Generalized PCP: a fixed start and end domino around freely repeatable
// intermediate ones. Intermediate indices are 1-based.
struct GpcpInstance {
  Alphabet alphabet;
  Domino start;
  std::vector<Domino> pairs;
  Domino end;
};

// Lines: `start: TOP / BOTTOM`, `pair: TOP / BOTTOM` (repeated), `end: TOP / BOTTOM`.
GpcpInstance parse_gpcp(std::string_view text);
std::string format_gpcp(const GpcpInstance& g);
void validate_gpcp(const GpcpInstance& g);
Word gpcp_top(const GpcpInstance& g, const std::vector<std::size_t>& indices);
Word gpcp_bottom(const GpcpInstance& g, const std::vector<std::size_t>& indices);
bool gpcp_solves(const GpcpInstance& g, const std::vector<std::size_t>& indices);

// Random instance with a solution planted by construction. `solution`
// receives the planted intermediate index sequence.
GpcpInstance random_planted_gpcp(std::mt19937_64& rng, std::vector<std::size_t>& solution);

struct EncodedInstance {
  Srs srs;
  Word alpha;
  Word beta;
  std::vector<std::pair<std::string, std::string>> legend;  // symbol or key -> role
};

// Letter homomorphisms of the common-term encoding: level 1 -> x1 x2 x3,
// level 2 -> x1 x2, level 3 -> x1, for x in {a, b}.
Word encode_letters(const EncodedInstance& enc, const Word& binary_word, int level);

EncodedInstance encode_gpcp_to_ct(const GpcpInstance& g);
// Z with both alpha Z and beta Z normalizing to the empty word.
Word gpcp_ct_witness(const GpcpInstance& g, const std::vector<std::size_t>& indices, const EncodedInstance& enc);

// Instance strings alpha = x0 ¢1 and beta = y0 ¢2; the encoded question is
// whether alpha w1 and beta w1 normalize to #1 w2 and #2 w2.
EncodedInstance encode_gpcp_to_ce(const GpcpInstance& g);
std::pair<Word, Word> gpcp_ce_witness(const GpcpInstance& g, const std::vector<std::size_t>& indices,
                                      const EncodedInstance& enc);

// GPCP over {a, b} after re-encoding other alphabets with fixed-width codes.
GpcpInstance binary_gpcp(const GpcpInstance& g, std::vector<std::pair<std::string, std::string>>* legend = nullptr);

enum class Direction { Left, Right };

struct DlbaMove {
  std::size_t target = 0;
  Direction direction = Direction::Right;
};

// Read-only deterministic LBA on tape ¢ w $. Tape symbol indices: input
// letters first, then the left marker, then the right marker.
struct Dlba {
  std::vector<std::string> states;
  std::vector<std::string> input;
  std::string left_marker = "¢";
  std::string right_marker = "$";
  std::size_t start = 0;
  std::size_t accept = 0;
  std::size_t reject = 0;
  std::map<std::pair<std::size_t, std::size_t>, DlbaMove> delta;

  std::size_t left_index() const noexcept { return input.size(); }
  std::size_t right_index() const noexcept { return input.size() + 1; }
  std::size_t tape_size() const noexcept { return input.size() + 2; }
  std::string tape_name(std::size_t i) const;
  std::size_t state_index(std::string_view name) const;
  std::size_t tape_index(std::string_view name) const;
  void add_transition(std::size_t state, std::size_t symbol, DlbaMove move);
};

// Headers `states:`, `input:`, `markers: ¢ $`, `start:`, `accept:`, `reject:`
// and transition lines `q , SYM -> q' , L|R`.
Dlba parse_dlba(std::string_view text);
std::string format_dlba(const Dlba& d);

enum class DlbaOutcome { Accept, Reject, FuelExhausted };

std::vector<std::size_t> dlba_word(const Dlba& d, std::string_view text);
DlbaOutcome run_dlba(const Dlba& d, const std::vector<std::size_t>& w, std::size_t fuel = kDefaultFuel);

struct DlbaEncoding {
  Srs srs;
  std::vector<Symbol> tape;    // tape index -> symbol
  std::vector<Symbol> primed;  // tape index -> primed symbol, if any
  std::vector<char> has_prime;
  std::vector<Symbol> state;   // state index -> symbol

  Word tape_word(const std::vector<std::size_t>& w) const;  // ¢ w $
  Word initial(const Dlba& d, const std::vector<std::size_t>& w) const;
  Word accepting(const Dlba& d, const std::vector<std::size_t>& w) const;
};

// q a -> a' q' for right moves, l' q a -> q' l a (every primed l) for left
// moves, and qa ¢ -> ¢.
DlbaEncoding encode_dlba_to_srs(const Dlba& d);

// Breadth-first search over one-step rewrites: is `to` reachable from `from`
// in at least one step? Throws FuelExhausted past `budget` visited words.
bool rewrites_to_plus(const Srs& system, const Word& from, const Word& to, std::size_t budget = 200'000);

std::string_view to_string(DlbaOutcome o);

}  // namespace srsdual
