#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srsdual/word.hpp"

namespace srsdual {

struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Srs {
  Alphabet alphabet;
  std::vector<Rule> rules;

  std::size_t max_lhs() const noexcept;
  // Throws SymbolOutsideAlphabet / EmptyLhs when the invariants are broken.
  void validate() const;

  friend bool operator==(const Srs&, const Srs&) = default;
};

struct Classification {
  bool dwindling = false;
  bool monadic = false;
  bool length_reducing = false;
  bool special = false;
  bool inter_reduced = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Srs& system);

// Grammar, one item per line:
//   TOKENS -> TOKENS        a rule; `_` is the empty word
//   alphabet: TOKENS        declares symbols (also fixes their ids)
//   # ...                   comment; a standalone `#` token starts a comment
Srs parse_srs(std::string_view text);
Srs parse_srs(std::string_view text, const Alphabet& base);
std::string format_srs(const Srs& system);

std::string format_rule(const Alphabet& alphabet, const Rule& rule);

}  // namespace srsdual
