#pragma once

#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "srsdual/rewrite.hpp"
#include "srsdual/srs.hpp"

namespace support {

using srsdual::Srs;
using srsdual::Symbol;
using srsdual::Word;

inline Srs sys(std::string_view text) { return srsdual::parse_srs(text); }

// Binary system over {a, b} with the letters declared in that order.
inline Srs ab_sys(std::string_view rules) { return srsdual::parse_srs("alphabet: a b\n" + std::string(rules)); }

inline Word w(const Srs& s, std::string_view text) { return s.alphabet.parse_known(text); }

inline std::string fmt(const Srs& s, const Word& word) { return s.alphabet.format(word); }

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_len) {
  Word out;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) out.push_back(Symbol{static_cast<std::uint32_t>(rng() % alphabet_size)});
  return out;
}

inline Word random_nonempty_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_len) {
  for (;;) {
    Word out = random_word(rng, alphabet_size, max_len);
    if (!out.empty()) return out;
  }
}

// Random length-reducing system over {a, b}: 1..3 rules, lhs 1..3 letters,
// rhs strictly shorter.
inline Srs random_length_reducing(std::mt19937_64& rng) {
  Srs s;
  s.alphabet = srsdual::Alphabet{"a", "b"};
  std::size_t n = 1 + rng() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    Word lhs = random_nonempty_word(rng, 2, 3);
    Word rhs = random_word(rng, 2, lhs.size() - 1);
    s.rules.push_back({lhs, rhs});
  }
  return s;
}

// Every irreducible word reachable from `start` by any rewrite strategy.
inline std::set<Word> all_normal_forms(const Srs& s, const Word& start) {
  std::set<Word> seen{start}, out;
  std::vector<Word> stack{start};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    auto next = srsdual::rewrite_successors(s, cur);
    if (next.empty()) out.insert(cur);
    for (auto& n : next)
      if (seen.insert(n).second) stack.push_back(n);
  }
  return out;
}

}  // namespace support
