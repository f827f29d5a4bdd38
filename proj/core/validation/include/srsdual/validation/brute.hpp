#pragma once

#include <optional>
#include <string>

#include "srsdual/automata.hpp"

namespace srsdual::validation {

// Each check returns a description of the first disagreement, or nothing.

// L(concat_letter(m, a)) = L(m)·a on all words up to max_len, and the state
// and accepting-state bounds |Q'| <= |Q| + |F|, |F'| <= |F|.
std::optional<std::string> check_concat_letter(const Dfa& m, Symbol a, std::size_t max_len);

// left_quotient_mefa(m2, m1) against the definition for every v up to
// max_len. Membership of v is decided from the set of state pairs reachable
// by some u with u in L(m1); every u up to max_len is also tried explicitly.
std::optional<std::string> check_left_quotient(const Dfa& m2, const Dfa& m1, std::size_t max_len);

// mefa_intersect_witness against exhaustive search up to max_len: same
// verdict whenever a common word that short exists, the same minimal length,
// and any longer witness must lie in both languages.
std::optional<std::string> check_mefa_intersection(const Mefa& a1, const Mefa& a2, std::size_t max_len);

// exists_xyz against exhaustive search over x, y, z up to max_len. A
// triple longer than the bound counts as agreement only if it verifies by
// membership.
std::optional<std::string> check_exists_xyz(const Dfa& m, const Dfa& n, std::size_t max_len);

}  // namespace srsdual::validation
