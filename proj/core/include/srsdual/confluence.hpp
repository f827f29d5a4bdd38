#pragma once

#include <optional>
#include <vector>

#include "srsdual/rewrite.hpp"
#include "srsdual/srs.hpp"

namespace srsdual {

enum class OverlapKind { SuffixPrefix, Containment };

struct CriticalPair {
  Word peak;
  Word left;
  Word right;
  OverlapKind overlap_kind = OverlapKind::SuffixPrefix;
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
};

// Suffix-prefix overlaps of every ordered pair of rules (a rule with itself
// included) and containments between distinct rules. Pairs with the same
// peak and the same unordered pair of sides are reported once.
std::vector<CriticalPair> critical_pairs(const Srs& system);

enum class Evidence { Proved, Refuted, Unknown };

struct ConvergenceEvidence {
  Evidence terminating = Evidence::Unknown;
  Evidence locally_confluent = Evidence::Unknown;
  std::optional<CriticalPair> witness;  // first pair not shown joinable

  bool convergent() const noexcept {
    return terminating == Evidence::Proved && locally_confluent == Evidence::Proved;
  }
};

ConvergenceEvidence check_convergence(const Srs& system, std::size_t fuel = kDefaultFuel);

std::string_view to_string(Evidence e);
std::string_view to_string(OverlapKind k);

}  // namespace srsdual
