#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "srsdual/srs.hpp"
#include "srsdual/word.hpp"

namespace srsdual {

inline constexpr std::size_t kDefaultFuel = 1'000'000;

struct Redex {
  std::size_t position = 0;  // 0-based start
  std::size_t rule = 0;
};

// Leftmost redex (smallest start), lowest rule index on ties.
std::optional<Redex> leftmost_redex(const Srs& system, const Word& w);

Word apply_rule(const Srs& system, const Word& w, const Redex& redex);

// Normal form under the leftmost-redex strategy. `fuel` bounds the number of
// rewrite steps; running out throws FuelExhausted.
Word normalize(const Srs& system, const Word& w, std::size_t fuel = kDefaultFuel);
Word normalize(const Srs& system, const Word& w, std::size_t fuel, std::size_t& steps);

bool is_irreducible(const Srs& system, const Word& w);

// Distinct one-step successors in (position, rule) order.
std::vector<Word> rewrite_successors(const Srs& system, const Word& w);

// Multi-pattern automaton over the left-hand sides (Aho-Corasick). Each state
// records the lowest-index rule whose lhs is a suffix of the text read so far.
class RedexMatcher {
 public:
  explicit RedexMatcher(const Srs& system);

  std::uint32_t root() const noexcept { return 0; }
  std::uint32_t next(std::uint32_t state, Symbol s) const noexcept { return go_[state * k_ + s.id]; }
  // -1 when no lhs ends here.
  std::int32_t rule_at(std::uint32_t state) const noexcept { return suffix_rule_[state]; }
  std::size_t state_count() const noexcept { return suffix_rule_.size(); }
  std::size_t alphabet_size() const noexcept { return k_; }

 private:
  std::size_t k_;
  std::vector<std::uint32_t> go_;
  std::vector<std::int32_t> suffix_rule_;
};

struct StackListener {
  virtual ~StackListener() = default;
  virtual void on_push(std::size_t index, Symbol s) = 0;
  virtual void on_pop(std::size_t index, Symbol s) = 0;
};

// Append-and-reduce normalization. The stack always holds an irreducible
// word; appending a symbol can only create redexes ending at the top, which
// are replaced until none remain. Agrees with `normalize` whenever the
// system is confluent.
class ReductionStack {
 public:
  ReductionStack(const Srs& system, const RedexMatcher& matcher, std::size_t fuel = kDefaultFuel);

  void push(Symbol s, StackListener* listener = nullptr);
  void push(const Word& w, StackListener* listener = nullptr);
  void clear();

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  Word word() const { return Word(symbols_); }
  std::size_t steps() const noexcept { return steps_; }
  void set_fuel(std::size_t fuel) noexcept { fuel_ = fuel; }

  struct Snapshot {
    std::vector<Symbol> symbols;
    std::vector<std::uint32_t> states;
  };
  void save(Snapshot& out) const;
  void restore(const Snapshot& in);

 private:
  const Srs* system_;
  const RedexMatcher* matcher_;
  std::size_t fuel_;
  std::size_t steps_ = 0;
  std::vector<Symbol> symbols_;
  std::vector<std::uint32_t> states_;  // states_[i] = matcher state after symbols_[0..i)
  std::vector<Symbol> pending_;
};

// Convenience wrapper owning a matcher.
class StackNormalizer {
 public:
  explicit StackNormalizer(const Srs& system);
  Word operator()(const Word& w, std::size_t fuel = kDefaultFuel) const;
  Word operator()(const Word& a, const Word& b, std::size_t fuel = kDefaultFuel) const;
  const RedexMatcher& matcher() const noexcept { return matcher_; }
  const Srs& system() const noexcept { return *system_; }

 private:
  const Srs* system_;
  RedexMatcher matcher_;
};

}  // namespace srsdual
