#include "srsdual/irr.hpp"

#include "srsdual/rewrite.hpp"

namespace srsdual {

Dfa irr_dfa(const Srs& system) {
  RedexMatcher matcher(system);
  const std::size_t k = system.alphabet.size();
  const std::size_t n = matcher.state_count();
  constexpr State kSink = ~State{0};
  std::vector<State> index(n, kSink);
  Dfa out;
  out.alphabet_size = k;
  for (State q = 0; q < n; ++q)
    if (matcher.rule_at(q) < 0) index[q] = out.add_state(true);
  auto sink = out.add_state(false);
  for (State q = 0; q < n; ++q) {
    if (index[q] == kSink) continue;
    for (std::uint32_t c = 0; c < k; ++c) {
      auto t = matcher.next(q, Symbol{c});
      out.set(index[q], Symbol{c}, index[t] == kSink ? sink : index[t]);
    }
  }
  out.start = index[matcher.root()] == kSink ? sink : index[matcher.root()];
  return prune_unreachable(out);
}

}  // namespace srsdual
