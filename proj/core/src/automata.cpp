#include "srsdual/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "srsdual/error.hpp"

namespace srsdual {

namespace {

constexpr State kUnset = ~State{0};

void require_same_alphabet(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::AlphabetMismatch, "automata over alphabets of size " + std::to_string(a) +
                                                 " and " + std::to_string(b));
}

struct TupleHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto s : v) h = (h ^ s) * 0x100000001b3ULL;
    return h;
  }
};

Word trace_back(const std::vector<State>& parent, const std::vector<std::uint32_t>& via, State node) {
  std::vector<Symbol> out;
  while (parent[node] != kUnset) {
    out.push_back(Symbol{via[node]});
    node = parent[node];
  }
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

// Breadth-first search over an implicit graph with nodes 0..count-1, several
// sources, and deterministic successors. Returns the first accepting node in
// discovery order together with its path.
template <class Step, class Accept>
std::optional<Word> bfs_shortest(std::size_t count, std::size_t k, const std::vector<State>& sources,
                                 Step step, Accept accept) {
  std::vector<State> parent(count, kUnset);
  std::vector<std::uint32_t> via(count, 0);
  std::vector<char> seen(count, 0);
  std::deque<State> queue;
  for (auto s : sources)
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    if (accept(u)) return trace_back(parent, via, u);
    for (std::uint32_t c = 0; c < k; ++c) {
      auto v = step(u, Symbol{c});
      if (seen[v]) continue;
      seen[v] = 1;
      parent[v] = u;
      via[v] = c;
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t Dfa::accepting_count() const noexcept {
  return static_cast<std::size_t>(std::count(accepting.begin(), accepting.end(), 1));
}

State Dfa::run(State q, const Word& w) const noexcept {
  for (auto s : w) q = next(q, s);
  return q;
}

State Dfa::add_state(bool accept) {
  auto q = static_cast<State>(accepting.size());
  accepting.push_back(accept ? 1 : 0);
  delta.resize(delta.size() + alphabet_size, q);
  return q;
}

Dfa Dfa::empty_language(std::size_t alphabet_size) {
  Dfa d;
  d.alphabet_size = alphabet_size;
  d.add_state(false);
  return d;
}

Dfa Dfa::all_words(std::size_t alphabet_size) {
  Dfa d;
  d.alphabet_size = alphabet_size;
  d.add_state(true);
  return d;
}

Dfa Dfa::from_words(std::size_t alphabet_size, const std::vector<Word>& words) {
  Dfa d;
  d.alphabet_size = alphabet_size;
  auto sink = d.add_state(false);
  d.start = d.add_state(false);
  for (std::uint32_t c = 0; c < alphabet_size; ++c) d.set(d.start, Symbol{c}, sink);
  for (const auto& w : words) {
    State q = d.start;
    for (auto s : w) {
      if (s.id >= alphabet_size) throw Error(ErrorKind::SymbolOutsideAlphabet, "word symbol outside alphabet");
      if (d.next(q, s) == sink) {
        auto fresh = d.add_state(false);
        for (std::uint32_t c = 0; c < alphabet_size; ++c) d.set(fresh, Symbol{c}, sink);
        d.set(q, s, fresh);
      }
      q = d.next(q, s);
    }
    d.accepting[q] = 1;
  }
  for (std::uint32_t c = 0; c < alphabet_size; ++c) d.set(sink, Symbol{c}, sink);
  return prune_unreachable(d);
}

bool Mefa::accepts(const Word& w) const noexcept {
  for (auto s : starts) {
    State q = s;
    for (auto c : w) q = next(q, c);
    if (accepting[q]) return true;
  }
  return false;
}

Mefa Mefa::from_dfa(const Dfa& d) { return Mefa{d.alphabet_size, d.delta, {d.start}, d.accepting}; }

Dfa prune_unreachable(const Dfa& m) {
  std::vector<State> index(m.size(), kUnset);
  std::vector<State> order{m.start};
  index[m.start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t c = 0; c < m.alphabet_size; ++c) {
      auto t = m.next(order[i], Symbol{c});
      if (index[t] == kUnset) {
        index[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  Dfa out;
  out.alphabet_size = m.alphabet_size;
  out.start = 0;
  out.accepting.resize(order.size());
  out.delta.resize(order.size() * m.alphabet_size);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.accepting[i] = m.accepting[order[i]];
    for (std::uint32_t c = 0; c < m.alphabet_size; ++c)
      out.delta[i * m.alphabet_size + c] = index[m.next(order[i], Symbol{c})];
  }
  return out;
}

Mefa prune_unreachable(const Mefa& m) {
  std::vector<State> index(m.size(), kUnset);
  std::vector<State> order;
  for (auto s : m.starts)
    if (index[s] == kUnset) {
      index[s] = static_cast<State>(order.size());
      order.push_back(s);
    }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t c = 0; c < m.alphabet_size; ++c) {
      auto t = m.next(order[i], Symbol{c});
      if (index[t] == kUnset) {
        index[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  Mefa out;
  out.alphabet_size = m.alphabet_size;
  out.accepting.resize(order.size());
  out.delta.resize(order.size() * m.alphabet_size);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.accepting[i] = m.accepting[order[i]];
    for (std::uint32_t c = 0; c < m.alphabet_size; ++c)
      out.delta[i * m.alphabet_size + c] = index[m.next(order[i], Symbol{c})];
  }
  for (auto s : m.starts) out.starts.push_back(index[s]);
  std::sort(out.starts.begin(), out.starts.end());
  out.starts.erase(std::unique(out.starts.begin(), out.starts.end()), out.starts.end());
  return out;
}

Dfa minimize(const Dfa& input) {
  Dfa m = prune_unreachable(input);
  const std::size_t n = m.size(), k = m.alphabet_size;
  std::vector<State> cls(n);
  for (std::size_t q = 0; q < n; ++q) cls[q] = m.accepting[q] ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<State>, State> sig;
    std::vector<State> next(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<State> key;
      key.reserve(k + 1);
      key.push_back(cls[q]);
      for (std::uint32_t c = 0; c < k; ++c) key.push_back(cls[m.next(static_cast<State>(q), Symbol{c})]);
      auto [it, _] = sig.emplace(std::move(key), static_cast<State>(sig.size()));
      next[q] = it->second;
    }
    bool stable = sig.size() == classes;
    classes = sig.size();
    cls = std::move(next);
    if (stable) break;
  }
  Dfa out;
  out.alphabet_size = k;
  out.accepting.assign(classes, 0);
  out.delta.assign(classes * k, 0);
  for (std::size_t q = 0; q < n; ++q) {
    out.accepting[cls[q]] = m.accepting[q];
    for (std::uint32_t c = 0; c < k; ++c) out.delta[cls[q] * k + c] = cls[m.next(static_cast<State>(q), Symbol{c})];
  }
  out.start = cls[m.start];
  return prune_unreachable(out);
}

// Hat states track "the word read so far ends with a after a word of L(m)".
// hat(r) behaves like r but accepts; one hat per distinct a-successor of an
// accepting state.
Dfa concat_letter(const Dfa& m, Symbol a) {
  if (a.id >= m.alphabet_size)
    throw Error(ErrorKind::SymbolOutsideAlphabet, "letter outside the automaton alphabet");
  const std::size_t n = m.size(), k = m.alphabet_size;
  std::vector<State> hat(n, kUnset);
  Dfa out;
  out.alphabet_size = k;
  for (std::size_t q = 0; q < n; ++q) out.add_state(false);
  for (std::size_t q = 0; q < n; ++q)
    if (m.accepting[q]) {
      auto r = m.next(static_cast<State>(q), a);
      if (hat[r] == kUnset) hat[r] = out.add_state(true);
    }
  auto fill = [&](State from, State like) {
    for (std::uint32_t c = 0; c < k; ++c) {
      auto t = m.next(like, Symbol{c});
      out.set(from, Symbol{c}, (m.accepting[like] && c == a.id) ? hat[t] : t);
    }
  };
  for (std::size_t q = 0; q < n; ++q) {
    fill(static_cast<State>(q), static_cast<State>(q));
    if (hat[q] != kUnset) fill(hat[q], static_cast<State>(q));
  }
  out.start = m.start;
  return prune_unreachable(out);
}

Dfa concat_word(const Dfa& m, const Word& z) {
  Dfa out = m;
  for (auto s : z) out = concat_letter(out, s);
  return out;
}

Dfa intersect_dfa(const Dfa& m1, const Dfa& m2) {
  require_same_alphabet(m1.alphabet_size, m2.alphabet_size);
  const std::size_t k = m1.alphabet_size;
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> order;
  auto key = [](State a, State b) { return (std::uint64_t{a} << 32) | b; };
  Dfa out;
  out.alphabet_size = k;
  auto visit = [&](State a, State b) {
    auto [it, fresh] = index.emplace(key(a, b), static_cast<State>(order.size()));
    if (fresh) {
      order.emplace_back(a, b);
      out.add_state(m1.accepting[a] && m2.accepting[b]);
    }
    return it->second;
  };
  out.start = visit(m1.start, m2.start);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t c = 0; c < k; ++c) {
      auto [a, b] = order[i];
      auto t = visit(m1.next(a, Symbol{c}), m2.next(b, Symbol{c}));
      out.set(static_cast<State>(i), Symbol{c}, t);
    }
  return out;
}

Dfa union_dfa(const std::vector<Dfa>& parts, std::size_t alphabet_size) {
  if (parts.empty()) return Dfa::empty_language(alphabet_size);
  for (const auto& p : parts) require_same_alphabet(p.alphabet_size, alphabet_size);
  if (parts.size() == 1) return parts.front();
  std::unordered_map<std::vector<State>, State, TupleHash> index;
  std::vector<std::vector<State>> order;
  Dfa out;
  out.alphabet_size = alphabet_size;
  auto visit = [&](std::vector<State> tuple) {
    auto it = index.find(tuple);
    if (it != index.end()) return it->second;
    bool acc = false;
    for (std::size_t i = 0; i < parts.size(); ++i) acc = acc || parts[i].accepting[tuple[i]];
    auto id = out.add_state(acc);
    index.emplace(tuple, id);
    order.push_back(std::move(tuple));
    return id;
  };
  std::vector<State> start;
  for (const auto& p : parts) start.push_back(p.start);
  out.start = visit(start);
  std::vector<State> next(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t c = 0; c < alphabet_size; ++c) {
      for (std::size_t j = 0; j < parts.size(); ++j) next[j] = parts[j].next(order[i][j], Symbol{c});
      auto t = visit(next);
      out.set(static_cast<State>(i), Symbol{c}, t);
    }
  return out;
}

Dfa complement_dfa(const Dfa& m) {
  Dfa out = m;
  for (auto& a : out.accepting) a = a ? 0 : 1;
  return out;
}

Mefa left_quotient_mefa(const Dfa& m2, const Dfa& m1) {
  require_same_alphabet(m1.alphabet_size, m2.alphabet_size);
  const std::size_t k = m1.alphabet_size, n2 = m2.size();
  std::vector<char> seen(m1.size() * n2, 0);
  std::deque<std::pair<State, State>> queue{{m1.start, m2.start}};
  seen[m1.start * n2 + m2.start] = 1;
  std::vector<char> is_start(n2, 0);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (m1.accepting[a]) is_start[b] = 1;
    for (std::uint32_t c = 0; c < k; ++c) {
      auto na = m1.next(a, Symbol{c});
      auto nb = m2.next(b, Symbol{c});
      if (!seen[na * n2 + nb]) {
        seen[na * n2 + nb] = 1;
        queue.emplace_back(na, nb);
      }
    }
  }
  Mefa out{k, m2.delta, {}, m2.accepting};
  for (State q = 0; q < n2; ++q)
    if (is_start[q]) out.starts.push_back(q);
  if (out.starts.empty()) {
    auto e = Dfa::empty_language(k);
    return Mefa::from_dfa(e);
  }
  return prune_unreachable(out);
}

std::optional<Word> shortest_accepted(const Dfa& m) { return shortest_accepted(Mefa::from_dfa(m)); }

std::optional<Word> shortest_accepted(const Mefa& m) {
  return bfs_shortest(
      m.size(), m.alphabet_size, m.starts, [&](State u, Symbol c) { return m.next(u, c); },
      [&](State u) { return m.accepting[u] != 0; });
}

std::optional<Word> mefa_intersect_witness(const Mefa& a1, const Mefa& a2) {
  require_same_alphabet(a1.alphabet_size, a2.alphabet_size);
  const std::size_t n2 = a2.size();
  std::vector<State> sources;
  for (auto s1 : a1.starts)
    for (auto s2 : a2.starts) sources.push_back(static_cast<State>(s1 * n2 + s2));
  std::sort(sources.begin(), sources.end());
  return bfs_shortest(
      a1.size() * n2, a1.alphabet_size, sources,
      [&](State u, Symbol c) { return static_cast<State>(a1.next(u / n2, c) * n2 + a2.next(u % n2, c)); },
      [&](State u) { return a1.accepting[u / n2] && a2.accepting[u % n2]; });
}

std::vector<char> dead_states(const Dfa& m) {
  const std::size_t n = m.size(), k = m.alphabet_size;
  std::vector<std::vector<State>> rev(n);
  for (State q = 0; q < n; ++q)
    for (std::uint32_t c = 0; c < k; ++c) rev[m.next(q, Symbol{c})].push_back(q);
  std::vector<char> live(n, 0);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q)
    if (m.accepting[q]) {
      live[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto p : rev[q])
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<char> dead(n);
  for (State q = 0; q < n; ++q) dead[q] = live[q] ? 0 : 1;
  return dead;
}

namespace {

struct StateAnalysis {
  std::vector<StateColor> color;
  std::vector<std::optional<Word>> first;
  std::vector<std::optional<Word>> second;
};

// For each N-state q: the shortlex-least word x in L(m) with N(x) = q, and the
// least such word different from it.
StateAnalysis analyse(const Dfa& m, const Dfa& n) {
  require_same_alphabet(m.alphabet_size, n.alphabet_size);
  const std::size_t k = m.alphabet_size, nn = n.size(), np = m.size() * nn;
  auto dead = dead_states(n);
  StateAnalysis out;
  out.color.assign(nn, StateColor::Blue);
  out.first.assign(nn, std::nullopt);
  out.second.assign(nn, std::nullopt);

  std::vector<State> parent(np, kUnset);
  std::vector<std::uint32_t> via(np, 0);
  std::vector<char> seen(np, 0);
  std::deque<State> queue;
  State s0 = static_cast<State>(m.start * nn + n.start);
  seen[s0] = 1;
  queue.push_back(s0);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    State qm = u / static_cast<State>(nn), qn = u % static_cast<State>(nn);
    if (m.accepting[qm] && !out.first[qn]) out.first[qn] = trace_back(parent, via, u);
    for (std::uint32_t c = 0; c < k; ++c) {
      State v = static_cast<State>(m.next(qm, Symbol{c}) * nn + n.next(qn, Symbol{c}));
      if (seen[v]) continue;
      seen[v] = 1;
      parent[v] = u;
      via[v] = c;
      queue.push_back(v);
    }
  }

  for (State q = 0; q < nn; ++q) {
    if (dead[q]) {
      out.color[q] = StateColor::Dead;
      continue;
    }
    if (!out.first[q]) continue;
    const Word& w1 = *out.first[q];
    const State len = static_cast<State>(w1.size());
    const State span = len + 2;  // tracker: 0..len matched prefix, len+1 diverged
    auto step = [&](State u, Symbol c) {
      State t = u % span, p = u / span;
      State qm = p / static_cast<State>(nn), qn = p % static_cast<State>(nn);
      State np2 = static_cast<State>(m.next(qm, c) * nn + n.next(qn, c));
      State nt = (t < len && w1[t] == c) ? t + 1 : len + 1;
      return np2 * span + nt;
    };
    auto accept = [&](State u) {
      State t = u % span, p = u / span;
      State qm = p / static_cast<State>(nn), qn = p % static_cast<State>(nn);
      return m.accepting[qm] && qn == q && t != len;
    };
    out.second[q] = bfs_shortest(np * span, k, {s0 * span}, step, accept);
    out.color[q] = out.second[q] ? StateColor::Green : StateColor::Orange;
  }
  return out;
}

}  // namespace

std::vector<StateColor> classify_states(const Dfa& m, const Dfa& n) { return analyse(m, n).color; }

std::optional<WitnessTriple> exists_xyz(const Dfa& m, const Dfa& n) {
  auto info = analyse(m, n);
  const std::size_t nn = n.size(), k = n.alphabet_size;
  for (State q = 0; q < nn; ++q) {
    if (info.color[q] != StateColor::Green) continue;
    auto z = bfs_shortest(
        nn, k, {q}, [&](State u, Symbol c) { return n.next(u, c); },
        [&](State u) { return n.accepting[u] != 0; });
    if (z) return WitnessTriple{*info.first[q], *info.second[q], *z};
  }
  std::vector<State> orange;
  for (State q = 0; q < nn; ++q)
    if (info.color[q] == StateColor::Orange) orange.push_back(q);
  for (std::size_t i = 0; i < orange.size(); ++i)
    for (std::size_t j = i + 1; j < orange.size(); ++j) {
      auto q1 = orange[i], q2 = orange[j];
      auto z = bfs_shortest(
          nn * nn, k, {static_cast<State>(q1 * nn + q2)},
          [&](State u, Symbol c) {
            return static_cast<State>(n.next(u / static_cast<State>(nn), c) * nn +
                                      n.next(u % static_cast<State>(nn), c));
          },
          [&](State u) { return n.accepting[u / nn] && n.accepting[u % nn]; });
      if (z) return WitnessTriple{*info.first[q1], *info.first[q2], *z};
    }
  return std::nullopt;
}

std::string dump_dfa(const Dfa& m, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "start: " << m.start << '\n' << "accept:";
  for (State q = 0; q < m.size(); ++q)
    if (m.accepting[q]) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < m.size(); ++q)
    for (std::uint32_t c = 0; c < m.alphabet_size; ++c) {
      Symbol s{c};
      out << q << ' ' << (alphabet.contains(s) ? alphabet.name(s) : std::to_string(c)) << " -> "
          << m.next(q, s) << '\n';
    }
  return out.str();
}

}  // namespace srsdual
