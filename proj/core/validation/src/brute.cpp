#include "srsdual/validation/brute.hpp"

#include <deque>
#include <set>

namespace srsdual::validation {

namespace {

std::string show(const Word& w) {
  if (w.empty()) return "_";
  std::string s;
  for (auto x : w) s += static_cast<char>('a' + x.id);
  return s;
}

}  // namespace

std::optional<std::string> check_concat_letter(const Dfa& m, Symbol a, std::size_t max_len) {
  Dfa c = concat_letter(m, a);
  if (c.size() > m.size() + m.accepting_count())
    return "state bound: " + std::to_string(c.size()) + " > " + std::to_string(m.size()) + " + " +
           std::to_string(m.accepting_count());
  if (c.accepting_count() > m.accepting_count())
    return "accepting bound: " + std::to_string(c.accepting_count()) + " > " + std::to_string(m.accepting_count());
  for (const auto& w : words_up_to(m.alphabet_size, max_len)) {
    bool expected = !w.empty() && w[w.size() - 1] == a && m.accepts(w.prefix(w.size() - 1));
    if (c.accepts(w) != expected) return "language differs on " + show(w);
  }
  return std::nullopt;
}

std::optional<std::string> check_left_quotient(const Dfa& m2, const Dfa& m1, std::size_t max_len) {
  Mefa q = left_quotient_mefa(m2, m1);
  // Pairs (m1 state, m2 state) reachable on a common u.
  std::set<std::pair<State, State>> seen{{m1.start, m2.start}};
  std::deque<std::pair<State, State>> queue{{m1.start, m2.start}};
  while (!queue.empty()) {
    auto [p, r] = queue.front();
    queue.pop_front();
    for (std::uint32_t s = 0; s < m1.alphabet_size; ++s) {
      std::pair<State, State> nx{m1.next(p, Symbol{s}), m2.next(r, Symbol{s})};
      if (seen.insert(nx).second) queue.push_back(nx);
    }
  }
  auto words = words_up_to(m1.alphabet_size, max_len);
  std::vector<Word> short_u;
  for (const auto& u : words)
    if (m1.accepts(u)) short_u.push_back(u);
  for (const auto& v : words) {
    bool exact = false;
    for (auto [p, r] : seen)
      if (m1.accepting[p] && m2.accepting[m2.run(r, v)]) exact = true;
    bool bounded = false;
    for (const auto& u : short_u)
      if (m2.accepts(u + v)) bounded = true;
    if (bounded && !exact) return "reachability check misses " + show(v);
    if (q.accepts(v) != exact) return "quotient differs on " + show(v);
  }
  return std::nullopt;
}

std::optional<std::string> check_mefa_intersection(const Mefa& a1, const Mefa& a2, std::size_t max_len) {
  auto got = mefa_intersect_witness(a1, a2);
  std::optional<Word> brute;
  for (const auto& w : words_up_to(a1.alphabet_size, max_len))
    if (a1.accepts(w) && a2.accepts(w)) {
      brute = w;
      break;
    }
  if (brute && !got) return "missed common word " + show(*brute);
  if (got && !(a1.accepts(*got) && a2.accepts(*got))) return "witness " + show(*got) + " not in both";
  if (brute && got->size() != brute->size())
    return "witness " + show(*got) + " not shortest (brute " + show(*brute) + ")";
  if (!brute && got && got->size() <= max_len) return "brute force missed " + show(*got);
  return std::nullopt;
}

std::optional<std::string> check_exists_xyz(const Dfa& m, const Dfa& n, std::size_t max_len) {
  auto got = exists_xyz(m, n);
  if (got) {
    if (got->x == got->y || !m.accepts(got->x) || !m.accepts(got->y) || !n.accepts(got->x + got->z) ||
        !n.accepts(got->y + got->z))
      return "invalid triple (" + show(got->x) + ", " + show(got->y) + ", " + show(got->z) + ")";
    return std::nullopt;
  }
  auto words = words_up_to(m.alphabet_size, max_len);
  std::vector<Word> in_m;
  for (const auto& w : words)
    if (m.accepts(w)) in_m.push_back(w);
  for (const auto& z : words) {
    const Word* first = nullptr;
    for (const auto& x : in_m) {
      if (!n.accepts(x + z)) continue;
      if (first) return "missed (" + show(*first) + ", " + show(x) + ", " + show(z) + ")";
      first = &x;
    }
  }
  return std::nullopt;
}

}  // namespace srsdual::validation
