#include "srsdual/validation/systems.hpp"

#include <algorithm>
#include <functional>

#include "srsdual/confluence.hpp"
#include "srsdual/rewrite.hpp"

namespace srsdual::validation {

namespace {

std::vector<Rule> candidate_rules(RhsShape shape, std::size_t max_lhs) {
  std::vector<Rule> rules;
  for (const auto& lhs : words_up_to(2, max_lhs)) {
    if (lhs.empty()) continue;
    if (shape == RhsShape::ProperPrefix) {
      for (std::size_t n = 0; n < lhs.size(); ++n) rules.push_back({lhs, lhs.prefix(n)});
    } else {
      rules.push_back({lhs, Word{}});
      for (std::uint32_t s = 0; s < 2; ++s)
        if (lhs.size() >= 2 || lhs[0].id != s) rules.push_back({lhs, Word{Symbol{s}}});
    }
  }
  return rules;
}

Srs make_system(std::vector<Rule> rules) {
  Srs s;
  s.alphabet = Alphabet{"a", "b"};
  s.rules = std::move(rules);
  return s;
}

void choose(const std::vector<Rule>& pool, std::size_t from, std::size_t left, std::vector<Rule>& current,
            std::vector<Srs>& out) {
  out.push_back(make_system(current));
  if (left == 0) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    choose(pool, i + 1, left - 1, current, out);
    current.pop_back();
  }
}

std::vector<Srs> sweep_family(RhsShape shape) {
  std::vector<Srs> out;
  for (auto& s : enumerate_systems(shape)) {
    if (!classify(s).inter_reduced || !renaming_terminates(s)) continue;
    if (check_convergence(s).locally_confluent != Evidence::Proved) continue;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Srs> enumerate_systems(RhsShape shape, std::size_t max_rules, std::size_t max_lhs) {
  auto pool = candidate_rules(shape, max_lhs);
  std::vector<Srs> out;
  std::vector<Rule> current;
  choose(pool, 0, max_rules, current, out);
  return out;
}

bool renaming_terminates(const Srs& system) {
  const std::size_t k = system.alphabet.size();
  std::vector<std::vector<std::uint32_t>> edges(k);
  for (const auto& r : system.rules) {
    if (r.lhs.size() > r.rhs.size()) continue;
    if (r.lhs.size() != 1 || r.rhs.size() != 1) return false;
    edges[r.lhs[0].id].push_back(r.rhs[0].id);
  }
  // Depth-first cycle search; 0 = new, 1 = on the stack, 2 = done.
  std::vector<int> mark(k, 0);
  std::function<bool(std::uint32_t)> cyclic = [&](std::uint32_t v) {
    mark[v] = 1;
    for (auto w : edges[v])
      if (mark[w] == 1 || (mark[w] == 0 && cyclic(w))) return true;
    mark[v] = 2;
    return false;
  };
  for (std::uint32_t v = 0; v < k; ++v)
    if (mark[v] == 0 && cyclic(v)) return false;
  return true;
}

std::vector<Srs> dwindling_sweep_family() { return sweep_family(RhsShape::ProperPrefix); }
std::vector<Srs> monadic_sweep_family() { return sweep_family(RhsShape::AtMostOne); }

std::vector<Word> irreducible_words(const Srs& system, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  for (auto& w : words_up_to(system.alphabet.size(), max_len))
    if (w.size() >= min_len && is_irreducible(system, w)) out.push_back(std::move(w));
  return out;
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> count(1, max_states);
  std::size_t n = count(rng);
  std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
  std::bernoulli_distribution accept(0.5);
  Dfa d;
  d.alphabet_size = alphabet_size;
  d.delta.resize(n * alphabet_size);
  for (auto& t : d.delta) t = target(rng);
  d.accepting.resize(n);
  for (auto& a : d.accepting) a = accept(rng) ? 1 : 0;
  d.start = target(rng);
  return d;
}

std::vector<NamedMachine> fixture_machines() {
  static const char* const accept_a = R"(states: q0 q1 q2 q3 qa qr
input: a b
markers: ¢ $
start: q0
accept: qa
reject: qr
q0 , ¢ -> q1 , R
q1 , a -> q2 , R
q2 , $ -> q3 , L
q3 , a -> qa , L
)";
  static const char* const even_a = R"(states: q0 e o back fin qa qr
input: a b
markers: ¢ $
start: q0
accept: qa
reject: qr
q0 , ¢ -> e , R
e , a -> o , R
e , b -> e , R
o , a -> e , R
o , b -> o , R
e , $ -> back , L
back , a -> back , L
back , b -> back , L
back , ¢ -> fin , R
fin , a -> qa , L
fin , b -> qa , L
fin , $ -> qa , L
)";
  static const char* const reject_all = R"(states: q0 qa qr
input: a b
markers: ¢ $
start: q0
accept: qa
reject: qr
q0 , ¢ -> qr , R
)";
  return {{"accept_a", parse_dlba(accept_a)}, {"even_a", parse_dlba(even_a)}, {"reject_all", parse_dlba(reject_all)}};
}

}  // namespace srsdual::validation
