#include "srsdual/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "srsdual/error.hpp"

namespace srsdual {

namespace {

bool matches_at(const std::vector<Symbol>& w, std::size_t p, const Word& lhs) {
  if (p + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(p));
}

[[noreturn]] void out_of_fuel(std::size_t fuel) {
  throw Error(ErrorKind::FuelExhausted,
              "rewrite budget of " + std::to_string(fuel) + " steps exhausted");
}

}  // namespace

std::optional<Redex> leftmost_redex(const Srs& system, const Word& w) {
  const auto& v = w.vec();
  for (std::size_t p = 0; p < v.size(); ++p)
    for (std::size_t i = 0; i < system.rules.size(); ++i)
      if (matches_at(v, p, system.rules[i].lhs)) return Redex{p, i};
  return std::nullopt;
}

Word apply_rule(const Srs& system, const Word& w, const Redex& redex) {
  const auto& rule = system.rules.at(redex.rule);
  if (!matches_at(w.vec(), redex.position, rule.lhs))
    throw Error(ErrorKind::InvalidArgument, "rule does not match at the given position");
  std::vector<Symbol> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(redex.position));
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(redex.position + rule.lhs.size()), w.end());
  return Word(std::move(out));
}

Word normalize(const Srs& system, const Word& w, std::size_t fuel) {
  std::size_t steps = 0;
  return normalize(system, w, fuel, steps);
}

// Gap buffer: `left` holds the symbols before the cursor, `right` the rest in
// reverse (its back is the symbol under the cursor). No redex starts left of
// the cursor.
Word normalize(const Srs& system, const Word& w, std::size_t fuel, std::size_t& steps) {
  steps = 0;
  const std::size_t back = system.max_lhs() > 0 ? system.max_lhs() - 1 : 0;
  std::vector<Symbol> left;
  std::vector<Symbol> right(w.vec().rbegin(), w.vec().rend());
  left.reserve(w.size());
  auto match_here = [&](const Word& lhs) {
    if (lhs.size() > right.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (right[right.size() - 1 - i] != lhs[i]) return false;
    return true;
  };
  while (!right.empty()) {
    const Rule* hit = nullptr;
    for (const auto& r : system.rules)
      if (match_here(r.lhs)) {
        hit = &r;
        break;
      }
    if (!hit) {
      left.push_back(right.back());
      right.pop_back();
      continue;
    }
    if (steps == fuel) out_of_fuel(fuel);
    ++steps;
    right.resize(right.size() - hit->lhs.size());
    right.insert(right.end(), hit->rhs.vec().rbegin(), hit->rhs.vec().rend());
    for (std::size_t i = 0; i < back && !left.empty(); ++i) {
      right.push_back(left.back());
      left.pop_back();
    }
  }
  return Word(std::move(left));
}

bool is_irreducible(const Srs& system, const Word& w) {
  for (const auto& r : system.rules)
    if (w.contains(r.lhs)) return false;
  return true;
}

std::vector<Word> rewrite_successors(const Srs& system, const Word& w) {
  std::vector<Word> out;
  std::unordered_set<Word, WordHash> seen;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t i = 0; i < system.rules.size(); ++i)
      if (matches_at(w.vec(), p, system.rules[i].lhs)) {
        auto next = apply_rule(system, w, Redex{p, i});
        if (seen.insert(next).second) out.push_back(std::move(next));
      }
  return out;
}

RedexMatcher::RedexMatcher(const Srs& system) : k_(system.alphabet.size()) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> trie(k_, kNone);
  suffix_rule_.push_back(-1);
  for (std::size_t i = 0; i < system.rules.size(); ++i) {
    std::uint32_t s = 0;
    for (auto c : system.rules[i].lhs) {
      auto& slot = trie[s * k_ + c.id];
      if (slot == kNone) {
        slot = static_cast<std::uint32_t>(suffix_rule_.size());
        suffix_rule_.push_back(-1);
        trie.resize(trie.size() + k_, kNone);
      }
      s = trie[s * k_ + c.id];
    }
    if (suffix_rule_[s] < 0) suffix_rule_[s] = static_cast<std::int32_t>(i);
  }
  go_.assign(trie.size(), 0);
  std::vector<std::uint32_t> fail(suffix_rule_.size(), 0);
  std::deque<std::uint32_t> queue;
  for (std::size_t c = 0; c < k_; ++c) {
    auto t = trie[c];
    if (t == kNone) {
      go_[c] = 0;
    } else {
      go_[c] = t;
      fail[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    auto inherited = suffix_rule_[fail[s]];
    if (inherited >= 0 && (suffix_rule_[s] < 0 || inherited < suffix_rule_[s])) suffix_rule_[s] = inherited;
    for (std::size_t c = 0; c < k_; ++c) {
      auto t = trie[s * k_ + c];
      if (t == kNone) {
        go_[s * k_ + c] = go_[fail[s] * k_ + c];
      } else {
        go_[s * k_ + c] = t;
        fail[t] = go_[fail[s] * k_ + c];
        queue.push_back(t);
      }
    }
  }
}

ReductionStack::ReductionStack(const Srs& system, const RedexMatcher& matcher, std::size_t fuel)
    : system_(&system), matcher_(&matcher), fuel_(fuel) {
  states_.push_back(matcher.root());
}

void ReductionStack::clear() {
  symbols_.clear();
  states_.assign(1, matcher_->root());
  steps_ = 0;
}

void ReductionStack::push(Symbol s, StackListener* listener) {
  pending_.clear();
  pending_.push_back(s);
  while (!pending_.empty()) {
    auto c = pending_.back();
    pending_.pop_back();
    auto st = matcher_->next(states_.back(), c);
    auto r = matcher_->rule_at(st);
    if (r < 0) {
      if (listener) listener->on_push(symbols_.size(), c);
      symbols_.push_back(c);
      states_.push_back(st);
      continue;
    }
    if (steps_ == fuel_) out_of_fuel(fuel_);
    ++steps_;
    const auto& rule = system_->rules[static_cast<std::size_t>(r)];
    for (std::size_t i = 1; i < rule.lhs.size(); ++i) {
      if (listener) listener->on_pop(symbols_.size() - 1, symbols_.back());
      symbols_.pop_back();
      states_.pop_back();
    }
    pending_.insert(pending_.end(), rule.rhs.vec().rbegin(), rule.rhs.vec().rend());
  }
}

void ReductionStack::push(const Word& w, StackListener* listener) {
  for (auto s : w) push(s, listener);
}

void ReductionStack::save(Snapshot& out) const {
  out.symbols = symbols_;
  out.states = states_;
}

void ReductionStack::restore(const Snapshot& in) {
  symbols_ = in.symbols;
  states_ = in.states;
}

StackNormalizer::StackNormalizer(const Srs& system) : system_(&system), matcher_(system) {}

Word StackNormalizer::operator()(const Word& w, std::size_t fuel) const {
  ReductionStack st(*system_, matcher_, fuel);
  st.push(w);
  return st.word();
}

Word StackNormalizer::operator()(const Word& a, const Word& b, std::size_t fuel) const {
  ReductionStack st(*system_, matcher_, fuel);
  st.push(a);
  st.push(b);
  return st.word();
}

}  // namespace srsdual
