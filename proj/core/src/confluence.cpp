#include "srsdual/confluence.hpp"

#include <deque>
#include <set>
#include <tuple>
#include <unordered_set>

#include "srsdual/error.hpp"

namespace srsdual {

std::vector<CriticalPair> critical_pairs(const Srs& system) {
  std::vector<CriticalPair> out;
  std::set<std::tuple<Word, Word, Word>> seen;
  auto add = [&](CriticalPair cp) {
    auto lo = std::min(cp.left, cp.right), hi = std::max(cp.left, cp.right);
    if (seen.emplace(cp.peak, lo, hi).second) out.push_back(std::move(cp));
  };
  const auto& rs = system.rules;
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const auto& l1 = rs[i].lhs;
      const auto& l2 = rs[j].lhs;
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (l1.drop_prefix(l1.size() - k) != l2.prefix(k)) continue;
        auto tail = l2.drop_prefix(k);
        add(CriticalPair{l1 + tail, rs[i].rhs + tail, l1.prefix(l1.size() - k) + rs[j].rhs,
                         OverlapKind::SuffixPrefix, i, j});
      }
      if (i == j || l2.size() > l1.size()) continue;
      for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
        if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        add(CriticalPair{l1, rs[i].rhs, l1.prefix(p) + rs[j].rhs + l1.drop_prefix(p + l2.size()),
                         OverlapKind::Containment, i, j});
      }
    }
  return out;
}

namespace {

constexpr std::size_t kDescendantBudget = 20'000;

// Exhaustive descendant sets when termination is not established: common
// element means joinable; both sets closed within budget and disjoint means
// not joinable.
Evidence joinable_by_search(const Srs& system, const Word& a, const Word& b) {
  std::unordered_set<Word, WordHash> sa{a}, sb{b};
  std::deque<Word> qa{a}, qb{b};
  while (!qa.empty() || !qb.empty()) {
    if (sa.size() + sb.size() > kDescendantBudget) return Evidence::Unknown;
    auto expand = [&](std::deque<Word>& q, std::unordered_set<Word, WordHash>& mine,
                      const std::unordered_set<Word, WordHash>& other) {
      if (q.empty()) return false;
      auto w = std::move(q.front());
      q.pop_front();
      for (auto& s : rewrite_successors(system, w)) {
        if (other.count(s)) return true;
        if (mine.insert(s).second) q.push_back(std::move(s));
      }
      return false;
    };
    if (expand(qa, sa, sb) || expand(qb, sb, sa)) return Evidence::Proved;
  }
  for (const auto& w : sa)
    if (sb.count(w)) return Evidence::Proved;
  return Evidence::Refuted;
}

}  // namespace

ConvergenceEvidence check_convergence(const Srs& system, std::size_t fuel) {
  ConvergenceEvidence ev;
  ev.terminating = classify(system).length_reducing ? Evidence::Proved : Evidence::Unknown;
  ev.locally_confluent = Evidence::Proved;
  for (auto& cp : critical_pairs(system)) {
    Evidence verdict = Evidence::Unknown;
    try {
      auto nl = normalize(system, cp.left, fuel);
      auto nr = normalize(system, cp.right, fuel);
      if (nl == nr) {
        verdict = Evidence::Proved;
      } else if (ev.terminating == Evidence::Proved) {
        verdict = Evidence::Refuted;
      } else {
        verdict = joinable_by_search(system, cp.left, cp.right);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::FuelExhausted) throw;
      verdict = Evidence::Unknown;
    }
    if (verdict == Evidence::Proved) continue;
    if (verdict == Evidence::Refuted) {
      ev.locally_confluent = Evidence::Refuted;
      ev.witness = cp;
      break;
    }
    if (!ev.witness) ev.witness = cp;
    ev.locally_confluent = Evidence::Unknown;
  }
  return ev;
}

std::string_view to_string(Evidence e) {
  switch (e) {
    case Evidence::Proved: return "proved";
    case Evidence::Refuted: return "refuted";
    case Evidence::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(OverlapKind k) {
  return k == OverlapKind::SuffixPrefix ? "suffix-prefix" : "containment";
}

}  // namespace srsdual
