#include "srsdual/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "srsdual/error.hpp"

namespace srsdual {

namespace {

// Append-and-reduce stack with an undo log, so a depth-first enumeration can
// retract the last appended symbol in time proportional to what it changed.
class UndoStack {
 public:
  UndoStack(const Srs& system, const RedexMatcher& matcher, std::size_t fuel)
      : system_(&system), matcher_(&matcher), fuel_(fuel), states_{matcher.root()} {}

  void push(Symbol s) {
    Frame f{symbols_.size(), {}};
    pending_.assign(1, s);
    std::size_t steps = 0;
    while (!pending_.empty()) {
      Symbol x = pending_.back();
      pending_.pop_back();
      symbols_.push_back(x);
      states_.push_back(matcher_->next(states_.back(), x));
      auto r = matcher_->rule_at(states_.back());
      if (r < 0) continue;
      if (steps++ == fuel_) throw Error(ErrorKind::FuelExhausted, "rewrite budget exhausted");
      const auto& rule = system_->rules[static_cast<std::size_t>(r)];
      for (std::size_t i = 0; i < rule.lhs.size(); ++i) {
        std::size_t idx = symbols_.size() - 1;
        if (idx < f.low) {
          f.popped.push_back(symbols_[idx]);
          f.low = idx;
        }
        symbols_.pop_back();
        states_.pop_back();
      }
      for (std::size_t i = rule.rhs.size(); i-- > 0;) pending_.push_back(rule.rhs[i]);
    }
    frames_.push_back(std::move(f));
  }

  void push(const Word& w) {
    for (auto s : w) push(s);
  }

  void undo() {
    Frame f = std::move(frames_.back());
    frames_.pop_back();
    symbols_.resize(f.low);
    states_.resize(f.low + 1);
    for (auto it = f.popped.rbegin(); it != f.popped.rend(); ++it) {
      symbols_.push_back(*it);
      states_.push_back(matcher_->next(states_.back(), *it));
    }
  }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  Word word() const { return Word(symbols_); }

 private:
  struct Frame {
    std::size_t low;
    std::vector<Symbol> popped;  // original symbols removed, top first
  };
  const Srs* system_;
  const RedexMatcher* matcher_;
  std::size_t fuel_;
  std::vector<Symbol> symbols_;
  std::vector<std::uint32_t> states_;
  std::vector<Frame> frames_;
  std::vector<Symbol> pending_;
};

// Depth-first enumeration in lexicographic preorder. `bound` may be lowered
// by the visitor to prune longer words.
class Enumerator {
 public:
  Enumerator(const Srs& system, const RedexMatcher& matcher, std::size_t bound, bool irreducible_only)
      : bound(bound), system_(&system), matcher_(&matcher), k_(static_cast<std::uint32_t>(system.alphabet.size())),
        irreducible_only_(irreducible_only) {}

  std::vector<UndoStack*> stacks;
  std::size_t bound;
  std::uint64_t examined = 0;
  std::vector<Symbol> w;

  template <class Visit>
  void run(Visit&& visit) {
    w.clear();
    wstates_.assign(1, matcher_->root());
    dfs(visit);
  }

 private:
  template <class Visit>
  void dfs(Visit& visit) {
    ++examined;
    visit(*this);
    for (std::uint32_t s = 0; s < k_; ++s) {
      if (w.size() + 1 > bound) return;
      Symbol sym{s};
      auto next = matcher_->next(wstates_.back(), sym);
      if (irreducible_only_ && matcher_->rule_at(next) >= 0) continue;
      w.push_back(sym);
      wstates_.push_back(next);
      try {
        for (auto* st : stacks) st->push(sym);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::FuelExhausted) throw;
        throw Error(ErrorKind::FuelExhausted,
                    std::string(e.what()) + " while normalizing with W = " + system_->alphabet.format(Word(w)));
      }
      dfs(visit);
      for (auto* st : stacks) st->undo();
      w.pop_back();
      wstates_.pop_back();
    }
  }

  const Srs* system_;
  const RedexMatcher* matcher_;
  std::uint32_t k_;
  bool irreducible_only_;
  std::vector<std::uint32_t> wstates_;
};

using Key = std::pair<Word, Word>;

}  // namespace

std::string_view to_string(OracleMode m) {
  switch (m) {
    case OracleMode::Fp: return "fp";
    case OracleMode::Ct: return "ct";
    case OracleMode::CeTwo: return "ce_two";
    case OracleMode::CeOne: return "ce_one";
  }
  return "unknown";
}

std::optional<OracleMode> parse_oracle_mode(std::string_view name) {
  for (auto m : {OracleMode::Fp, OracleMode::Ct, OracleMode::CeTwo, OracleMode::CeOne})
    if (to_string(m) == name) return m;
  if (name == "ce2") return OracleMode::CeTwo;
  if (name == "ce1") return OracleMode::CeOne;
  return std::nullopt;
}

std::size_t oracle_arity(OracleMode m) {
  switch (m) {
    case OracleMode::Fp: return 1;
    case OracleMode::Ct: return 2;
    case OracleMode::CeTwo: return 4;
    case OracleMode::CeOne: return 2;
  }
  return 0;
}

struct OracleContext::Impl {
  Srs system;
  std::size_t fuel;
  ConvergenceEvidence evidence;
  RedexMatcher matcher;
  bool length_reducing;

  Impl(Srs s, std::size_t f)
      : system(std::move(s)), fuel(f), evidence(check_convergence(system, f)), matcher(system),
        length_reducing(classify(system).length_reducing) {}

  UndoStack stack(const Word& prefix) const {
    UndoStack st(system, matcher, fuel);
    st.push(prefix);
    return st;
  }

  void check(const Word& w) const {
    for (auto s : w)
      if (!system.alphabet.contains(s)) throw Error(ErrorKind::SymbolOutsideAlphabet, "input uses an unknown symbol");
  }

  bool same(const Word& a, const Word& x, const Word& b, const Word& y) const {
    return normalize(system, a + x, fuel) == normalize(system, b + y, fuel);
  }

  void verify(bool ok) const {
    if (!ok) throw Error(ErrorKind::VerificationFailed, "oracle witness failed leftmost normalization");
  }
};

OracleContext::OracleContext(Srs system, std::size_t fuel) {
  system.validate();
  impl_ = std::make_unique<Impl>(std::move(system), fuel);
  if (impl_->evidence.locally_confluent != Evidence::Proved)
    throw Error(ErrorKind::NotConvergent, "oracle needs a system whose critical pairs are all joinable");
}

OracleContext::~OracleContext() = default;
OracleContext::OracleContext(OracleContext&&) noexcept = default;
OracleContext& OracleContext::operator=(OracleContext&&) noexcept = default;

const Srs& OracleContext::system() const noexcept { return impl_->system; }
const ConvergenceEvidence& OracleContext::evidence() const noexcept { return impl_->evidence; }

OracleAnswer OracleContext::fp(const Word& alpha, std::size_t max_len) const {
  return ct(alpha, Word{}, max_len);
}

OracleAnswer OracleContext::ct(const Word& alpha, const Word& beta, std::size_t max_len) const {
  const auto& im = *impl_;
  im.check(alpha);
  im.check(beta);
  auto a = im.stack(alpha), b = im.stack(beta);
  Enumerator en(im.system, im.matcher, max_len, false);
  en.stacks = {&a, &b};
  std::optional<Word> best;
  en.run([&](Enumerator& e) {
    if (a.symbols() == b.symbols()) {
      best = Word(e.w);
      e.bound = e.w.size() == 0 ? 0 : e.w.size() - 1;
    }
  });
  OracleAnswer ans;
  ans.words_examined = en.examined;
  if (best) {
    im.verify(im.same(alpha, *best, beta, *best));
    ans.found = true;
    ans.witnesses = {*best};
  }
  return ans;
}

OracleAnswer OracleContext::fp_irreducible(const Word& alpha, std::size_t max_len) const {
  const auto& im = *impl_;
  if (!im.length_reducing)
    throw Error(ErrorKind::InvalidArgument, "irreducible-only search needs a length-reducing system");
  im.check(alpha);
  auto a = im.stack(alpha);
  Enumerator en(im.system, im.matcher, max_len, true);
  en.stacks = {&a};
  std::optional<Word> best;
  en.run([&](Enumerator& e) {
    if (a.symbols() == e.w) {
      best = Word(e.w);
      e.bound = e.w.size() == 0 ? 0 : e.w.size() - 1;
    }
  });
  OracleAnswer ans;
  ans.words_examined = en.examined;
  if (best) {
    im.verify(im.same(alpha, *best, Word{}, *best));
    ans.found = true;
    ans.witnesses = {*best};
  }
  return ans;
}

OracleAnswer OracleContext::ce_two(const Word& alpha1, const Word& alpha2, const Word& beta1, const Word& beta2,
                                   std::size_t max_len) const {
  const auto& im = *impl_;
  for (const auto* w : {&alpha1, &alpha2, &beta1, &beta2}) im.check(*w);
  std::map<Key, Word> best_x;
  OracleAnswer ans;
  {
    auto a = im.stack(alpha1), b = im.stack(beta1);
    Enumerator en(im.system, im.matcher, max_len, false);
    en.stacks = {&a, &b};
    en.run([&](Enumerator& e) {
      Word x(e.w);
      auto [it, fresh] = best_x.try_emplace(Key{a.word(), b.word()}, x);
      if (!fresh && x < it->second) it->second = x;
    });
    ans.words_examined += en.examined;
  }
  std::optional<std::tuple<std::size_t, Word, Word>> best;
  {
    auto a = im.stack(alpha2), b = im.stack(beta2);
    Enumerator en(im.system, im.matcher, max_len, false);
    en.stacks = {&a, &b};
    en.run([&](Enumerator& e) {
      auto it = best_x.find(Key{a.word(), b.word()});
      if (it == best_x.end()) return;
      Word y(e.w);
      std::tuple<std::size_t, Word, Word> cand{it->second.size() + y.size(), it->second, y};
      if (!best || cand < *best) best = std::move(cand);
    });
    ans.words_examined += en.examined;
  }
  if (best) {
    const auto& [total, x, y] = *best;
    im.verify(im.same(alpha1, x, alpha2, y) && im.same(beta1, x, beta2, y));
    ans.found = true;
    ans.witnesses = {x, y};
  }
  return ans;
}

OracleAnswer OracleContext::ce_one(const Word& alpha, const Word& beta, std::size_t max_len) const {
  const auto& im = *impl_;
  im.check(alpha);
  im.check(beta);
  auto a = im.stack(alpha), b = im.stack(beta);
  Enumerator en(im.system, im.matcher, max_len, true);
  en.stacks = {&a, &b};
  std::vector<std::pair<Word, Key>> seen;
  en.run([&](Enumerator& e) { seen.emplace_back(Word(e.w), Key{a.word(), b.word()}); });
  std::sort(seen.begin(), seen.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  OracleAnswer ans;
  ans.words_examined = en.examined;
  std::map<Key, Word> first;
  for (auto& [w, key] : seen) {
    auto [it, fresh] = first.try_emplace(key, w);
    if (fresh) continue;
    im.verify(im.same(alpha, w, alpha, it->second) && im.same(beta, w, beta, it->second));
    ans.found = true;
    ans.witnesses = {w, it->second};
    break;
  }
  return ans;
}

OracleAnswer oracle_search(const OracleQuery& q) {
  if (q.inputs.size() != oracle_arity(q.mode))
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(q.mode)) + " takes " +
                                                std::to_string(oracle_arity(q.mode)) + " input words");
  OracleContext ctx(q.system, q.fuel);
  const auto& in = q.inputs;
  switch (q.mode) {
    case OracleMode::Fp: return ctx.fp(in[0], q.max_len);
    case OracleMode::Ct: return ctx.ct(in[0], in[1], q.max_len);
    case OracleMode::CeTwo: return ctx.ce_two(in[0], in[1], in[2], in[3], q.max_len);
    case OracleMode::CeOne: return ctx.ce_one(in[0], in[1], q.max_len);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown oracle mode");
}

NormalFormTable::NormalFormTable(const OracleContext& context, std::vector<Word> prefixes, std::size_t max_len)
    : prefixes_(std::move(prefixes)), max_len_(max_len) {
  const auto& system = context.system();
  const std::size_t k = system.alphabet.size();
  words_ = words_up_to(k, max_len);
  RedexMatcher matcher(system);
  irreducible_.reserve(words_.size());
  for (const auto& w : words_) irreducible_.push_back(is_irreducible(system, w) ? 1 : 0);
  // offset[n] = number of words shorter than n
  std::vector<std::size_t> offset(max_len + 2, 0);
  for (std::size_t n = 1, pow = 1; n <= max_len + 1; ++n, pow *= k) offset[n] = offset[n - 1] + pow;
  std::unordered_map<Word, std::uint32_t, WordHash> intern;
  for (const auto& p : prefixes_) {
    UndoStack st(system, matcher, kDefaultFuel);
    st.push(p);
    std::vector<std::uint32_t> row(words_.size());
    Enumerator en(system, matcher, max_len, false);
    en.stacks = {&st};
    en.run([&](Enumerator& e) {
      std::size_t rank = 0;
      for (auto s : e.w) rank = rank * k + s.id;
      auto [it, fresh] = intern.try_emplace(st.word(), static_cast<std::uint32_t>(intern.size()));
      row[offset[e.w.size()] + rank] = it->second;
    });
    ids_.push_back(std::move(row));
  }
}

OracleAnswer NormalFormTable::ct(std::size_t alpha, std::size_t beta) const {
  OracleAnswer ans;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    ++ans.words_examined;
    if (ids_[alpha][i] == ids_[beta][i]) {
      ans.found = true;
      ans.witnesses = {words_[i]};
      break;
    }
  }
  return ans;
}

const std::unordered_map<std::uint64_t, std::uint32_t>& NormalFormTable::best_left(std::size_t alpha1,
                                                                                      std::size_t beta1) const {
  auto key = (static_cast<std::uint64_t>(alpha1) << 32) | beta1;
  auto it = joins_.find(key);
  if (it != joins_.end()) return it->second;
  std::unordered_map<std::uint64_t, std::uint32_t> m;
  for (std::size_t i = 0; i < words_.size(); ++i)
    m.try_emplace((static_cast<std::uint64_t>(ids_[alpha1][i]) << 32) | ids_[beta1][i], static_cast<std::uint32_t>(i));
  return joins_.emplace(key, std::move(m)).first->second;
}

OracleAnswer NormalFormTable::ce_two(std::size_t alpha1, std::size_t alpha2, std::size_t beta1,
                                     std::size_t beta2) const {
  const auto& left = best_left(alpha1, beta1);
  OracleAnswer ans;
  ans.words_examined = words_.size();
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> best;  // (total, x, y), indices are shortlex ranks
  for (std::size_t j = 0; j < words_.size(); ++j) {
    if (best && words_[j].size() > std::get<0>(*best)) break;
    ++ans.words_examined;
    auto it = left.find((static_cast<std::uint64_t>(ids_[alpha2][j]) << 32) | ids_[beta2][j]);
    if (it == left.end()) continue;
    std::tuple<std::size_t, std::size_t, std::size_t> cand{words_[it->second].size() + words_[j].size(), it->second, j};
    if (!best || cand < *best) best = cand;
  }
  if (best) {
    ans.found = true;
    ans.witnesses = {words_[std::get<1>(*best)], words_[std::get<2>(*best)]};
  }
  return ans;
}

OracleAnswer NormalFormTable::ce_one(std::size_t alpha, std::size_t beta) const {
  OracleAnswer ans;
  std::unordered_map<std::uint64_t, std::size_t> first;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!irreducible_[i]) continue;
    ++ans.words_examined;
    auto [it, fresh] = first.try_emplace((static_cast<std::uint64_t>(ids_[alpha][i]) << 32) | ids_[beta][i], i);
    if (fresh) continue;
    ans.found = true;
    ans.witnesses = {words_[i], words_[it->second]};
    break;
  }
  return ans;
}

}  // namespace srsdual
