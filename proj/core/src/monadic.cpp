#include "srsdual/monadic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "srsdual/confluence.hpp"
#include "srsdual/error.hpp"
#include "srsdual/irr.hpp"

namespace srsdual {

namespace {

using LangId = std::uint32_t;

struct SolIds {
  LangId left;
  LangId right;
  SolCase tag;
  std::size_t split1, split2;
  Word a, b, z;
};

std::string serialize(const Dfa& d) {
  std::string key;
  key.reserve((d.delta.size() + d.accepting.size() + 2) * 4);
  auto put = [&](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(static_cast<std::uint32_t>(d.size()));
  put(d.start);
  for (auto a : d.accepting) key.push_back(a);
  for (auto t : d.delta) put(t);
  return key;
}

// v-suffix test: accepting states become those reaching an accepting state on v.
Dfa accepting_before(const Dfa& d, const Word& v) {
  Dfa out = d;
  for (State q = 0; q < d.size(); ++q) out.accepting[q] = d.accepting[d.run(q, v)];
  return out;
}

}  // namespace

struct MonadicSolver::Impl {
  Srs system;
  MonadicOptions options;
  std::size_t k;
  std::size_t max_lhs;
  RedexMatcher matcher;
  Dfa irr;

  std::vector<Dfa> langs;
  std::vector<char> lang_empty;
  std::unordered_map<std::string, LangId> lang_index;

  std::map<std::pair<Word, Word>, LangId> rf1_cache;
  std::map<std::pair<Word, Word>, LangId> rf_cache;
  std::map<std::pair<LangId, Word>, LangId> concat_cache;
  std::map<std::pair<Word, Word>, std::vector<SolIds>> sol_cache;
  std::map<std::pair<LangId, LangId>, Mefa> quotient_cache;
  std::map<std::pair<LangId, LangId>, std::optional<Word>> meet_cache;
  std::map<std::tuple<LangId, LangId, LangId, LangId>, std::optional<Word>> quotient_meet_cache;
  std::map<std::pair<LangId, LangId>, std::optional<WitnessTriple>> xyz_cache;

  Impl(Srs s, MonadicOptions o)
      : system(std::move(s)), options(o), k(system.alphabet.size()), max_lhs(system.max_lhs()),
        matcher(system), irr(minimize(irr_dfa(system))) {}

  Word nf(const Word& w) const {
    ReductionStack st(system, matcher, options.fuel);
    st.push(w);
    return st.word();
  }

  Word nf(const Word& a, const Word& b) const {
    ReductionStack st(system, matcher, options.fuel);
    st.push(a);
    st.push(b);
    return st.word();
  }

  void check_word(const Word& w) const {
    for (auto s : w)
      if (!system.alphabet.contains(s))
        throw Error(ErrorKind::SymbolOutsideAlphabet, "input uses a symbol outside the alphabet");
  }

  void require_irreducible(const Word& w, const char* what) const {
    check_word(w);
    if (!is_irreducible(system, w))
      throw Error(ErrorKind::InputReducible, std::string(what) + " must be irreducible");
  }

  LangId intern(const Dfa& d) {
    Dfa m = minimize(d);
    auto key = serialize(m);
    auto it = lang_index.find(key);
    if (it != lang_index.end()) return it->second;
    auto id = static_cast<LangId>(langs.size());
    lang_empty.push_back(!shortest_accepted(m).has_value());
    langs.push_back(std::move(m));
    lang_index.emplace(std::move(key), id);
    return id;
  }

  // Frontier construction for {z in IRR : (w z) normalizes to a}. States are
  // (u, f): u is the normal form of w and the part of z read so far, f the
  // frontier height. Symbols at positions >= f are letters of z appended
  // since the last reduction, so a redex lying entirely there makes z
  // reducible. Once |u| >= f + maxlhs - 1 no later redex can reach below f.
  LangId rf1_id(const Word& w, const Word& a) {
    if (a.size() > 1) throw Error(ErrorKind::InvalidArgument, "target must be empty or one letter");
    require_irreducible(w, "source word");
    check_word(a);
    auto key = std::make_pair(w, a);
    if (auto it = rf1_cache.find(key); it != rf1_cache.end()) return it->second;

    using Key = std::pair<std::vector<Symbol>, std::size_t>;
    std::map<Key, State> index;
    std::vector<Key> order;
    Dfa d;
    d.alphabet_size = k;
    const State sink = d.add_state(false);
    auto visit = [&](Key key) {
      auto it = index.find(key);
      if (it != index.end()) return it->second;
      State q = d.add_state(key.first == a.vec());
      index.emplace(key, q);
      order.push_back(std::move(key));
      return q;
    };
    d.start = visit(Key{w.vec(), w.size()});
    for (std::size_t i = 0; i < order.size(); ++i) {
      State from = static_cast<State>(i + 1);
      for (std::uint32_t c = 0; c < k; ++c) {
        auto u = order[i].first;
        auto f = order[i].second;
        u.push_back(Symbol{c});
        bool dead = false;
        std::size_t steps = 0;
        while (true) {
          const Rule* hit = nullptr;
          for (const auto& r : system.rules)
            if (r.lhs.size() <= u.size() &&
                std::equal(r.lhs.begin(), r.lhs.end(), u.end() - static_cast<std::ptrdiff_t>(r.lhs.size()))) {
              hit = &r;
              break;
            }
          if (!hit) break;
          std::size_t start = u.size() - hit->lhs.size();
          if (start >= f) {
            dead = true;
            break;
          }
          if (++steps > options.fuel) throw Error(ErrorKind::FuelExhausted, "rewrite budget exhausted");
          u.resize(start);
          u.insert(u.end(), hit->rhs.begin(), hit->rhs.end());
          f = u.size();
        }
        if (!dead && u.size() + 1 >= f + max_lhs && u.size() > a.size()) dead = true;
        d.set(from, Symbol{c}, dead ? sink : visit(Key{std::move(u), f}));
      }
    }
    for (std::uint32_t c = 0; c < k; ++c) d.set(sink, Symbol{c}, sink);
    auto id = intern(intersect_dfa(d, irr));
    rf1_cache.emplace(std::move(key), id);
    return id;
  }

  LangId concat_id(LangId base, const Word& z) {
    if (z.empty()) return base;
    auto key = std::make_pair(base, z);
    if (auto it = concat_cache.find(key); it != concat_cache.end()) return it->second;
    auto id = intern(concat_word(langs[base], z));
    concat_cache.emplace(std::move(key), id);
    return id;
  }

  std::vector<Word> letters_or_empty() const {
    std::vector<Word> out{Word{}};
    for (std::uint32_t c = 0; c < k; ++c) out.push_back(Word{Symbol{c}});
    return out;
  }

  LangId rf_id(const Word& x, const Word& y) {
    require_irreducible(x, "source word");
    require_irreducible(y, "target word");
    auto key = std::make_pair(x, y);
    if (auto it = rf_cache.find(key); it != rf_cache.end()) return it->second;
    std::vector<Dfa> parts;
    for (std::size_t i = 0; i <= x.size(); ++i) {
      auto x1 = x.prefix(i), x2 = x.drop_prefix(i);
      for (const auto& a : letters_or_empty()) {
        auto x1a = x1 + a;
        if (!y.starts_with(x1a)) continue;
        auto part = concat_id(rf1_id(x2, a), y.drop_prefix(x1a.size()));
        if (!lang_empty[part]) parts.push_back(langs[part]);
      }
    }
    auto id = intern(intersect_dfa(union_dfa(parts, k), irr));
    rf_cache.emplace(std::move(key), id);
    return id;
  }

  const std::vector<SolIds>& sol_ids(const Word& a1, const Word& a2) {
    auto key = std::make_pair(a1, a2);
    if (auto it = sol_cache.find(key); it != sol_cache.end()) return it->second;
    require_irreducible(a1, "alpha1");
    require_irreducible(a2, "alpha2");
    std::vector<SolIds> out;
    auto ext = letters_or_empty();
    for (std::size_t i1 = 0; i1 <= a1.size(); ++i1)
      for (const auto& a : ext)
        for (std::size_t i2 = 0; i2 <= a2.size(); ++i2)
          for (const auto& b : ext) {
            auto p = a1.prefix(i1) + a;
            auto q = a2.prefix(i2) + b;
            if (p.starts_with(q)) {
              auto z = p.drop_prefix(q.size());
              out.push_back(SolIds{rf1_id(a1.drop_prefix(i1), a),
                                   concat_id(rf1_id(a2.drop_prefix(i2), b), z), SolCase::PrefixOfLeft, i1, i2,
                                   a, b, z});
            } else if (q.starts_with(p)) {
              auto z = q.drop_prefix(p.size());
              out.push_back(SolIds{concat_id(rf1_id(a1.drop_prefix(i1), a), z),
                                   rf1_id(a2.drop_prefix(i2), b), SolCase::PrefixOfRight, i1, i2, a, b, z});
            }
          }
    return sol_cache.emplace(std::move(key), std::move(out)).first->second;
  }

  std::optional<Word> meet(LangId x, LangId y) {
    auto key = std::make_pair(x, y);
    if (auto it = meet_cache.find(key); it != meet_cache.end()) return it->second;
    std::optional<Word> w;
    if (!lang_empty[x] && !lang_empty[y]) w = shortest_accepted(intersect_dfa(langs[x], langs[y]));
    meet_cache.emplace(key, w);
    return w;
  }

  const Mefa& quotient(LangId whole, LangId prefix) {
    auto key = std::make_pair(whole, prefix);
    if (auto it = quotient_cache.find(key); it != quotient_cache.end()) return it->second;
    return quotient_cache.emplace(key, left_quotient_mefa(langs[whole], langs[prefix])).first->second;
  }

  // A common v in (w1 \ p1) and (w2 \ p2).
  std::optional<Word> quotient_meet(LangId w1, LangId p1, LangId w2, LangId p2) {
    auto key = std::make_tuple(w1, p1, w2, p2);
    if (auto it = quotient_meet_cache.find(key); it != quotient_meet_cache.end()) return it->second;
    std::optional<Word> v;
    if (!lang_empty[w1] && !lang_empty[p1] && !lang_empty[w2] && !lang_empty[p2])
      v = mefa_intersect_witness(quotient(w1, p1), quotient(w2, p2));
    quotient_meet_cache.emplace(key, v);
    return v;
  }

  // Shortest u in L(prefix) with u v in L(whole).
  Word stitch(LangId whole, LangId prefix, const Word& v) {
    auto u = shortest_accepted(intersect_dfa(langs[prefix], accepting_before(langs[whole], v)));
    if (!u) throw Error(ErrorKind::VerificationFailed, "quotient witness has no matching prefix");
    return *u;
  }

  std::optional<WitnessTriple> xyz(LangId m, LangId n) {
    auto key = std::make_pair(m, n);
    if (auto it = xyz_cache.find(key); it != xyz_cache.end()) return it->second;
    std::optional<WitnessTriple> t;
    if (!lang_empty[m] && !lang_empty[n]) t = exists_xyz(langs[m], langs[n]);
    xyz_cache.emplace(key, t);
    return t;
  }

  bool same(const Word& p, const Word& x, const Word& q, const Word& y) const {
    return normalize(system, p + x, options.fuel) == normalize(system, q + y, options.fuel);
  }
};

MonadicSolver::MonadicSolver(Srs system, MonadicOptions options) {
  system.validate();
  auto cls = classify(system);
  if (!cls.monadic) throw Error(ErrorKind::NotMonadic, "system is not monadic (some rhs is longer than one symbol)");
  if (!cls.inter_reduced)
    throw Error(ErrorKind::NotInterReduced,
                "system is not inter-reduced (some lhs contains another); inter-reduce it first");
  auto ev = check_convergence(system, options.fuel);
  if (ev.locally_confluent != Evidence::Proved)
    throw Error(ErrorKind::NotConvergent, "critical pairs are not all joinable");
  if (ev.terminating != Evidence::Proved && !options.assume_terminating)
    throw Error(ErrorKind::NotConvergent,
                "termination is not established (system is not length-reducing); pass assume_terminating to accept");
  impl_ = std::make_unique<Impl>(std::move(system), options);
}

MonadicSolver::~MonadicSolver() = default;
MonadicSolver::MonadicSolver(MonadicSolver&&) noexcept = default;
MonadicSolver& MonadicSolver::operator=(MonadicSolver&&) noexcept = default;

const Srs& MonadicSolver::system() const noexcept { return impl_->system; }

Word MonadicSolver::normal_form(const Word& w) const {
  impl_->check_word(w);
  return impl_->nf(w);
}

MpSet MonadicSolver::mp_set(const Word& alpha) {
  impl_->check_word(alpha);
  std::set<Word> members;
  auto ext = impl_->letters_or_empty();
  for (std::size_t i = 0; i <= alpha.size(); ++i)
    for (const auto& s : ext) members.insert(impl_->nf(alpha.prefix(i), s));
  return MpSet{{members.begin(), members.end()}};
}

RfLanguage MonadicSolver::rf1(const Word& w, const Word& a) {
  return RfLanguage{impl_->langs[impl_->rf1_id(w, a)], w, a};
}

RfLanguage MonadicSolver::rf(const Word& x, const Word& y) {
  return RfLanguage{impl_->langs[impl_->rf_id(x, y)], x, y};
}

std::vector<SolPair> MonadicSolver::sol_pairs(const Word& alpha1, const Word& alpha2) {
  std::vector<SolPair> out;
  for (const auto& s : impl_->sol_ids(alpha1, alpha2))
    out.push_back(SolPair{impl_->langs[s.left], impl_->langs[s.right], s.tag, s.split1, s.split2, s.a, s.b, s.z});
  return out;
}

std::optional<CtSolution> MonadicSolver::ct(const Word& alpha, const Word& beta) {
  auto& im = *impl_;
  im.check_word(alpha);
  im.check_word(beta);
  auto a = im.nf(alpha), b = im.nf(beta);
  std::optional<Word> best;
  for (const auto& pair : im.sol_ids(a, b)) {
    auto w = im.meet(pair.left, pair.right);
    if (!w) continue;
    if (!im.same(alpha, *w, beta, *w))
      throw Error(ErrorKind::VerificationFailed, "common-term witness failed re-normalization");
    if (!best || *w < *best) best = std::move(*w);
  }
  if (!best) return std::nullopt;
  return CtSolution{*best};
}

std::optional<CeSolution> MonadicSolver::ce_two(const Word& alpha1, const Word& alpha2, const Word& beta1,
                                                const Word& beta2) {
  auto& im = *impl_;
  for (const auto* w : {&alpha1, &alpha2, &beta1, &beta2}) im.check_word(*w);
  if (alpha1 == alpha2 && beta1 == beta2)
    throw Error(ErrorKind::DegenerateInput, "alpha1 = alpha2 and beta1 = beta2; X = Y solves trivially");
  auto a1 = im.nf(alpha1), a2 = im.nf(alpha2), b1 = im.nf(beta1), b2 = im.nf(beta2);
  const auto& first = im.sol_ids(a1, a2);
  const auto& second = im.sol_ids(b1, b2);
  for (const auto& i : first) {
    if (im.lang_empty[i.left] || im.lang_empty[i.right]) continue;
    for (const auto& j : second) {
      if (im.lang_empty[j.left] || im.lang_empty[j.right]) continue;
      // The alpha-side words extend the beta-side ones by a common v, or
      // the other way round.
      for (int dir = 0; dir < 2; ++dir) {
        const SolIds& longer = dir == 0 ? i : j;
        const SolIds& shorter = dir == 0 ? j : i;
        auto v = im.quotient_meet(longer.left, shorter.left, longer.right, shorter.right);
        if (!v) continue;
        Word x = im.stitch(longer.left, shorter.left, *v) + *v;
        Word y = im.stitch(longer.right, shorter.right, *v) + *v;
        if (!im.same(alpha1, x, alpha2, y) || !im.same(beta1, x, beta2, y))
          throw Error(ErrorKind::VerificationFailed, "common-equation witness failed re-normalization");
        return CeSolution{im.nf(x), im.nf(y)};
      }
    }
  }
  return std::nullopt;
}

std::optional<CeSolution> MonadicSolver::ce_one(const Word& alpha, const Word& beta) {
  auto& im = *impl_;
  im.require_irreducible(alpha, "alpha");
  im.require_irreducible(beta, "beta");
  auto mp_a = mp_set(alpha).members;
  auto mp_b = mp_set(beta).members;
  for (const auto& g1 : mp_a) {
    auto n_alpha = im.rf_id(alpha, g1);
    if (im.lang_empty[n_alpha]) continue;
    for (const auto& g2 : mp_b) {
      auto n_beta = im.rf_id(beta, g2);
      if (im.lang_empty[n_beta]) continue;
      auto t = im.xyz(n_beta, n_alpha);
      if (!t) t = im.xyz(n_alpha, n_beta);
      if (!t) continue;
      Word x = t->x + t->z, y = t->y + t->z;
      if (x == y || !is_irreducible(im.system, x) || !is_irreducible(im.system, y) ||
          !im.same(alpha, x, alpha, y) || !im.same(beta, x, beta, y))
        throw Error(ErrorKind::VerificationFailed, "one-mapping witness failed re-normalization");
      if (x < y) std::swap(x, y);
      return CeSolution{std::move(x), std::move(y)};
    }
  }
  return std::nullopt;
}

MpSet mp_set(const Srs& system, const Word& alpha, const MonadicOptions& options) {
  return MonadicSolver(system, options).mp_set(alpha);
}

RfLanguage rf1_dfa(const Srs& system, const Word& w, const Word& a, const MonadicOptions& options) {
  return MonadicSolver(system, options).rf1(w, a);
}

RfLanguage rf_dfa(const Srs& system, const Word& x, const Word& y, const MonadicOptions& options) {
  return MonadicSolver(system, options).rf(x, y);
}

std::vector<SolPair> sol_pairs(const Srs& system, const Word& alpha1, const Word& alpha2,
                               const MonadicOptions& options) {
  return MonadicSolver(system, options).sol_pairs(alpha1, alpha2);
}

std::optional<CtSolution> solve_ct_monadic(const Srs& system, const Word& alpha, const Word& beta,
                                           const MonadicOptions& options) {
  return MonadicSolver(system, options).ct(alpha, beta);
}

std::optional<CeSolution> solve_ce_two(const Srs& system, const Word& alpha1, const Word& alpha2,
                                       const Word& beta1, const Word& beta2, const MonadicOptions& options) {
  return MonadicSolver(system, options).ce_two(alpha1, alpha2, beta1, beta2);
}

std::optional<CeSolution> solve_ce_one(const Srs& system, const Word& alpha, const Word& beta,
                                       const MonadicOptions& options) {
  return MonadicSolver(system, options).ce_one(alpha, beta);
}

}  // namespace srsdual
