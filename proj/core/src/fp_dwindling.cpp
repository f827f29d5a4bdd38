#include "srsdual/fp_dwindling.hpp"

#include "srsdual/confluence.hpp"
#include "srsdual/error.hpp"
#include "srsdual/monadic.hpp"

namespace srsdual {

FpInstance FpInstance::make(Srs system, Word alpha, std::size_t fuel) {
  system.validate();
  if (!classify(system).dwindling) throw Error(ErrorKind::NotDwindling, "system is not dwindling");
  for (auto s : alpha)
    if (!system.alphabet.contains(s)) throw Error(ErrorKind::SymbolOutsideAlphabet, "alpha uses an unknown symbol");
  if (alpha.empty()) throw Error(ErrorKind::AlphaEmpty, "alpha must be non-empty");
  if (!is_irreducible(system, alpha)) throw Error(ErrorKind::AlphaReducible, "alpha must be irreducible");
  auto ev = check_convergence(system, fuel);
  if (ev.locally_confluent != Evidence::Proved)
    throw Error(ErrorKind::NotConvergent, "critical pairs are not all joinable");
  return FpInstance(std::move(system), std::move(alpha), fuel);
}

std::size_t FpInstance::iteration_bound() const noexcept { return 2 * system_.max_lhs() * alpha_.size(); }

namespace {

// Counts positions i < min(|stack|, |W|) where the stack and W disagree.
class PrefixTracker : public StackListener {
 public:
  PrefixTracker(const std::vector<Symbol>& stack, const std::vector<Symbol>& w) : stack_(stack), w_(w) {}

  void on_push(std::size_t index, Symbol s) override {
    if (index < w_.size() && w_[index] != s) ++mismatches_;
  }
  void on_pop(std::size_t index, Symbol s) override {
    if (index < w_.size() && w_[index] != s) --mismatches_;
  }
  void on_extend(Symbol s) {
    auto index = w_.size() - 1;
    if (index < stack_.size() && stack_[index] != s) ++mismatches_;
  }
  void reset() {
    mismatches_ = 0;
    for (std::size_t i = 0; i < stack_.size() && i < w_.size(); ++i)
      if (stack_[i] != w_[i]) ++mismatches_;
  }
  bool equal() const noexcept { return mismatches_ == 0 && stack_.size() == w_.size(); }

 private:
  const std::vector<Symbol>& stack_;
  const std::vector<Symbol>& w_;
  std::size_t mismatches_ = 0;
};

}  // namespace

FpOutcome run_fp_dwindling(const FpInstance& instance, const FpOptions& options) {
  const Srs& system = instance.system();
  const Word& alpha = instance.alpha();
  RedexMatcher matcher(system);
  ReductionStack stack(system, matcher, instance.fuel());
  stack.push(alpha);

  std::vector<Symbol> w;
  PrefixTracker tracker(stack.symbols(), w);
  FpOutcome out;
  if (options.record_trace) out.trace.push_back(stack.word());
  const std::size_t bound = instance.iteration_bound();

  for (std::size_t j = 1; j <= bound; ++j) {
    // W[j] = alpha^(j-1)[j]
    if (stack.size() < j) break;
    Symbol next = stack.symbols()[j - 1];
    w.push_back(next);
    tracker.on_extend(next);
    stack.push(next, &tracker);
    out.iterations = j;
    if (options.record_trace) out.trace.push_back(stack.word());
    if (tracker.equal()) {
      FpSolution sol;
      sol.w = Word(w);
      sol.iterations = j;
      sol.trace = out.trace;
      if (normalize(system, alpha + sol.w, instance.fuel()) != sol.w)
        throw Error(ErrorKind::VerificationFailed, "fixed point candidate failed re-normalization");
      sol.verified = true;
      out.solution = std::move(sol);
      return out;
    }
    if (stack.size() <= j) break;
  }
  return out;
}

std::optional<FpSolution> solve_fp_dwindling(const FpInstance& instance, const FpOptions& options) {
  return run_fp_dwindling(instance, options).solution;
}

Decomposition decompose_reduction(const Word& a, const Word& x, const Srs& system, std::size_t fuel) {
  if (!classify(system).dwindling) throw Error(ErrorKind::NotDwindling, "system is not dwindling");
  if (!is_irreducible(system, a)) throw Error(ErrorKind::InputReducible, "A must be irreducible");
  // Labels are 1-based positions in A.X. A dwindling step keeps the first
  // |rhs| symbols of the redex, so labels survive in order.
  std::vector<Symbol> cur(a.begin(), a.end());
  cur.insert(cur.end(), x.begin(), x.end());
  std::vector<std::size_t> label(cur.size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i + 1;
  Decomposition out;
  while (true) {
    auto redex = leftmost_redex(system, Word(cur));
    if (!redex) break;
    if (out.steps == fuel) throw Error(ErrorKind::FuelExhausted, "rewrite budget exhausted");
    ++out.steps;
    const auto& rule = system.rules[redex->rule];
    auto first = static_cast<std::ptrdiff_t>(redex->position + rule.rhs.size());
    auto last = static_cast<std::ptrdiff_t>(redex->position + rule.lhs.size());
    cur.erase(cur.begin() + first, cur.begin() + last);
    label.erase(label.begin() + first, label.begin() + last);
  }
  out.normal_form = Word(cur);
  // Prefer the largest b for which the remainder embeds in X.
  const std::size_t s = cur.size();
  for (std::size_t b = std::min(a.size(), s) + 1; b-- > 0;) {
    if (!std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(b), cur.begin())) continue;
    std::vector<std::size_t> beta;
    std::size_t p = 0;
    for (std::size_t i = b; i < s; ++i) {
      while (p < x.size() && x[p] != cur[i]) ++p;
      if (p == x.size()) break;
      beta.push_back(++p);
    }
    if (beta.size() == s - b) {
      out.b = b;
      out.beta = std::move(beta);
      return out;
    }
  }
  throw Error(ErrorKind::VerificationFailed, "normal form does not decompose over A and X");
}

std::optional<Word> solve_fp_via_ct(const Srs& system, const Word& alpha, bool assume_terminating,
                                    std::size_t fuel) {
  MonadicOptions opts;
  opts.assume_terminating = assume_terminating;
  opts.fuel = fuel;
  auto sol = solve_ct_monadic(system, alpha, Word{}, opts);
  if (!sol) return std::nullopt;
  return sol->w;
}

}  // namespace srsdual
