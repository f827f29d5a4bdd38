#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "srsdual/automata.hpp"
#include "srsdual/rewrite.hpp"
#include "srsdual/srs.hpp"

namespace srsdual {

struct MonadicOptions {
  std::size_t fuel = kDefaultFuel;
  // Accept a system whose termination is not established by the
  // length-reducing test (for instance rules such as a -> b).
  bool assume_terminating = false;
};

struct MpSet {
  std::vector<Word> members;  // shortlex order
};

struct RfLanguage {
  Dfa dfa;
  Word source;
  Word target;
};

enum class SolCase { PrefixOfLeft, PrefixOfRight };

// One product term of the minimal-solution family for alpha1 X = alpha2 Y.
// PrefixOfLeft:  alpha11 a = alpha21 b Z,  pair (RF(alpha12, a), RF(alpha22, b) Z)
// PrefixOfRight: alpha21 b = alpha11 a Z,  pair (RF(alpha12, a) Z, RF(alpha22, b))
struct SolPair {
  Dfa left;
  Dfa right;
  SolCase case_tag = SolCase::PrefixOfLeft;
  std::size_t split1 = 0;  // |alpha11|
  std::size_t split2 = 0;  // |alpha21|
  Word a;                  // empty or one letter
  Word b;
  Word z;
};

struct CtSolution {
  Word w;
};

struct CeSolution {
  Word x;
  Word y;
};

// Decision procedures bound to one monadic, inter-reduced, locally confluent
// system. Intermediate languages are cached, so reusing one solver across
// many queries on the same system is much cheaper than the free functions.
class MonadicSolver {
 public:
  explicit MonadicSolver(Srs system, MonadicOptions options = {});
  ~MonadicSolver();
  MonadicSolver(MonadicSolver&&) noexcept;
  MonadicSolver& operator=(MonadicSolver&&) noexcept;

  const Srs& system() const noexcept;
  Word normal_form(const Word& w) const;

  MpSet mp_set(const Word& alpha);
  RfLanguage rf1(const Word& w, const Word& a);
  RfLanguage rf(const Word& x, const Word& y);
  std::vector<SolPair> sol_pairs(const Word& alpha1, const Word& alpha2);

  std::optional<CtSolution> ct(const Word& alpha, const Word& beta);
  std::optional<CeSolution> ce_two(const Word& alpha1, const Word& alpha2, const Word& beta1, const Word& beta2);
  // Distinct irreducible x, y; x is the shortlex-greater of the two.
  std::optional<CeSolution> ce_one(const Word& alpha, const Word& beta);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

MpSet mp_set(const Srs& system, const Word& alpha, const MonadicOptions& options = {});
RfLanguage rf1_dfa(const Srs& system, const Word& w, const Word& a, const MonadicOptions& options = {});
RfLanguage rf_dfa(const Srs& system, const Word& x, const Word& y, const MonadicOptions& options = {});
std::vector<SolPair> sol_pairs(const Srs& system, const Word& alpha1, const Word& alpha2,
                               const MonadicOptions& options = {});
std::optional<CtSolution> solve_ct_monadic(const Srs& system, const Word& alpha, const Word& beta,
                                           const MonadicOptions& options = {});
std::optional<CeSolution> solve_ce_two(const Srs& system, const Word& alpha1, const Word& alpha2,
                                       const Word& beta1, const Word& beta2, const MonadicOptions& options = {});
std::optional<CeSolution> solve_ce_one(const Srs& system, const Word& alpha, const Word& beta,
                                       const MonadicOptions& options = {});

}  // namespace srsdual
