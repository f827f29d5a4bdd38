#pragma once

#include <optional>
#include <vector>

#include "srsdual/rewrite.hpp"
#include "srsdual/srs.hpp"

namespace srsdual {

// A validated fixed-point instance: the system is dwindling and locally
// confluent, alpha is non-empty and irreducible.
class FpInstance {
 public:
  static FpInstance make(Srs system, Word alpha, std::size_t fuel = kDefaultFuel);

  const Srs& system() const noexcept { return system_; }
  const Word& alpha() const noexcept { return alpha_; }
  std::size_t fuel() const noexcept { return fuel_; }
  // 2 * max lhs length * |alpha|
  std::size_t iteration_bound() const noexcept;

 private:
  FpInstance(Srs s, Word a, std::size_t fuel) : system_(std::move(s)), alpha_(std::move(a)), fuel_(fuel) {}
  Srs system_;
  Word alpha_;
  std::size_t fuel_;
};

struct FpOptions {
  bool record_trace = false;
};

struct FpSolution {
  Word w;
  std::size_t iterations = 0;
  bool verified = false;
  std::vector<Word> trace;  // alpha^(j) for j = 0..iterations when recorded
};

struct FpOutcome {
  std::optional<FpSolution> solution;
  std::size_t iterations = 0;
  std::vector<Word> trace;
};

// Builds W one symbol at a time: W[1] = alpha[1], W[j+1] = alpha^(j)[j+1]
// with alpha^(j) = (alpha^(j-1) W[j]) normalized. Stops with success when
// alpha^(j) equals W[1..j], with failure when |alpha^(j)| <= j or j passes
// the iteration bound.
std::optional<FpSolution> solve_fp_dwindling(const FpInstance& instance, const FpOptions& options = {});
FpOutcome run_fp_dwindling(const FpInstance& instance, const FpOptions& options = {});

struct Decomposition {
  std::size_t b = 0;
  std::vector<std::size_t> beta;  // 1-based, strictly increasing positions in X
  Word normal_form;
  std::size_t steps = 0;
};

// Normal form of A.X written as A[1:b] X[beta] with b maximal.
Decomposition decompose_reduction(const Word& a, const Word& x, const Srs& system,
                                  std::size_t fuel = kDefaultFuel);

// Fixed point as a common-term instance CT(alpha, empty); monadic systems only.
std::optional<Word> solve_fp_via_ct(const Srs& system, const Word& alpha, bool assume_terminating = false,
                                    std::size_t fuel = kDefaultFuel);

}  // namespace srsdual
