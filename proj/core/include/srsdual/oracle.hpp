#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "srsdual/confluence.hpp"
#include "srsdual/rewrite.hpp"
#include "srsdual/srs.hpp"

namespace srsdual {

enum class OracleMode { Fp, Ct, CeTwo, CeOne };

std::string_view to_string(OracleMode m);
std::optional<OracleMode> parse_oracle_mode(std::string_view name);
// fp: 1, ct: 2, ce_two: 4, ce_one: 2
std::size_t oracle_arity(OracleMode m);

struct OracleQuery {
  OracleMode mode = OracleMode::Fp;
  Srs system;
  std::vector<Word> inputs;
  std::size_t max_len = 8;
  std::size_t fuel = kDefaultFuel;
};

struct OracleAnswer {
  bool found = false;
  std::vector<Word> witnesses;
  std::uint64_t words_examined = 0;
};

// Exhaustive search over all words of length <= max_len in shortlex order.
// Equivalence is tested by comparing normal forms, so the system must be
// locally confluent; systems where that is not proved are refused with
// NotConvergent. Normalizing a candidate past `fuel` steps throws
// FuelExhausted naming the word.
//
//   fp      alpha W <-> W                      witnesses: W
//   ct      alpha W <-> beta W                 witnesses: W
//   ce_two  alpha1 X <-> alpha2 Y,
//           beta1 X <-> beta2 Y                witnesses: X, Y; least (|X|+|Y|, X, Y),
//                                              each side bounded by max_len
//   ce_one  alpha W1 <-> alpha W2,
//           beta W1 <-> beta W2, W1 != W2,
//           both irreducible                   witnesses: W1, W2; W1 is the shortlex
//                                              least word sharing its normal forms
//                                              with an earlier one, W2 that earlier one
OracleAnswer oracle_search(const OracleQuery& query);

// Search state bound to one system, reusable across queries.
class OracleContext {
 public:
  explicit OracleContext(Srs system, std::size_t fuel = kDefaultFuel);
  ~OracleContext();
  OracleContext(OracleContext&&) noexcept;
  OracleContext& operator=(OracleContext&&) noexcept;

  const Srs& system() const noexcept;
  const ConvergenceEvidence& evidence() const noexcept;

  OracleAnswer fp(const Word& alpha, std::size_t max_len) const;
  OracleAnswer ct(const Word& alpha, const Word& beta, std::size_t max_len) const;
  OracleAnswer ce_two(const Word& alpha1, const Word& alpha2, const Word& beta1, const Word& beta2,
                      std::size_t max_len) const;
  OracleAnswer ce_one(const Word& alpha, const Word& beta, std::size_t max_len) const;

  // Fixed-point search restricted to irreducible W. For a length-reducing
  // system, nf(W) solves whenever W does and is no longer, so the shortest
  // length found here equals the shortest over all words. Throws
  // InvalidArgument on systems that are not length-reducing.
  OracleAnswer fp_irreducible(const Word& alpha, std::size_t max_len) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Precomputed normal forms of p W for a fixed list of prefixes p and every W
// up to a length bound; answers ct / ce_two / ce_one queries over those
// prefixes with the same witnesses as oracle_search.
class NormalFormTable {
 public:
  NormalFormTable(const OracleContext& context, std::vector<Word> prefixes, std::size_t max_len);

  const std::vector<Word>& prefixes() const noexcept { return prefixes_; }
  const std::vector<Word>& words() const noexcept { return words_; }  // shortlex
  std::size_t max_len() const noexcept { return max_len_; }
  std::uint32_t id(std::size_t prefix, std::size_t word) const { return ids_[prefix][word]; }

  OracleAnswer ct(std::size_t alpha, std::size_t beta) const;
  OracleAnswer ce_two(std::size_t alpha1, std::size_t alpha2, std::size_t beta1, std::size_t beta2) const;
  OracleAnswer ce_one(std::size_t alpha, std::size_t beta) const;

 private:
  const std::unordered_map<std::uint64_t, std::uint32_t>& best_left(std::size_t alpha1, std::size_t beta1) const;

  std::vector<Word> prefixes_;
  std::vector<Word> words_;
  std::vector<char> irreducible_;
  std::size_t max_len_;
  std::vector<std::vector<std::uint32_t>> ids_;
  mutable std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::uint32_t>> joins_;
};

}  // namespace srsdual
