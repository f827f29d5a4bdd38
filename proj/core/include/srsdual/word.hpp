#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace srsdual {

struct Symbol {
  std::uint32_t id = 0;

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;
};

// A finite sequence of symbols. `at` and `slice` use 1-based positions;
// `operator[]` is 0-based. Ordering is shortlex (length first, then by id).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  static Word from_ids(std::initializer_list<std::uint32_t> ids);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol at(std::size_t i) const;
  Word slice(std::size_t i, std::size_t j) const;
  Word prefix(std::size_t n) const;
  Word drop_prefix(std::size_t n) const;
  Word select(std::span<const std::size_t> positions) const;

  bool starts_with(const Word& p) const noexcept;
  bool ends_with(const Word& s) const noexcept;
  std::optional<std::size_t> find(const Word& needle, std::size_t from = 0) const noexcept;
  bool contains(const Word& needle) const noexcept { return find(needle).has_value(); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const std::vector<Symbol>& vec() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
  std::size_t operator()(std::span<const Symbol> w) const noexcept;
};

// Interns whitespace-free tokens to dense ids. `_` is the empty word and
// `->` is reserved by the rule grammar, so neither can be a symbol name.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string_view> names);

  Symbol intern(std::string_view name);
  std::optional<Symbol> find(std::string_view name) const;
  Symbol symbol(std::string_view name) const;
  const std::string& name(Symbol s) const;
  bool contains(Symbol s) const noexcept { return s.id < names_.size(); }
  std::size_t size() const noexcept { return names_.size(); }
  std::vector<Symbol> symbols() const;

  std::string format(const Word& w) const;
  // Tokens are separated by whitespace; unknown tokens are interned.
  Word parse_word(std::string_view text);
  // As parse_word but rejects unknown tokens.
  Word parse_known(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

  static bool valid_name(std::string_view name) noexcept;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

std::vector<std::string_view> split_tokens(std::string_view text);

// All words over `alphabet_size` symbols of length exactly `length`, in
// lexicographic order by id.
std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length);
// All words up to `max_length`, shortlex order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length);

}  // namespace srsdual
