#include "srsdual/word.hpp"

#include <algorithm>
#include <cctype>

#include "srsdual/error.hpp"

namespace srsdual {

Word Word::from_ids(std::initializer_list<std::uint32_t> ids) {
  std::vector<Symbol> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(Symbol{id});
  return Word(std::move(out));
}

Symbol Word::at(std::size_t i) const {
  if (i == 0 || i > symbols_.size())
    throw Error(ErrorKind::InvalidArgument, "word position " + std::to_string(i) + " out of range");
  return symbols_[i - 1];
}

Word Word::slice(std::size_t i, std::size_t j) const {
  if (i == 0) i = 1;
  j = std::min(j, symbols_.size());
  if (i > j) return Word{};
  return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                  symbols_.begin() + static_cast<std::ptrdiff_t>(j)));
}

Word Word::prefix(std::size_t n) const { return slice(1, n); }

Word Word::drop_prefix(std::size_t n) const { return slice(n + 1, symbols_.size()); }

Word Word::select(std::span<const std::size_t> positions) const {
  std::vector<Symbol> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(at(p));
  return Word(std::move(out));
}

bool Word::starts_with(const Word& p) const noexcept {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const noexcept {
  return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::optional<std::size_t> Word::find(const Word& needle, std::size_t from) const noexcept {
  if (needle.size() > size()) return std::nullopt;
  auto it = std::search(symbols_.begin() + static_cast<std::ptrdiff_t>(std::min(from, size())),
                        symbols_.end(), needle.begin(), needle.end());
  if (it == symbols_.end() && !needle.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

Word& Word::operator+=(const Word& other) {
  symbols_.insert(symbols_.end(), other.begin(), other.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(std::span<const Symbol> w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto s : w) {
    h ^= s.id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ w.size();
}

std::size_t WordHash::operator()(const Word& w) const noexcept { return (*this)(w.symbols()); }

Alphabet::Alphabet(std::initializer_list<std::string_view> names) {
  for (auto n : names) intern(n);
}

bool Alphabet::valid_name(std::string_view name) noexcept {
  if (name.empty() || name == "_" || name == "->" || name == "#") return false;
  return std::none_of(name.begin(), name.end(),
                      [](unsigned char c) { return std::isspace(c) != 0; });
}

Symbol Alphabet::intern(std::string_view name) {
  if (auto s = find(name)) return *s;
  if (!valid_name(name))
    throw Error(ErrorKind::Syntax, "invalid symbol name '" + std::string(name) + "'");
  auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return Symbol{id};
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return Symbol{it->second};
}

Symbol Alphabet::symbol(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error(ErrorKind::SymbolOutsideAlphabet, "unknown symbol '" + std::string(name) + "'");
}

const std::string& Alphabet::name(Symbol s) const {
  if (!contains(s))
    throw Error(ErrorKind::SymbolOutsideAlphabet, "symbol id " + std::to_string(s.id) + " not in alphabet");
  return names_[s.id];
}

std::vector<Symbol> Alphabet::symbols() const {
  std::vector<Symbol> out(names_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Symbol{i};
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "_";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) {
  Word w;
  for (auto tok : split_tokens(text)) {
    if (tok == "_") continue;
    w.push_back(intern(tok));
  }
  return w;
}

Word Alphabet::parse_known(std::string_view text) const {
  Word w;
  for (auto tok : split_tokens(text)) {
    if (tok == "_") continue;
    w.push_back(symbol(tok));
  }
  return w;
}

std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> out;
  if (alphabet_size == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::vector<Symbol> cur(length, Symbol{0});
  while (true) {
    out.emplace_back(cur);
    std::size_t k = length;
    while (k > 0) {
      --k;
      if (cur[k].id + 1 < alphabet_size) {
        ++cur[k].id;
        break;
      }
      cur[k].id = 0;
      if (k == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto layer = words_of_length(alphabet_size, n);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace srsdual
