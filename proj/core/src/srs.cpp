#include "srsdual/srs.hpp"

#include <algorithm>
#include <sstream>

#include "srsdual/error.hpp"

namespace srsdual {

std::size_t Srs::max_lhs() const noexcept {
  std::size_t m = 0;
  for (const auto& r : rules) m = std::max(m, r.lhs.size());
  return m;
}

void Srs::validate() const {
  for (const auto& r : rules) {
    if (r.lhs.empty()) throw Error(ErrorKind::EmptyLhs, "rule with empty left-hand side");
    for (auto s : r.lhs)
      if (!alphabet.contains(s)) throw Error(ErrorKind::SymbolOutsideAlphabet, "rule symbol outside alphabet");
    for (auto s : r.rhs)
      if (!alphabet.contains(s)) throw Error(ErrorKind::SymbolOutsideAlphabet, "rule symbol outside alphabet");
  }
}

Classification classify(const Srs& system) {
  Classification c{true, true, true, true, true};
  for (const auto& r : system.rules) {
    if (!(r.lhs.size() > r.rhs.size() && r.lhs.starts_with(r.rhs))) c.dwindling = false;
    if (r.rhs.size() > 1) c.monadic = false;
    if (r.lhs.size() <= r.rhs.size()) c.length_reducing = false;
    if (!r.rhs.empty()) c.special = false;
  }
  const auto& rs = system.rules;
  for (std::size_t i = 0; i < rs.size() && c.inter_reduced; ++i)
    for (std::size_t j = 0; j < rs.size(); ++j)
      if (i != j && rs[j].lhs.contains(rs[i].lhs)) {
        c.inter_reduced = false;
        break;
      }
  return c;
}

namespace {

std::vector<std::string_view> strip_comment(std::vector<std::string_view> tokens) {
  auto it = std::find(tokens.begin(), tokens.end(), std::string_view("#"));
  tokens.erase(it, tokens.end());
  return tokens;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what);
}

Srs parse_into(std::string_view text, Srs out) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tokens = strip_comment(split_tokens(line));
    if (tokens.empty()) continue;
    auto arrow = std::find(tokens.begin(), tokens.end(), std::string_view("->"));
    if (tokens.front().starts_with('#') && arrow == tokens.end()) continue;
    if (tokens.front() == "alphabet:") {
      if (arrow != tokens.end()) syntax_error(line_no, "'->' in alphabet declaration");
      for (auto it = tokens.begin() + 1; it != tokens.end(); ++it) {
        if (*it == "_") syntax_error(line_no, "'_' cannot be declared as a symbol");
        try {
          out.alphabet.intern(*it);
        } catch (const Error& e) {
          syntax_error(line_no, e.what());
        }
      }
      continue;
    }
    if (arrow == tokens.end()) syntax_error(line_no, "expected 'LHS -> RHS'");
    if (std::find(arrow + 1, tokens.end(), std::string_view("->")) != tokens.end())
      syntax_error(line_no, "more than one '->'");
    Rule rule;
    try {
      for (auto it = tokens.begin(); it != arrow; ++it)
        if (*it != "_") rule.lhs.push_back(out.alphabet.intern(*it));
      for (auto it = arrow + 1; it != tokens.end(); ++it)
        if (*it != "_") rule.rhs.push_back(out.alphabet.intern(*it));
    } catch (const Error& e) {
      syntax_error(line_no, e.what());
    }
    if (rule.lhs.empty())
      throw Error(ErrorKind::EmptyLhs, "line " + std::to_string(line_no) + ": empty left-hand side");
    out.rules.push_back(std::move(rule));
  }
  return out;
}

}  // namespace

Srs parse_srs(std::string_view text) { return parse_into(text, Srs{}); }

Srs parse_srs(std::string_view text, const Alphabet& base) { return parse_into(text, Srs{base, {}}); }

std::string format_rule(const Alphabet& alphabet, const Rule& rule) {
  return alphabet.format(rule.lhs) + " -> " + alphabet.format(rule.rhs);
}

std::string format_srs(const Srs& system) {
  std::ostringstream body;
  for (const auto& r : system.rules) body << format_rule(system.alphabet, r) << '\n';
  // Declare the alphabet only when the rules alone would not reproduce it.
  bool implicit = false;
  try {
    implicit = parse_srs(body.str()).alphabet == system.alphabet;
  } catch (const Error&) {
    implicit = false;
  }
  if (implicit) return body.str();
  std::string out = "alphabet:";
  for (auto s : system.alphabet.symbols()) out += " " + system.alphabet.name(s);
  out += '\n';
  return out + body.str();
}

}  // namespace srsdual
