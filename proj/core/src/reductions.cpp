#include "srsdual/reductions.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "srsdual/error.hpp"

namespace srsdual {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInstance, what); }

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what);
}

Word rename(const Alphabet& from, const Word& w, Alphabet& to) {
  Word out;
  for (auto s : w) out.push_back(to.intern(from.name(s)));
  return out;
}

std::vector<std::string> each_line(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

// Drops a standalone `#` token and everything after it.
std::vector<std::string_view> line_tokens(std::string_view line) {
  auto toks = split_tokens(line);
  auto it = std::find(toks.begin(), toks.end(), std::string_view("#"));
  toks.erase(it, toks.end());
  if (!toks.empty() && toks.front().starts_with('#')) toks.clear();
  return toks;
}

std::string join(const std::vector<std::string_view>& toks, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (!out.empty()) out += ' ';
    out += toks[i];
  }
  return out;
}

}  // namespace

GpcpInstance parse_gpcp(std::string_view text) {
  GpcpInstance g;
  bool have_start = false, have_end = false;
  auto lines = each_line(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto toks = line_tokens(lines[ln]);
    if (toks.empty()) continue;
    auto head = toks.front();
    auto slash = std::find(toks.begin(), toks.end(), std::string_view("/"));
    if (slash == toks.end()) syntax(ln + 1, "expected 'TOP / BOTTOM'");
    auto split = static_cast<std::size_t>(slash - toks.begin());
    Domino d{g.alphabet.parse_word(join(toks, 1, split)), g.alphabet.parse_word(join(toks, split + 1, toks.size()))};
    if (head == "start:") {
      if (have_start) syntax(ln + 1, "duplicate start domino");
      g.start = std::move(d);
      have_start = true;
    } else if (head == "end:") {
      if (have_end) syntax(ln + 1, "duplicate end domino");
      g.end = std::move(d);
      have_end = true;
    } else if (head == "pair:") {
      g.pairs.push_back(std::move(d));
    } else {
      syntax(ln + 1, "expected start:, pair: or end:");
    }
  }
  if (!have_start || !have_end) malformed("GPCP instance needs a start and an end domino");
  validate_gpcp(g);
  return g;
}

std::string format_gpcp(const GpcpInstance& g) {
  std::ostringstream out;
  auto put = [&](const char* head, const Domino& d) {
    out << head << ' ' << g.alphabet.format(d.first) << " / " << g.alphabet.format(d.second) << '\n';
  };
  put("start:", g.start);
  for (const auto& p : g.pairs) put("pair:", p);
  put("end:", g.end);
  return out.str();
}

void validate_gpcp(const GpcpInstance& g) {
  auto check = [](const Domino& d, const std::string& which) {
    if (d.first.empty() || d.second.empty()) malformed(which + " domino has an empty component");
  };
  check(g.start, "start");
  check(g.end, "end");
  for (std::size_t i = 0; i < g.pairs.size(); ++i) check(g.pairs[i], "intermediate " + std::to_string(i + 1));
}

namespace {

Word gpcp_side(const GpcpInstance& g, const std::vector<std::size_t>& indices, bool top) {
  auto pick = [&](const Domino& d) -> const Word& { return top ? d.first : d.second; };
  Word out = pick(g.start);
  for (auto i : indices) {
    if (i == 0 || i > g.pairs.size())
      throw Error(ErrorKind::InvalidArgument, "domino index " + std::to_string(i) + " out of range");
    out += pick(g.pairs[i - 1]);
  }
  out += pick(g.end);
  return out;
}

}  // namespace

Word gpcp_top(const GpcpInstance& g, const std::vector<std::size_t>& indices) { return gpcp_side(g, indices, true); }

Word gpcp_bottom(const GpcpInstance& g, const std::vector<std::size_t>& indices) {
  return gpcp_side(g, indices, false);
}

bool gpcp_solves(const GpcpInstance& g, const std::vector<std::size_t>& indices) {
  return gpcp_top(g, indices) == gpcp_bottom(g, indices);
}

GpcpInstance random_planted_gpcp(std::mt19937_64& rng, std::vector<std::size_t>& solution) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  GpcpInstance g;
  auto a = g.alphabet.intern("a");
  auto b = g.alphabet.intern("b");
  auto random_word = [&](std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(uniform(0, 1) ? b : a);
    return w;
  };
  Word s = random_word(uniform(3, 7));
  std::size_t pieces = uniform(3, s.size());
  // Cut s into `pieces` non-empty parts, independently for top and bottom.
  auto cut = [&]() {
    std::vector<std::size_t> inner;
    for (std::size_t i = 1; i < s.size(); ++i) inner.push_back(i);
    std::shuffle(inner.begin(), inner.end(), rng);
    inner.resize(pieces - 1);
    std::sort(inner.begin(), inner.end());
    std::vector<Word> parts;
    std::size_t prev = 0;
    for (auto c : inner) {
      parts.push_back(s.slice(prev + 1, c));
      prev = c;
    }
    parts.push_back(s.drop_prefix(prev));
    return parts;
  };
  auto top = cut(), bottom = cut();
  g.start = {top.front(), bottom.front()};
  g.end = {top.back(), bottom.back()};
  std::vector<Domino> planted;
  for (std::size_t i = 1; i + 1 < pieces; ++i) planted.emplace_back(top[i], bottom[i]);
  std::size_t distractors = uniform(0, 2);
  std::vector<Domino> all = planted;
  for (std::size_t i = 0; i < distractors; ++i) all.emplace_back(random_word(uniform(1, 3)), random_word(uniform(1, 3)));
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  // order[new position] = old index
  std::vector<std::size_t> where(all.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    g.pairs.push_back(all[order[pos]]);
    where[order[pos]] = pos + 1;
  }
  solution.clear();
  for (std::size_t i = 0; i < planted.size(); ++i) solution.push_back(where[i]);
  return g;
}

GpcpInstance binary_gpcp(const GpcpInstance& g, std::vector<std::pair<std::string, std::string>>* legend) {
  std::vector<Symbol> used;
  auto collect = [&](const Word& w) {
    for (auto s : w)
      if (std::find(used.begin(), used.end(), s) == used.end()) used.push_back(s);
  };
  auto each = [&](auto fn) {
    fn(g.start.first), fn(g.start.second), fn(g.end.first), fn(g.end.second);
    for (const auto& p : g.pairs) fn(p.first), fn(p.second);
  };
  each(collect);
  std::sort(used.begin(), used.end());
  bool binary = std::all_of(used.begin(), used.end(), [&](Symbol s) {
    return g.alphabet.name(s) == "a" || g.alphabet.name(s) == "b";
  });
  GpcpInstance out;
  auto a = out.alphabet.intern("a");
  auto b = out.alphabet.intern("b");
  std::map<Symbol, Word> code;
  if (binary) {
    for (auto s : used) code[s] = Word{g.alphabet.name(s) == "a" ? a : b};
  } else {
    std::size_t width = 1;
    while ((std::size_t{1} << width) < used.size()) ++width;
    for (std::size_t i = 0; i < used.size(); ++i) {
      Word w;
      for (std::size_t bit = width; bit-- > 0;) w.push_back(((i >> bit) & 1U) ? b : a);
      code[used[i]] = w;
      if (legend) legend->emplace_back("code " + g.alphabet.name(used[i]), out.alphabet.format(w));
    }
  }
  auto map_word = [&](const Word& w) {
    Word r;
    for (auto s : w) r += code.at(s);
    return r;
  };
  out.start = {map_word(g.start.first), map_word(g.start.second)};
  out.end = {map_word(g.end.first), map_word(g.end.second)};
  for (const auto& p : g.pairs) out.pairs.emplace_back(map_word(p.first), map_word(p.second));
  return out;
}

Word encode_letters(const EncodedInstance& enc, const Word& binary_word, int level) {
  if (level < 1 || level > 3) throw Error(ErrorKind::InvalidArgument, "homomorphism level must be 1, 2 or 3");
  const auto& al = enc.srs.alphabet;
  Word out;
  for (auto s : binary_word) {
    const auto& name = al.name(s);
    if (name != "a" && name != "b") throw Error(ErrorKind::InvalidArgument, "homomorphisms apply to a and b only");
    for (int i = 1; i <= 4 - level; ++i) out.push_back(al.symbol(name + std::to_string(i)));
  }
  return out;
}

EncodedInstance encode_gpcp_to_ct(const GpcpInstance& g) {
  validate_gpcp(g);
  EncodedInstance enc;
  GpcpInstance bg = binary_gpcp(g, &enc.legend);
  const std::size_t n = bg.pairs.size();
  auto& A = enc.srs.alphabet;
  A.intern("a");
  A.intern("b");
  for (std::size_t i = 0; i <= n + 1; ++i) A.intern("c" + std::to_string(i));
  auto cent1 = A.intern("¢1"), cent2 = A.intern("¢2"), blank = A.intern("B");
  for (auto x : {"a", "b"})
    for (int i = 1; i <= 3; ++i) A.intern(std::string(x) + std::to_string(i));
  auto c = [&](std::size_t i) { return A.symbol("c" + std::to_string(i)); };
  auto hat = [&](const Word& w) { return rename(bg.alphabet, w, A); };
  auto h = [&](const Word& w, int level) { return encode_letters(enc, hat(w), level); };
  auto rule = [&](Word l, Word r) { enc.srs.rules.push_back(Rule{std::move(l), std::move(r)}); };

  const Word la{A.symbol("a")}, lb{A.symbol("b")};
  rule(Word{cent1} + encode_letters(enc, la, 1), Word{cent1} + encode_letters(enc, la, 3));
  rule(Word{cent1} + encode_letters(enc, lb, 1), Word{cent1} + encode_letters(enc, lb, 3));
  rule(Word{cent2} + encode_letters(enc, la, 1), Word{cent2} + encode_letters(enc, la, 2));
  rule(Word{cent2} + encode_letters(enc, lb, 1), Word{cent2} + encode_letters(enc, lb, 2));
  for (int level : {2, 3})
    for (const auto& x : {la, lb})
      for (const auto& y : {la, lb})
        rule(encode_letters(enc, x, level) + encode_letters(enc, y, 1),
             encode_letters(enc, x, level) + encode_letters(enc, y, level));
  rule(Word{cent1} + h(bg.start.first, 3) + Word{blank, c(0)}, Word{});
  rule(Word{cent2} + h(bg.start.second, 2) + Word{c(0)}, Word{});
  for (std::size_t i = 1; i <= n; ++i) {
    rule(h(bg.pairs[i - 1].first, 3) + Word{blank, c(i)}, Word{});
    rule(h(bg.pairs[i - 1].second, 2) + Word{c(i), blank}, Word{});
  }
  rule(h(bg.end.first, 3) + Word{c(n + 1)}, Word{});
  rule(h(bg.end.second, 2) + Word{c(n + 1), blank}, Word{});

  enc.alpha = Word{cent1};
  enc.beta = Word{cent2};
  enc.legend.emplace_back("¢1", "alpha, selects top components");
  enc.legend.emplace_back("¢2", "beta, selects bottom components");
  enc.legend.emplace_back("B", "separator between domino indices");
  enc.legend.emplace_back("c0", "start domino");
  for (std::size_t i = 1; i <= n; ++i) enc.legend.emplace_back("c" + std::to_string(i), "intermediate domino " + std::to_string(i));
  enc.legend.emplace_back("c" + std::to_string(n + 1), "end domino");
  enc.legend.emplace_back("a1 a2 a3 / b1 b2 b3", "letter images: level 1 = x1 x2 x3, level 2 = x1 x2, level 3 = x1");
  return enc;
}

Word gpcp_ct_witness(const GpcpInstance& g, const std::vector<std::size_t>& indices, const EncodedInstance& enc) {
  if (!gpcp_solves(g, indices)) throw Error(ErrorKind::NotASolution, "index sequence does not solve the instance");
  GpcpInstance bg = binary_gpcp(g);
  const auto& A = enc.srs.alphabet;
  auto c = [&](std::size_t i) { return A.symbol("c" + std::to_string(i)); };
  auto blank = A.symbol("B");
  Word top;
  for (auto s : gpcp_top(bg, indices)) top.push_back(A.symbol(bg.alphabet.name(s)));
  Word z = encode_letters(enc, top, 1);
  z.push_back(c(bg.pairs.size() + 1));
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    z.push_back(blank);
    z.push_back(c(*it));
  }
  z.push_back(blank);
  z.push_back(c(0));
  if (!normalize(enc.srs, enc.alpha + z).empty() || !normalize(enc.srs, enc.beta + z).empty())
    throw Error(ErrorKind::VerificationFailed, "common-term witness does not erase both sides");
  return z;
}

EncodedInstance encode_gpcp_to_ce(const GpcpInstance& g) {
  validate_gpcp(g);
  EncodedInstance enc;
  GpcpInstance bg = binary_gpcp(g, &enc.legend);
  const std::size_t n = bg.pairs.size();
  auto& A = enc.srs.alphabet;
  auto la = A.intern("a"), lb = A.intern("b");
  for (std::size_t i = 0; i <= n + 1; ++i) A.intern("c" + std::to_string(i));
  auto cent1 = A.intern("¢1"), cent2 = A.intern("¢2"), dollar = A.intern("$");
  auto hash1 = A.intern("#1"), hash2 = A.intern("#2");
  auto c = [&](std::size_t i) { return A.symbol("c" + std::to_string(i)); };
  auto hat = [&](const Word& w) { return rename(bg.alphabet, w, A); };
  auto rule = [&](Word l, Word r) { enc.srs.rules.push_back(Rule{std::move(l), std::move(r)}); };
  for (int side = 0; side < 2; ++side) {
    auto cent = side == 0 ? cent1 : cent2;
    auto hash = side == 0 ? hash1 : hash2;
    auto pick = [&](const Domino& d) { return hat(side == 0 ? d.first : d.second); };
    for (std::size_t i = 1; i <= n; ++i) rule(Word{cent, c(i)}, pick(bg.pairs[i - 1]) + Word{cent});
    rule(Word{cent, c(n + 1)}, Word{hash} + pick(bg.end) + Word{dollar});
  }
  for (auto hash : {hash1, hash2})
    for (auto x : {la, lb}) rule(Word{x, hash}, Word{hash, x});
  enc.alpha = hat(bg.start.first) + Word{cent1};
  enc.beta = hat(bg.start.second) + Word{cent2};
  enc.legend.emplace_back("alpha1", A.format(enc.alpha));
  enc.legend.emplace_back("alpha2", "#1");
  enc.legend.emplace_back("beta1", A.format(enc.beta));
  enc.legend.emplace_back("beta2", "#2");
  enc.legend.emplace_back("$", "end of the domino string");
  for (std::size_t i = 1; i <= n; ++i) enc.legend.emplace_back("c" + std::to_string(i), "intermediate domino " + std::to_string(i));
  enc.legend.emplace_back("c" + std::to_string(n + 1), "end domino");
  return enc;
}

std::pair<Word, Word> gpcp_ce_witness(const GpcpInstance& g, const std::vector<std::size_t>& indices,
                                      const EncodedInstance& enc) {
  if (!gpcp_solves(g, indices)) throw Error(ErrorKind::NotASolution, "index sequence does not solve the instance");
  GpcpInstance bg = binary_gpcp(g);
  const auto& A = enc.srs.alphabet;
  Word w1;
  for (auto i : indices) w1.push_back(A.symbol("c" + std::to_string(i)));
  w1.push_back(A.symbol("c" + std::to_string(bg.pairs.size() + 1)));
  Word w2;
  for (auto s : gpcp_top(bg, indices)) w2.push_back(A.symbol(bg.alphabet.name(s)));
  w2.push_back(A.symbol("$"));
  if (normalize(enc.srs, enc.alpha + w1) != Word{A.symbol("#1")} + w2 ||
      normalize(enc.srs, enc.beta + w1) != Word{A.symbol("#2")} + w2)
    throw Error(ErrorKind::VerificationFailed, "common-equation witness does not reduce as expected");
  return {w1, w2};
}

std::string Dlba::tape_name(std::size_t i) const {
  if (i < input.size()) return input[i];
  if (i == left_index()) return left_marker;
  if (i == right_index()) return right_marker;
  throw Error(ErrorKind::InvalidArgument, "tape index out of range");
}

std::size_t Dlba::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  throw Error(ErrorKind::MalformedInstance, "unknown state '" + std::string(name) + "'");
}

std::size_t Dlba::tape_index(std::string_view name) const {
  for (std::size_t i = 0; i < tape_size(); ++i)
    if (tape_name(i) == name) return i;
  throw Error(ErrorKind::SymbolOutsideAlphabet, "unknown tape symbol '" + std::string(name) + "'");
}

void Dlba::add_transition(std::size_t state, std::size_t symbol, DlbaMove move) {
  if (state >= states.size() || move.target >= states.size() || symbol >= tape_size())
    throw Error(ErrorKind::MalformedInstance, "transition refers to an unknown state or symbol");
  auto [it, fresh] = delta.emplace(std::make_pair(state, symbol), move);
  if (!fresh && (it->second.target != move.target || it->second.direction != move.direction))
    throw Error(ErrorKind::Nondeterministic,
                "two transitions for (" + states[state] + ", " + tape_name(symbol) + ")");
}

Dlba parse_dlba(std::string_view text) {
  Dlba d;
  std::string start, accept, reject;
  struct Pending {
    std::size_t line;
    std::string from, symbol, to, dir;
  };
  std::vector<Pending> moves;
  auto lines = each_line(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = lines[ln];
    auto toks = line_tokens(line);
    if (toks.empty()) continue;
    auto head = toks.front();
    auto rest = [&] {
      std::vector<std::string> r;
      for (std::size_t i = 1; i < toks.size(); ++i) r.emplace_back(toks[i]);
      return r;
    };
    auto single = [&]() {
      if (toks.size() != 2) syntax(ln + 1, "expected exactly one name after " + std::string(head));
      return std::string(toks[1]);
    };
    if (head == "states:") {
      for (auto& s : rest()) d.states.push_back(s);
    } else if (head == "input:") {
      for (auto& s : rest()) d.input.push_back(s);
    } else if (head == "markers:") {
      auto r = rest();
      if (r.size() != 2) syntax(ln + 1, "markers: needs a left and a right marker");
      d.left_marker = r[0];
      d.right_marker = r[1];
    } else if (head == "start:") {
      start = single();
    } else if (head == "accept:") {
      accept = single();
    } else if (head == "reject:") {
      reject = single();
    } else {
      std::replace(line.begin(), line.end(), ',', ' ');
      auto t = line_tokens(line);
      if (t.size() != 5 || t[2] != "->") syntax(ln + 1, "expected 'q , SYM -> q' , L|R'");
      moves.push_back(Pending{ln + 1, std::string(t[0]), std::string(t[1]), std::string(t[3]), std::string(t[4])});
    }
  }
  if (start.empty() || accept.empty() || reject.empty()) malformed("DLBA needs start:, accept: and reject: lines");
  d.start = d.state_index(start);
  d.accept = d.state_index(accept);
  d.reject = d.state_index(reject);
  std::vector<std::string> names = d.states;
  for (std::size_t i = 0; i < d.tape_size(); ++i) names.push_back(d.tape_name(i));
  for (const auto& n : names)
    if (!Alphabet::valid_name(n)) malformed("invalid name '" + n + "'");
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    malformed("state and tape symbol names must be distinct");
  for (const auto& m : moves) {
    if (m.dir != "L" && m.dir != "R") syntax(m.line, "direction must be L or R");
    d.add_transition(d.state_index(m.from), d.tape_index(m.symbol),
                     DlbaMove{d.state_index(m.to), m.dir == "L" ? Direction::Left : Direction::Right});
  }
  return d;
}

std::string format_dlba(const Dlba& d) {
  std::ostringstream out;
  out << "states:";
  for (const auto& s : d.states) out << ' ' << s;
  out << "\ninput:";
  for (const auto& s : d.input) out << ' ' << s;
  out << "\nmarkers: " << d.left_marker << ' ' << d.right_marker << '\n';
  out << "start: " << d.states[d.start] << "\naccept: " << d.states[d.accept] << "\nreject: " << d.states[d.reject]
      << '\n';
  for (const auto& [key, mv] : d.delta)
    out << d.states[key.first] << " , " << d.tape_name(key.second) << " -> " << d.states[mv.target] << " , "
        << (mv.direction == Direction::Left ? 'L' : 'R') << '\n';
  return out.str();
}

std::vector<std::size_t> dlba_word(const Dlba& d, std::string_view text) {
  std::vector<std::size_t> out;
  for (auto tok : split_tokens(text)) {
    if (tok == "_") continue;
    auto i = d.tape_index(tok);
    if (i >= d.input.size())
      throw Error(ErrorKind::SymbolOutsideAlphabet, "'" + std::string(tok) + "' is not an input symbol");
    out.push_back(i);
  }
  return out;
}

DlbaOutcome run_dlba(const Dlba& d, const std::vector<std::size_t>& w, std::size_t fuel) {
  std::vector<std::size_t> tape{d.left_index()};
  for (auto s : w) {
    if (s >= d.input.size()) throw Error(ErrorKind::SymbolOutsideAlphabet, "input word uses a non-input symbol");
    tape.push_back(s);
  }
  tape.push_back(d.right_index());
  std::size_t head = 0, state = d.start;
  for (std::size_t step = 0;; ++step) {
    if (state == d.accept && head == 0) return DlbaOutcome::Accept;
    if (state == d.reject) return DlbaOutcome::Reject;
    auto it = d.delta.find({state, tape[head]});
    if (it == d.delta.end()) return DlbaOutcome::Reject;
    if (step == fuel) return DlbaOutcome::FuelExhausted;
    state = it->second.target;
    if (it->second.direction == Direction::Right) {
      if (++head >= tape.size()) return DlbaOutcome::Reject;
    } else {
      if (head == 0) return DlbaOutcome::Reject;
      --head;
    }
  }
}

DlbaEncoding encode_dlba_to_srs(const Dlba& d) {
  DlbaEncoding enc;
  auto& A = enc.srs.alphabet;
  const std::size_t t = d.tape_size();
  for (std::size_t i = 0; i < t; ++i) enc.tape.push_back(A.intern(d.tape_name(i)));
  enc.has_prime.assign(t, 0);
  for (std::size_t i = 0; i < d.input.size(); ++i) enc.has_prime[i] = 1;
  for (const auto& [key, mv] : d.delta)
    if (mv.direction == Direction::Right) enc.has_prime[key.second] = 1;
  enc.primed.assign(t, Symbol{});
  for (std::size_t i = 0; i < t; ++i) {
    if (!enc.has_prime[i]) continue;
    auto name = d.tape_name(i) + "'";
    if (A.find(name)) malformed("primed symbol '" + name + "' collides with an existing name");
    enc.primed[i] = A.intern(name);
  }
  for (const auto& s : d.states) {
    if (A.find(s)) malformed("state name '" + s + "' collides with a tape symbol");
    enc.state.push_back(A.intern(s));
  }
  auto rule = [&](Word l, Word r) { enc.srs.rules.push_back(Rule{std::move(l), std::move(r)}); };
  for (const auto& [key, mv] : d.delta) {
    auto [q, x] = key;
    if (mv.direction == Direction::Right) {
      rule(Word{enc.state[q], enc.tape[x]}, Word{enc.primed[x], enc.state[mv.target]});
    } else {
      for (std::size_t l = 0; l < t; ++l)
        if (enc.has_prime[l])
          rule(Word{enc.primed[l], enc.state[q], enc.tape[x]}, Word{enc.state[mv.target], enc.tape[l], enc.tape[x]});
    }
  }
  rule(Word{enc.state[d.accept], enc.tape[d.left_index()]}, Word{enc.tape[d.left_index()]});
  return enc;
}

Word DlbaEncoding::tape_word(const std::vector<std::size_t>& w) const {
  Word out{tape[tape.size() - 2]};
  for (auto s : w) out.push_back(tape.at(s));
  out.push_back(tape.back());
  return out;
}

Word DlbaEncoding::initial(const Dlba& d, const std::vector<std::size_t>& w) const {
  return Word{state.at(d.start)} + tape_word(w);
}

Word DlbaEncoding::accepting(const Dlba& d, const std::vector<std::size_t>& w) const {
  return Word{state.at(d.accept)} + tape_word(w);
}

bool rewrites_to_plus(const Srs& system, const Word& from, const Word& to, std::size_t budget) {
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> queue;
  for (auto& s : rewrite_successors(system, from)) {
    if (s == to) return true;
    if (seen.insert(s).second) queue.push_back(std::move(s));
  }
  while (!queue.empty()) {
    if (seen.size() > budget) throw Error(ErrorKind::FuelExhausted, "reachability search budget exhausted");
    auto w = std::move(queue.front());
    queue.pop_front();
    for (auto& s : rewrite_successors(system, w)) {
      if (s == to) return true;
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return false;
}

std::string_view to_string(DlbaOutcome o) {
  switch (o) {
    case DlbaOutcome::Accept: return "accept";
    case DlbaOutcome::Reject: return "reject";
    case DlbaOutcome::FuelExhausted: return "fuel-exhausted";
  }
  return "unknown";
}

}  // namespace srsdual
