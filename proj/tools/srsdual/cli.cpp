#include "srsdual/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <random>
#include <sstream>

#include "srsdual/confluence.hpp"
#include "srsdual/error.hpp"
#include "srsdual/fp_dwindling.hpp"
#include "srsdual/monadic.hpp"
#include "srsdual/oracle.hpp"
#include "srsdual/reductions.hpp"
#include "srsdual/validation/sweeps.hpp"

namespace srsdual::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  bool json = false;
  std::size_t fuel = kDefaultFuel;
  std::size_t max_len = 8;
  std::uint64_t seed = 1;
  bool assume_terminating = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  const Flags& flags;

  void emit(const Json& j) const { out << j.dump() << '\n'; }
};

std::string read_input(const Io& io, const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(io.in), {});
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Inputs are normalized before solving; say so when it changes them.
Word normalized_input(const Io& io, const Srs& sys, const Alphabet& a, const std::string& text, const char* what) {
  Word w = a.parse_known(text);
  Word n = normalize(sys, w, io.flags.fuel);
  if (n != w) io.err << "warning: " << what << " is reducible; using its normal form " << a.format(n) << '\n';
  return n;
}

int cmd_classify(const Io& io, const std::string& file) {
  auto sys = parse_srs(read_input(io, file));
  auto c = classify(sys);
  auto ev = check_convergence(sys, io.flags.fuel);
  if (io.flags.json) {
    io.emit(Json{{"verb", "classify"},
                 {"rules", sys.rules.size()},
                 {"alphabet", sys.alphabet.size()},
                 {"dwindling", c.dwindling},
                 {"monadic", c.monadic},
                 {"special", c.special},
                 {"length_reducing", c.length_reducing},
                 {"inter_reduced", c.inter_reduced},
                 {"terminating", to_string(ev.terminating)},
                 {"locally_confluent", to_string(ev.locally_confluent)}});
  } else {
    io.out << "rules: " << sys.rules.size() << "\nalphabet size: " << sys.alphabet.size()
           << "\ndwindling: " << yes_no(c.dwindling) << "\nmonadic: " << yes_no(c.monadic)
           << "\nspecial: " << yes_no(c.special) << "\nlength-reducing: " << yes_no(c.length_reducing)
           << "\ninter-reduced: " << yes_no(c.inter_reduced) << "\nterminating: " << to_string(ev.terminating)
           << "\nlocally confluent: " << to_string(ev.locally_confluent) << '\n';
  }
  return kYes;
}

int cmd_normalize(const Io& io, const std::string& file, const std::string& word) {
  auto sys = parse_srs(read_input(io, file));
  Word w = sys.alphabet.parse_known(word);
  std::size_t steps = 0;
  Word n = normalize(sys, w, io.flags.fuel, steps);
  if (io.flags.json)
    io.emit(Json{{"verb", "normalize"},
                 {"input", sys.alphabet.format(w)},
                 {"normal_form", sys.alphabet.format(n)},
                 {"steps", steps}});
  else
    io.out << sys.alphabet.format(n) << '\n';
  return kYes;
}

int cmd_confluence(const Io& io, const std::string& file) {
  auto sys = parse_srs(read_input(io, file));
  auto pairs = critical_pairs(sys);
  auto ev = check_convergence(sys, io.flags.fuel);
  const auto& A = sys.alphabet;
  if (io.flags.json) {
    Json list = Json::array();
    for (const auto& p : pairs)
      list.push_back(Json{{"peak", A.format(p.peak)},
                          {"left", A.format(p.left)},
                          {"right", A.format(p.right)},
                          {"kind", to_string(p.overlap_kind)},
                          {"rules", {p.first_rule + 1, p.second_rule + 1}}});
    Json j{{"verb", "confluence"},
           {"terminating", to_string(ev.terminating)},
           {"locally_confluent", to_string(ev.locally_confluent)},
           {"critical_pairs", list}};
    j["witness"] = ev.witness ? Json(A.format(ev.witness->peak)) : Json(nullptr);
    io.emit(j);
  } else {
    io.out << "critical pairs: " << pairs.size() << '\n';
    for (const auto& p : pairs)
      io.out << "  " << A.format(p.peak) << " => " << A.format(p.left) << " | " << A.format(p.right) << " ("
             << to_string(p.overlap_kind) << ", rules " << p.first_rule + 1 << " and " << p.second_rule + 1 << ")\n";
    io.out << "terminating: " << to_string(ev.terminating) << "\nlocally confluent: " << to_string(ev.locally_confluent)
           << '\n';
    if (ev.witness) io.out << "unresolved peak: " << A.format(ev.witness->peak) << '\n';
  }
  switch (ev.locally_confluent) {
    case Evidence::Proved: return kYes;
    case Evidence::Refuted: return kNo;
    case Evidence::Unknown: break;
  }
  io.err << "error: local confluence could not be decided within the budget\n";
  return kError;
}

int cmd_fp(const Io& io, const std::string& file, const std::string& word) {
  auto sys = parse_srs(read_input(io, file));
  if (!classify(sys).dwindling)
    throw Error(ErrorKind::NotDwindling, "fp needs a dwindling system (every rhs a proper prefix of its lhs)");
  Word alpha = normalized_input(io, sys, sys.alphabet, word, "alpha");
  auto outcome = run_fp_dwindling(FpInstance::make(sys, alpha, io.flags.fuel));
  const auto& A = sys.alphabet;
  const auto& sol = outcome.solution;
  if (io.flags.json) {
    io.emit(Json{{"verb", "fp"},
                 {"alpha", A.format(alpha)},
                 {"verdict", yes_no(sol.has_value())},
                 {"witness", sol ? Json(A.format(sol->w)) : Json(nullptr)},
                 {"iterations", outcome.iterations},
                 {"verified", sol ? sol->verified : false}});
  } else if (sol) {
    io.out << "witness: " << A.format(sol->w) << "\niterations: " << outcome.iterations
           << "\nverified: " << yes_no(sol->verified) << '\n';
  } else {
    io.out << "no solution (iterations: " << outcome.iterations << ")\n";
  }
  return sol ? kYes : kNo;
}

MonadicSolver make_solver(const Io& io, const Srs& sys) {
  MonadicOptions o;
  o.fuel = io.flags.fuel;
  o.assume_terminating = io.flags.assume_terminating;
  return MonadicSolver(sys, o);
}

int cmd_ct(const Io& io, const std::string& file, const std::vector<std::string>& words) {
  auto sys = parse_srs(read_input(io, file));
  auto solver = make_solver(io, sys);
  const auto& A = sys.alphabet;
  Word alpha = A.parse_known(words[0]), beta = A.parse_known(words[1]);
  auto sol = solver.ct(alpha, beta);
  bool verified = sol && normalize(sys, alpha + sol->w, io.flags.fuel) == normalize(sys, beta + sol->w, io.flags.fuel);
  if (io.flags.json) {
    io.emit(Json{{"verb", "ct"},
                 {"alpha", A.format(alpha)},
                 {"beta", A.format(beta)},
                 {"verdict", yes_no(sol.has_value())},
                 {"witness", sol ? Json(A.format(sol->w)) : Json(nullptr)},
                 {"verified", verified}});
  } else if (sol) {
    io.out << "witness: " << A.format(sol->w) << "\nverified: " << yes_no(verified) << '\n';
  } else {
    io.out << "no common term\n";
  }
  return sol ? kYes : kNo;
}

void report_pair(const Io& io, const char* verb, const Alphabet& A, const std::vector<Word>& inputs,
                 const std::optional<CeSolution>& sol, bool verified) {
  if (io.flags.json) {
    Json in = Json::array();
    for (const auto& w : inputs) in.push_back(A.format(w));
    io.emit(Json{{"verb", verb},
                 {"inputs", in},
                 {"verdict", yes_no(sol.has_value())},
                 {"witnesses", sol ? Json{A.format(sol->x), A.format(sol->y)} : Json(nullptr)},
                 {"verified", verified}});
  } else if (sol) {
    io.out << "first: " << A.format(sol->x) << "\nsecond: " << A.format(sol->y) << "\nverified: " << yes_no(verified)
           << '\n';
  } else {
    io.out << "no solution\n";
  }
}

int cmd_ce2(const Io& io, const std::string& file, const std::vector<std::string>& words) {
  auto sys = parse_srs(read_input(io, file));
  auto solver = make_solver(io, sys);
  std::vector<Word> in;
  for (const auto& w : words) in.push_back(sys.alphabet.parse_known(w));
  auto sol = solver.ce_two(in[0], in[1], in[2], in[3]);
  auto nf = [&](const Word& w) { return normalize(sys, w, io.flags.fuel); };
  bool verified = sol && nf(in[0] + sol->x) == nf(in[1] + sol->y) && nf(in[2] + sol->x) == nf(in[3] + sol->y);
  report_pair(io, "ce2", sys.alphabet, in, sol, verified);
  return sol ? kYes : kNo;
}

int cmd_ce1(const Io& io, const std::string& file, const std::vector<std::string>& words) {
  auto sys = parse_srs(read_input(io, file));
  auto solver = make_solver(io, sys);
  Word alpha = normalized_input(io, sys, sys.alphabet, words[0], "alpha");
  Word beta = normalized_input(io, sys, sys.alphabet, words[1], "beta");
  auto sol = solver.ce_one(alpha, beta);
  auto nf = [&](const Word& w) { return normalize(sys, w, io.flags.fuel); };
  bool verified = sol && sol->x != sol->y && nf(alpha + sol->x) == nf(alpha + sol->y) &&
                  nf(beta + sol->x) == nf(beta + sol->y);
  report_pair(io, "ce1", sys.alphabet, {alpha, beta}, sol, verified);
  return sol ? kYes : kNo;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto tok : split_tokens(text)) {
    if (tok == "_") continue;
    try {
      out.push_back(std::stoul(std::string(tok)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad domino index '" + std::string(tok) + "'");
    }
  }
  return out;
}

std::string legend_text(const std::vector<std::pair<std::string, std::string>>& legend) {
  std::string out;
  for (const auto& [k, v] : legend) out += k + ": " + v + '\n';
  return out;
}

// Writes `srs` and its legend to PATH and PATH.legend, or both to stdout
// (legend as comments) when no path is given.
void deliver(const Io& io, const std::string& output, const std::string& srs, const std::string& legend) {
  if (!output.empty()) {
    write_output(output, srs);
    write_output(output + ".legend", legend);
    return;
  }
  if (io.flags.json) return;
  io.out << srs;
  std::istringstream lines(legend);
  for (std::string line; std::getline(lines, line);) io.out << "# " << line << '\n';
}

int cmd_encode(const Io& io, const std::string& kind, const std::string& input, const std::string& output,
               const std::string& solution, const std::string& word) {
  Json j{{"verb", "encode"}, {"kind", kind}};
  std::string witness_note;
  if (kind == "gpcp-ct" || kind == "gpcp-ce") {
    auto g = parse_gpcp(read_input(io, input));
    bool to_ct = kind == "gpcp-ct";
    auto enc = to_ct ? encode_gpcp_to_ct(g) : encode_gpcp_to_ce(g);
    const auto& A = enc.srs.alphabet;
    std::string legend = "alpha: " + A.format(enc.alpha) + "\nbeta: " + A.format(enc.beta) + '\n' + legend_text(enc.legend);
    j["rules"] = enc.srs.rules.size();
    j["alpha"] = A.format(enc.alpha);
    j["beta"] = A.format(enc.beta);
    if (!solution.empty()) {
      auto idx = parse_indices(solution);
      if (to_ct) {
        auto z = gpcp_ct_witness(g, idx, enc);
        j["witness"] = A.format(z);
        legend += "witness: " + A.format(z) + '\n';
      } else {
        auto [w1, w2] = gpcp_ce_witness(g, idx, enc);
        j["witness"] = Json{A.format(w1), A.format(w2)};
        legend += "witness: " + A.format(w1) + " ; " + A.format(w2) + '\n';
      }
    }
    deliver(io, output, format_srs(enc.srs), legend);
  } else if (kind == "dlba-fp") {
    auto d = parse_dlba(read_input(io, input));
    auto enc = encode_dlba_to_srs(d);
    const auto& A = enc.srs.alphabet;
    std::string legend = "alpha: " + A.format(Word{enc.state[d.start]}) + '\n';
    for (std::size_t i = 0; i < d.states.size(); ++i) legend += d.states[i] + ": state\n";
    for (std::size_t i = 0; i < enc.tape.size(); ++i)
      if (enc.has_prime[i]) legend += A.name(enc.primed[i]) + ": marked copy of " + A.name(enc.tape[i]) + '\n';
    j["rules"] = enc.srs.rules.size();
    j["alpha"] = A.format(Word{enc.state[d.start]});
    if (!word.empty()) {
      auto idx = dlba_word(d, word);
      auto outcome = run_dlba(d, idx, io.flags.fuel);
      j["run"] = to_string(outcome);
      j["witness"] = outcome == DlbaOutcome::Accept ? Json(A.format(enc.tape_word(idx))) : Json(nullptr);
      legend += "run: " + std::string(to_string(outcome)) + '\n';
      if (outcome == DlbaOutcome::Accept) legend += "witness: " + A.format(enc.tape_word(idx)) + '\n';
    }
    deliver(io, output, format_srs(enc.srs), legend);
  } else if (kind == "gpcp-random") {
    std::mt19937_64 rng(io.flags.seed);
    std::vector<std::size_t> sol;
    auto g = random_planted_gpcp(rng, sol);
    std::string idx;
    for (auto i : sol) idx += (idx.empty() ? "" : " ") + std::to_string(i);
    if (idx.empty()) idx = "_";
    std::string text = "# planted solution: " + idx + '\n' + format_gpcp(g);
    j["solution"] = idx;
    if (!output.empty())
      write_output(output, text);
    else if (!io.flags.json)
      io.out << text;
    if (io.flags.json && output.empty()) j["instance"] = format_gpcp(g);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown encoding '" + kind + "'");
  }
  if (!output.empty()) j["output"] = output;
  if (io.flags.json) io.emit(j);
  return kYes;
}

int cmd_oracle(const Io& io, const std::string& mode, const std::string& file, const std::vector<std::string>& words) {
  auto m = parse_oracle_mode(mode);
  if (!m) throw Error(ErrorKind::InvalidArgument, "unknown oracle mode '" + mode + "' (fp, ct, ce_two, ce_one)");
  OracleQuery q;
  q.mode = *m;
  q.system = parse_srs(read_input(io, file));
  q.max_len = io.flags.max_len;
  q.fuel = io.flags.fuel;
  for (const auto& w : words) q.inputs.push_back(q.system.alphabet.parse_known(w));
  auto ans = oracle_search(q);
  const auto& A = q.system.alphabet;
  if (io.flags.json) {
    Json ws = Json::array();
    for (const auto& w : ans.witnesses) ws.push_back(A.format(w));
    io.emit(Json{{"verb", "oracle"},
                 {"mode", to_string(*m)},
                 {"max_len", q.max_len},
                 {"found", ans.found},
                 {"witnesses", ws},
                 {"words_examined", ans.words_examined}});
  } else {
    if (ans.found) {
      io.out << "found:";
      for (const auto& w : ans.witnesses) io.out << ' ' << A.format(w) << (&w != &ans.witnesses.back() ? " ," : "");
      io.out << '\n';
    } else {
      io.out << "not found up to length " << q.max_len << '\n';
    }
    io.out << "words examined: " << ans.words_examined << '\n';
  }
  return ans.found ? kYes : kNo;
}

int cmd_selftest(const Io& io, const std::vector<int>& ids) {
  validation::SweepOptions o;
  o.seed = io.flags.seed;
  std::size_t passed = 0, failed = 0;
  Json list = Json::array();
  validation::run_criteria(o, ids, [&](const validation::CriterionReport& r) {
    (r.pass ? passed : failed) += 1;
    if (io.flags.json)
      list.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}});
    else
      io.out << validation::format_report(r) << std::endl;
  });
  if (io.flags.json)
    io.emit(Json{{"verb", "selftest"}, {"passed", passed}, {"failed", failed}, {"criteria", list}});
  else
    io.out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kYes : kNo;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed point, common term and common equation problems over string rewriting systems", "srsdual"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Print a single-line JSON record");
  app.add_option("--fuel", flags.fuel, "Rewrite step budget")->capture_default_str();
  app.add_option("--max-len", flags.max_len, "Word length bound for the oracle")->capture_default_str();
  app.add_option("--seed", flags.seed, "Random seed for selftest and gpcp-random")->capture_default_str();
  app.add_flag("--assume-terminating", flags.assume_terminating,
               "Accept monadic systems whose termination is not shown by the length test");

  std::string file, word, mode, kind, input, output, solution, dlba_input;
  std::vector<std::string> words;
  std::vector<int> ids;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a system and check convergence");
  classify_cmd->add_option("system", file, "SRS file ('-' for stdin)")->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normal form of a word");
  normalize_cmd->add_option("system", file)->required();
  normalize_cmd->add_option("word", word)->required();
  auto* confluence_cmd = app.add_subcommand("confluence", "List critical pairs and convergence evidence");
  confluence_cmd->add_option("system", file)->required();
  auto* fp_cmd = app.add_subcommand("fp", "Fixed point: alpha W <-> W (dwindling systems)");
  fp_cmd->add_option("system", file)->required();
  fp_cmd->add_option("alpha", word)->required();
  auto* ct_cmd = app.add_subcommand("ct", "Common term: alpha W <-> beta W (monadic systems)");
  ct_cmd->add_option("system", file)->required();
  ct_cmd->add_option("words", words, "alpha beta")->required()->expected(2);
  auto* ce2_cmd = app.add_subcommand("ce2", "Common equation with two mappings (monadic systems)");
  ce2_cmd->add_option("system", file)->required();
  ce2_cmd->add_option("words", words, "alpha1 alpha2 beta1 beta2")->required()->expected(4);
  auto* ce1_cmd = app.add_subcommand("ce1", "Common equation with one mapping (monadic systems)");
  ce1_cmd->add_option("system", file)->required();
  ce1_cmd->add_option("words", words, "alpha beta")->required()->expected(2);
  auto* encode_cmd = app.add_subcommand("encode", "Build instances from GPCP or DLBA descriptions");
  encode_cmd->add_option("kind", kind, "gpcp-ct, gpcp-ce, dlba-fp or gpcp-random")->required();
  encode_cmd->add_option("input", input, "GPCP or DLBA file");
  encode_cmd->add_option("output", output, "Output SRS path; a .legend sidecar is written next to it");
  encode_cmd->add_option("--solution", solution, "Domino indices of a GPCP solution, e.g. \"1 2\"");
  encode_cmd->add_option("--word", dlba_input, "DLBA input word to simulate");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force search");
  oracle_cmd->add_option("mode", mode, "fp, ct, ce_two or ce_one")->required();
  oracle_cmd->add_option("system", file)->required();
  oracle_cmd->add_option("words", words, "input words");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the validation sweeps");
  selftest_cmd->add_option("criteria", ids, "Criterion ids (default: all)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  Io io{in, out, err, flags};
  try {
    if (*classify_cmd) return cmd_classify(io, file);
    if (*normalize_cmd) return cmd_normalize(io, file, word);
    if (*confluence_cmd) return cmd_confluence(io, file);
    if (*fp_cmd) return cmd_fp(io, file, word);
    if (*ct_cmd) return cmd_ct(io, file, words);
    if (*ce2_cmd) return cmd_ce2(io, file, words);
    if (*ce1_cmd) return cmd_ce1(io, file, words);
    if (*encode_cmd) {
      // gpcp-random takes no input file; its single path is the output.
      if (kind == "gpcp-random" && output.empty()) std::swap(input, output);
      if (kind != "gpcp-random" && input.empty()) throw Error(ErrorKind::InvalidArgument, "encode needs an input file");
      return cmd_encode(io, kind, input, output, solution, dlba_input);
    }
    if (*oracle_cmd) return cmd_oracle(io, mode, file, words);
    if (*selftest_cmd) return cmd_selftest(io, ids);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace srsdual::cli
