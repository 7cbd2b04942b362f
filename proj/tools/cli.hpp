#pragma once

// palwidth command-line front end. `run` takes the arguments after the
// program name and returns the process exit code:
//   0 success, 1 verification failure, 2 usage or parse error, 3 budget exceeded.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "palwidth/palwidth.hpp"

#ifndef PALWIDTH_VERSION
#define PALWIDTH_VERSION "unknown"
#endif

namespace palwidth::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

using Json = nlohmann::ordered_json;
using AnyGroup = std::variant<WreathGroup, HeisGroup, BSGroup>;

inline AnyGroup parse_group(const std::string& label) {
  if (label == "wreath") return WreathGroup{};
  if (label == "heis") return HeisGroup{};
  if (label.rfind("bs:", 0) == 0) {
    std::int64_t n = 0;
    std::size_t used = 0;
    const std::string digits = label.substr(3);
    try {
      n = std::stoll(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size()) throw ParseError("bad group label \"" + label + "\"", 3);
    return BSGroup{n};
  }
  throw ParseError("unknown group \"" + label + "\" (expected wreath, heis or bs:N)", 0);
}

// ---- per-group plumbing ----------------------------------------------------

inline WreathElement element_from_json(const WreathGroup&, const nlohmann::json& j) { return wreath_from_json(j); }
inline HeisElement element_from_json(const HeisGroup&, const nlohmann::json& j) { return heis_from_json(j); }
inline BSElement element_from_json(const BSGroup& g, const nlohmann::json& j) { return bs_from_json(j, g.n); }

inline Decomposition<WreathElement> decompose(const WreathGroup&, const WreathElement& g) { return three_pal_decomposition(g); }
inline Decomposition<HeisElement> decompose(const HeisGroup&, const HeisElement& h) { return heis_decomposition(h); }
inline Decomposition<BSElement> decompose(const BSGroup&, const BSElement& g) { return bs_two_pal_decomposition(g); }

/// Re-evaluation through the oracle models, sharing no code with eval().
inline bool oracle_evaluates_to(const WreathGroup&, const Word& w, const WreathElement& g) {
  return verify::lamp_match(g, oracle::lamplighter_walk(w));
}
inline bool oracle_evaluates_to(const HeisGroup&, const Word& w, const HeisElement& h) {
  return oracle::matrix_eval(w) == verify::matrix_of(h);
}
inline bool oracle_evaluates_to(const BSGroup& group, const Word& w, const BSElement& g) {
  return verify::affine_match(g, oracle::affine_eval(w, group.n));
}

struct Target {
  nlohmann::json literal;
  std::optional<Word> word;
};

template <class G>
typename G::Element parse_element(const G& group, const std::string& text, std::optional<Word>& word) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return element_from_json(group, detail::parse_json(text, "element literal"));
  }
  word = parse(text, group.alphabet());
  return group.eval(*word);
}

template <class G>
bool recheck(const G& group, const typename G::Element& target, const std::vector<Word>& factors) {
  Word product(group.alphabet());
  for (const Word& f : factors) {
    if (!check::factor_is_palindrome(f)) return false;
    product *= f;
  }
  return oracle_evaluates_to(group, product, target);
}

template <class G>
Json certificate_json(const G& group, const typename G::Element& target, const std::optional<Word>& word,
                      const std::vector<Word>& factors) {
  Json t;
  t["element"] = to_json(target);
  if (word) t["word"] = format(*word);
  Json fs = Json::array();
  for (const Word& f : factors) fs.push_back(format(f));
  Json cert;
  cert["group"] = group.label();
  cert["target"] = t;
  cert["factors"] = fs;
  cert["length"] = factors.size();
  cert["verified"] = recheck(group, target, factors);
  cert["tool_version"] = PALWIDTH_VERSION;
  return cert;
}

// ---- output ----------------------------------------------------------------

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot open output file \"" + path + "\"");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

// ---- subcommands -----------------------------------------------------------

struct Options {
  std::string group = "wreath";
  std::uint64_t seed = 0;
  std::int64_t cases = 1000;
  std::optional<int> max_len;
  std::optional<int> max_factors;
  std::optional<int> radius;
  std::string out;
  std::string recheck;
  std::size_t max_entries = kDefaultMaxEntries;
  std::string input;
};

inline int cmd_decompose(const Options& o, std::ostream& out) {
  Json cert;
  if (!o.recheck.empty()) {
    std::ifstream in(o.recheck);
    if (!in) throw PreconditionError("cannot read certificate \"" + o.recheck + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    const nlohmann::json j = detail::parse_json(buf.str(), "certificate");
    if (!j.is_object() || !j.contains("group") || !j.contains("target") || !j.contains("factors") ||
        !j.at("factors").is_array() || !j.at("group").is_string())
      throw ParseError("certificate must have \"group\", \"target\" and \"factors\"", 0);
    const AnyGroup group = parse_group(j.at("group").get<std::string>());
    cert = std::visit(
        [&](const auto& g) {
          const nlohmann::json& t = j.at("target");
          if (!t.is_object() || !t.contains("element")) throw ParseError("certificate target needs \"element\"", 0);
          const auto element = element_from_json(g, t.at("element"));
          std::optional<Word> word;
          if (t.contains("word")) word = parse(t.at("word").get<std::string>(), g.alphabet());
          std::vector<Word> factors;
          for (const auto& f : j.at("factors")) {
            if (!f.is_string()) throw ParseError("certificate factors must be strings", 0);
            factors.push_back(parse(f.get<std::string>(), g.alphabet()));
          }
          Json c = certificate_json(g, element, word, factors);
          if (word && !(g.eval(*word) == element)) c["verified"] = false;
          return c;
        },
        group);
  } else {
    if (o.input.empty()) throw ParseError("decompose needs an element or word (or --recheck FILE)", 0);
    const AnyGroup group = parse_group(o.group);
    cert = std::visit(
        [&](const auto& g) {
          std::optional<Word> word;
          const auto element = parse_element(g, o.input, word);
          const auto d = decompose(g, element);
          return certificate_json(g, element, word, d.factors);
        },
        group);
  }
  Output sink(o.out, out);
  sink.stream() << cert.dump(2) << '\n';
  return cert["verified"].get<bool>() ? kOk : kVerificationFailed;
}

inline Json support_json(const SupportVector& f) {
  Json j = Json::object();
  for (const auto& [i, n] : f) j[std::to_string(i)] = n;
  return j;
}

inline int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.group != "wreath") throw ParseError("witness is only defined for --group wreath", 0);
  if (o.input.empty()) throw ParseError("witness needs an element literal", 0);
  std::optional<Word> word;
  const WreathElement c = parse_element(WreathGroup{}, o.input, word);
  if (!in_derived(c)) {
    err << "error: element is not in G' (needs shift 0 and exponent sum 0)\n";
    return kVerificationFailed;
  }
  const SupportVector f = commutator_witness(c);
  const WreathElement comm = commutator_with_b(f);
  Json j;
  j["element"] = to_json(c);
  j["f"] = support_json(f);
  j["commutator"] = to_json(comm);
  j["verified"] = comm == c;
  Output sink(o.out, out);
  sink.stream() << j.dump(2) << '\n';
  return comm == c ? kOk : kVerificationFailed;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<const verify::Suite*> chosen;
  if (o.input == "all") {
    for (const auto& s : verify::suites()) chosen.push_back(&s);
  } else if (const auto* s = verify::find_suite(o.input)) {
    chosen.push_back(s);
  } else {
    err << "error: unknown suite \"" << o.input << "\"; known suites:";
    for (const auto& s : verify::suites()) err << ' ' << s.name;
    err << " all\n";
    return kUsage;
  }
  Json report;
  report["seed"] = o.seed;
  report["cases"] = o.cases;
  Json results = Json::array();
  bool passed = true;
  for (const auto* s : chosen) {
    const SuiteReport r = run_suite(*s, o.seed, o.cases);
    passed = passed && r.passed();
    results.push_back(Json::parse(to_json(r).dump()));
  }
  report["suites"] = results;
  report["passed"] = passed;
  Output sink(o.out, out);
  sink.stream() << report.dump(2) << '\n';
  return passed ? kOk : kVerificationFailed;
}

template <class G>
int explore_ball(const G& group, const Options& o, std::ostream& out, std::ostream& err) {
  const int radius = o.radius.value_or(0);
  BallTable table;
  bool partial = false;
  try {
    table = ball_table(group, radius, o.max_entries);
  } catch (const BudgetExceeded& e) {
    err << "warning: " << e.what() << "; writing the ball of radius " << e.completed_depth() << '\n';
    table = ball_table(group, e.completed_depth(), o.max_entries);
    partial = true;
  }
  Output sink(o.out, out);
  write_csv(sink.stream(), table);
  return partial ? kBudget : kOk;
}

/// Histogram of bounded palindromic length over the ball of the given radius (default 4).
template <class G>
int explore_histogram(const G& group, const Options& o, std::ostream& out, std::ostream& err) {
  const int max_len = o.max_len.value_or(8);
  const int max_factors = o.max_factors.value_or(2);
  const int radius = o.radius.value_or(4);
  if (max_len < 0 || max_factors < 1) throw PreconditionError("explore needs --max-len >= 0 and --max-factors >= 1");

  Json j;
  j["group"] = group.label();
  j["radius"] = radius;
  j["max_len"] = max_len;
  j["max_factors"] = max_factors;
  std::map<std::string, std::int64_t> counts;
  std::int64_t targets = 0;
  bool partial = false;
  try {
    const BallTable ball = ball_table(group, radius, o.max_entries);
    PalindromeProducts<G> products(group, max_len, o.max_entries);
    for (const BallEntry& e : ball.entries) {
      const auto r = pal_length_bounded(products, group.eval(e.witness), max_factors);
      ++counts[r.length ? std::to_string(*r.length) : "unknown"];
      ++targets;
    }
  } catch (const BudgetExceeded& e) {
    err << "warning: " << e.what() << " (completed depth " << e.completed_depth() << ")\n";
    partial = true;
  }
  Json hist = Json::object();
  for (const auto& [k, n] : counts) hist[k] = n;
  j["targets"] = targets;
  j["histogram"] = hist;
  j["partial"] = partial;
  Output sink(o.out, out);
  sink.stream() << j.dump(2) << '\n';
  return partial ? kBudget : kOk;
}

inline int cmd_explore(const Options& o, std::ostream& out, std::ostream& err) {
  const AnyGroup group = parse_group(o.group);
  const bool histogram = o.max_len.has_value() || o.max_factors.has_value();
  return std::visit(
      [&](const auto& g) { return histogram ? explore_histogram(g, o, out, err) : explore_ball(g, o, out, err); },
      group);
}

// ---- entry point -----------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic width toolkit for Z wr Z, BS(1,n) and N(2,2)", "palwidth"};
  app.set_version_flag("--version", PALWIDTH_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--group", o.group, "wreath | heis | bs:N")->capture_default_str();
  app.add_option("--seed", o.seed, "PRNG seed (mt19937_64)")->capture_default_str();
  app.add_option("--cases", o.cases, "cases per property suite")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--max-len", o.max_len, "longest palindrome in searches");
  app.add_option("--max-factors", o.max_factors, "most palindromic factors in searches");
  app.add_option("--radius", o.radius, "Cayley ball radius")->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out, "write output to this file");
  app.add_option("--max-entries", o.max_entries, "cap on stored search entries")->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "palindromic factorization certificate");
  decompose_cmd->add_option("element", o.input, "word or element literal");
  decompose_cmd->add_option("--recheck", o.recheck, "re-verify a certificate file");
  auto* witness_cmd = app.add_subcommand("witness", "f with [f, b] = c for c in the derived subgroup of Z wr Z");
  witness_cmd->add_option("element", o.input, "wreath element literal")->required();
  auto* verify_cmd = app.add_subcommand("verify", "run a named property suite");
  verify_cmd->add_option("suite", o.input, "suite name or all")->required();
  auto* explore_cmd = app.add_subcommand("explore", "Cayley ball CSV or bounded length histogram");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (witness_cmd->parsed()) return cmd_witness(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (explore_cmd->parsed()) return cmd_explore(o, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const WordLengthError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace palwidth::cli
