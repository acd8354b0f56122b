// Command line front end: formula evaluation, language membership, relation
// extraction, stratification checks, verification suites, tuple coding.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "duality/catalog.hpp"
#include "duality/constructions.hpp"
#include "duality/eval.hpp"
#include "duality/gamma.hpp"
#include "duality/semilinear.hpp"
#include "duality/verify.hpp"

namespace {

using namespace duality;

assignment parse_assignment(const std::string& text) {
  assignment a;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad assignment entry: " + part);
    a[part.substr(0, eq)] = std::stoi(part.substr(eq + 1));
  }
  return a;
}

std::vector<std::string> symbols_for(const language_ref& lang,
                                     const std::string& text) {
  bool chars_only = true;
  for (const auto& s : lang.alphabet)
    if (s.size() != 1) chars_only = false;
  std::vector<std::string> w;
  if (chars_only) {
    for (char c : text) w.push_back(std::string(1, c));
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.push_back(tok);
  }
  return w;
}

std::string tuple_str(const std::vector<int>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

int cmd_eval(const std::string& formula_text, const std::string& word,
             const std::string& alphabet, const std::string& assign) {
  eval_context ctx;
  ctx.languages = &default_languages();
  formula f = parse_formula(formula_text);
  word_structure s = word_structure::from_chars(word, alphabet);
  bool result = eval(f, s, parse_assignment(assign), ctx);
  std::cout << (result ? "true" : "false") << "\n";
  return result ? 0 : 1;
}

int cmd_member(const std::string& lang_name, const std::string& word) {
  const language_ref* lang = default_languages().find(lang_name);
  if (!lang) throw std::invalid_argument("unknown language: " + lang_name);
  bool result = lang->member(symbols_for(*lang, word));
  std::cout << (result ? "true" : "false") << "\n";
  return result ? 0 : 1;
}

int cmd_relation(const std::string& lang_name, const std::string& formula_text,
                 int arity, int bound, int window) {
  num_relation rel;
  if (!lang_name.empty()) {
    const language_ref* lang = default_languages().find(lang_name);
    if (!lang) throw std::invalid_argument("unknown language: " + lang_name);
    rel = relation_of_language(
        [&](const gamma_word& w) {
          std::vector<std::string> tokens;
          for (gamma_symbol s : w) tokens.push_back(gamma_token(s));
          return lang->member(tokens);
        },
        arity, bound);
  } else {
    eval_context ctx;
    ctx.languages = &default_languages();
    formula f = parse_formula(formula_text);
    std::set<std::string> free = free_variables(f);
    std::vector<std::string> vars(free.begin(), free.end());
    if ((int)vars.size() != arity)
      throw std::invalid_argument("formula has " +
                                  std::to_string(vars.size()) +
                                  " free variables, --arity says " +
                                  std::to_string(arity));
    rel = relation_of(f, vars, bound, window, ctx);
  }
  for (const auto& t : rel.tuples) std::cout << tuple_str(t) << "\n";
  return 0;
}

int cmd_stratified(const std::string& periods_json) {
  auto parsed = nlohmann::json::parse(periods_json);
  std::vector<std::vector<long>> periods;
  for (const auto& p : parsed) periods.push_back(p.get<std::vector<long>>());
  bool result = is_stratified(periods);
  std::cout << (result ? "true" : "false") << "\n";
  return result ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::map<std::string, long>& params,
               bool as_json) {
  suite_report r = run_suite(suite, params);
  if (as_json) {
    std::cout << report_to_json(r).dump() << "\n";
  } else {
    std::cout << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " ("
              << r.cases << " cases, " << r.failures_total << " failures, "
              << r.millis << " ms)\n";
    for (const auto& f : r.failures)
      std::cout << "  " << f.input << " expected=" << f.expected
                << " actual=" << f.actual << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_encode(const std::string& tuple_text, int length) {
  std::vector<int> t;
  std::istringstream in(tuple_text);
  std::string part;
  while (std::getline(in, part, ',')) t.push_back(std::stoi(part));
  if (length == 0)
    for (int c : t) length = std::max(length, c);
  std::cout << format_gamma_word(encode(t, length)) << "\n";
  return 0;
}

int cmd_decode(const std::string& word, int arity) {
  gamma_word w = parse_gamma_word(word, arity);
  std::cout << tuple_str(tuple_of(w, arity)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for word logics, pushdown machines, and "
               "semilinear sets"};
  app.require_subcommand(1);

  std::string formula_text, word, alphabet, assign;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a word");
  eval_cmd->add_option("--formula", formula_text)->required();
  eval_cmd->add_option("--word", word);
  eval_cmd->add_option("--alphabet", alphabet)->required();
  eval_cmd->add_option("--assign", assign);

  std::string lang_name, member_word;
  auto* member_cmd = app.add_subcommand("member", "test language membership");
  member_cmd->add_option("--lang", lang_name)->required();
  member_cmd->add_option("--word", member_word);

  std::string rel_lang, rel_formula;
  int arity = 0, bound = 0, window = 4;
  auto* rel_cmd =
      app.add_subcommand("relation", "numerical relation of a language or "
                                     "letter-free formula");
  rel_cmd->add_option("--lang", rel_lang);
  rel_cmd->add_option("--formula", rel_formula);
  rel_cmd->add_option("--arity", arity)->required();
  rel_cmd->add_option("--bound", bound)->required();
  rel_cmd->add_option("--window", window);

  std::string periods_json;
  auto* strat_cmd =
      app.add_subcommand("stratified", "check a period set for stratification");
  strat_cmd->add_option("--periods", periods_json)->required();

  std::string suite;
  bool as_json = false;
  std::map<std::string, long> params;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite)->required();
  verify_cmd->add_flag("--json", as_json);
  for (const char* key : {"max_n", "max_len", "max_c", "count", "bound",
                          "seed", "arity"}) {
    std::string flag = "--" + std::string(key);
    for (auto& c : flag)
      if (c == '_') c = '-';
    verify_cmd->add_option_function<long>(
        flag, [&params, key](long v) { params[key] = v; });
  }

  std::string tuple_text;
  int enc_length = 0;
  auto* enc_cmd = app.add_subcommand("encode", "tuple -> Gamma_n word");
  enc_cmd->add_option("--tuple", tuple_text)->required();
  enc_cmd->add_option("--length", enc_length);

  std::string dec_word;
  int dec_arity = 0;
  auto* dec_cmd = app.add_subcommand("decode", "Gamma_n word -> tuple");
  dec_cmd->add_option("--word", dec_word)->required();
  dec_cmd->add_option("--arity", dec_arity)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed())
      return cmd_eval(formula_text, word, alphabet, assign);
    if (member_cmd->parsed()) return cmd_member(lang_name, member_word);
    if (rel_cmd->parsed()) {
      if (rel_lang.empty() == rel_formula.empty())
        throw std::invalid_argument("give exactly one of --lang, --formula");
      return cmd_relation(rel_lang, rel_formula, arity, bound, window);
    }
    if (strat_cmd->parsed()) return cmd_stratified(periods_json);
    if (verify_cmd->parsed()) return cmd_verify(suite, params, as_json);
    if (enc_cmd->parsed()) return cmd_encode(tuple_text, enc_length);
    if (dec_cmd->parsed()) return cmd_decode(dec_word, dec_arity);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
