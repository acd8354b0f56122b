#pragma once
// Tarskian evaluation of formulas on word structures, language/relation
// extraction, Lindstrom quantifier semantics, and the Prop. 3 rewriting
// constructions.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "duality/formula.hpp"
#include "duality/gamma.hpp"

namespace duality {

struct word_structure {
  std::vector<std::string> alphabet;
  std::vector<std::string> word;  // positions are 1-based in formulas

  int size() const { return (int)word.size(); }

  // A structure carrying no letters, for letter-free evaluation.
  static word_structure blank(int m);
  // One symbol per character of chars; alphabet given as characters.
  static word_structure from_chars(const std::string& chars,
                                   const std::string& alphabet);
  static word_structure from_gamma(const gamma_word& w, int n);
};

using assignment = std::map<std::string, int>;

struct language_ref {
  // Alphabet order matters for Lindstrom transformations: letters a_1..a_t
  // in order, with a_t the default letter of the case rule.
  std::vector<std::string> alphabet;
  std::function<bool(const std::vector<std::string>&)> member;
};

class language_registry {
 public:
  void add(const std::string& name, language_ref ref);
  const language_ref* find(const std::string& name) const;

 private:
  std::map<std::string, language_ref> table_;
};

struct eval_context {
  const num_predicate_registry* predicates = &num_predicate_registry::builtins();
  const language_registry* languages = nullptr;
};

bool eval(const formula& f, const word_structure& s, const assignment& a,
          const eval_context& ctx = {});

// All words over alphabet of length <= max_len satisfying the sentence f.
std::set<std::vector<std::string>> language_of(
    const formula& f, const std::vector<std::string>& alphabet, int max_len,
    const eval_context& ctx = {});

// Tuples c with entries in 1..bound such that the letter-free structure of
// size m satisfies f(c) for every m in [c_max, c_max+window].
num_relation relation_of(const formula& f,
                         const std::vector<std::string>& vars, int bound,
                         int window = 4, const eval_context& ctx = {});

// The FO[<]-transformation + membership semantics of the Lindstrom
// quantifier, exposed directly.
bool eval_lindstrom(const language_ref& lang,
                    const std::vector<formula>& bodies,
                    const word_structure& s, const assignment& a,
                    const std::string& var, const eval_context& ctx = {});

// Builds the transformed word itself (useful for tests/CLI).
std::vector<std::string> lindstrom_transform(
    const language_ref& lang, const std::vector<formula>& bodies,
    const word_structure& s, const assignment& a, const std::string& var,
    const eval_context& ctx = {});

// Prop. 3: replace P_(0,V)(t) by /\_{x_i in V} t=x_i  /\_{x_i notin V} t!=x_i.
formula rewrite_letter_to_equalities(const formula& f, int n);

// Prop. 3: the binding formula chi(x_1..x_n); true on u iff u is a unary
// V_n-structure with x_i at the assigned position of x_i.
formula build_chi(int n);

}  // namespace duality
