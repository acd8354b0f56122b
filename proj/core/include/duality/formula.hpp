#pragma once
// First-order formulas over words with generalized quantifiers and named
// numerical-predicate atoms.  Grammar (whitespace-insensitive):
//
//   formula := quant | iff
//   quant   := ("exists"|"forall"|"maj") IDENT "." formula
//            | "existsmod" "[" NUM "," NUM "]" IDENT "." formula
//            | "lind" "[" NAME "]" IDENT "." "[" formula (";" formula)* "]"
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" or)*
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "(" formula ")" | atom
//   atom    := "Q" SYMBOL "(" IDENT ")" | IDENT "<" IDENT | IDENT "=" IDENT
//            | NAME "(" IDENT ("," IDENT)* ")" | "true" | "false"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace duality {

enum class node_kind {
  truth,
  falsity,
  letter_at,   // name = letter symbol, terms[0]
  num_atom,    // name = predicate, terms
  less,        // terms[0] < terms[1]
  equal,
  not_,
  and_,
  or_,
  implies,
  iff,
  exists,      // var, children[0]
  forall,
  mod_exists,  // q, r, var, children[0]
  majority,
  lindstrom,   // name = language ref, var, children = body list
};

struct formula_node;
using formula = std::shared_ptr<const formula_node>;

struct formula_node {
  node_kind kind;
  std::string name;
  std::vector<std::string> terms;
  std::string var;
  int q = 0, r = 0;
  std::vector<formula> children;
};

formula f_true();
formula f_false();
formula f_letter(const std::string& symbol, const std::string& term);
formula f_atom(const std::string& pred, const std::vector<std::string>& terms);
formula f_less(const std::string& a, const std::string& b);
formula f_equal(const std::string& a, const std::string& b);
formula f_not(formula a);
formula f_and(formula a, formula b);
formula f_or(formula a, formula b);
formula f_implies(formula a, formula b);
formula f_iff(formula a, formula b);
formula f_exists(const std::string& var, formula body);
formula f_forall(const std::string& var, formula body);
formula f_mod_exists(int q, int r, const std::string& var, formula body);
formula f_majority(const std::string& var, formula body);
formula f_lindstrom(const std::string& lang, const std::string& var,
                    std::vector<formula> bodies);

// Conjunction/disjunction of a list (true/false for the empty list).
formula f_all(const std::vector<formula>& fs);
formula f_any(const std::vector<formula>& fs);

struct num_predicate {
  int arity;
  // args are 1-based positions; m is the universe size
  std::function<bool(const std::vector<int>&, int m)> eval;
};

class num_predicate_registry {
 public:
  void add(const std::string& name, num_predicate pred);
  // Resolves registered names and the modq[q,r] pattern.
  std::optional<num_predicate> find(const std::string& name) const;
  bool known(const std::string& name) const { return find(name).has_value(); }

  // <, =, plus (x+y=z), times (x*y=z), bit, even, modq[q,r]
  static const num_predicate_registry& builtins();

 private:
  std::map<std::string, num_predicate> table_;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, size_t pos);
  size_t position;
};

formula parse_formula(
    const std::string& text,
    const num_predicate_registry& registry = num_predicate_registry::builtins());
std::string pretty_print(const formula& f);

std::set<std::string> free_variables(const formula& f);
bool contains_letter_atoms(const formula& f);
bool contains_lindstrom(const formula& f);

}  // namespace duality
