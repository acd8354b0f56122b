#pragma once
// NFA/DFA with Boolean algebra.  Symbols are strings (single characters for
// languages over {0,1,a,...}, Gamma tokens for V_n-structure languages).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace duality {

struct nfa {
  int num_states = 0;
  std::vector<std::string> alphabet;
  // transitions[state][symbol index] -> targets; epsilon[state] -> targets
  std::vector<std::map<int, std::vector<int>>> transitions;
  std::vector<std::vector<int>> epsilon;
  std::vector<int> initial;
  std::set<int> accepting;
  bool deterministic = false;  // set by determinize(); complete DFA

  int symbol_index(const std::string& sym) const;
  void add_transition(int from, const std::string& sym, int to);
  void add_epsilon(int from, int to);
};

enum class nfa_op { intersect, unite, subtract };

using word = std::vector<std::string>;

bool nfa_accepts(const nfa& a, const word& w);
bool nfa_accepts(const nfa& a, const std::string& chars);  // 1-char symbols

nfa determinize(const nfa& a);               // complete DFA
nfa nfa_complement(const nfa& dfa);          // requires deterministic input
nfa nfa_product(const nfa& a, const nfa& b, nfa_op op);

// Words of length <= max_len accepted by a, ordered by length then
// lexicographically by symbol index.
std::vector<word> enumerate_words(const nfa& a, int max_len);

word word_of_chars(const std::string& chars);
std::string chars_of_word(const word& w);

// Helpers used by constructions: single-regex-ish building blocks.
nfa nfa_for_word_set(const std::vector<std::string>& alphabet,
                     const std::vector<word>& words);

}  // namespace duality
