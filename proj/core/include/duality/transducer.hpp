#pragma once
// Deterministic finite-state transducers with optional end-of-input outputs,
// plus the psi/chi transducers relating a_1*...a_m* words and sorted unary
// structures.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "duality/gamma.hpp"

namespace duality {

struct transducer {
  int num_states = 0;
  std::vector<std::string> input_alphabet;
  std::vector<std::string> output_alphabet;
  // (state, input symbol index) -> (next state, output word)
  std::map<std::pair<int, int>, std::pair<int, std::vector<std::string>>>
      transitions;
  int initial = 0;
  std::set<int> accepting;
  // emitted after the last input symbol when the run ends in the state
  std::map<int, std::vector<std::string>> final_output;

  void add(int state, const std::string& in, int next,
           const std::vector<std::string>& out);
};

// Output along the unique run, or nullopt if the run gets stuck or ends in a
// non-accepting state.
std::optional<std::vector<std::string>> transduce(
    const transducer& t, const std::vector<std::string>& w);

// chi: maps words in a_1*...a_m* to sorted unary V_m-structures; the block
// boundary of a_j becomes (0,{x_j}), everything else padding.
transducer chi_transducer(int m);

// psi is chi's left inverse; it needs unbounded lookahead left to right, so
// the deterministic machine runs on the reversed word (see apply_psi).
transducer psi_reversed_transducer(int m);

// psi applied to a sorted unary structure given as Gamma word (singleton
// symbols and padding only): reverse, transduce, reverse back.
std::optional<std::vector<std::string>> apply_psi(int m, const gamma_word& w);

// chi applied to a word in a_1*...a_m* (symbols "a1".."am").
std::optional<gamma_word> apply_chi(int m,
                                    const std::vector<std::string>& w);

}  // namespace duality
