#pragma once
// Line-oriented text serialization for machines.  Layout:
//
//   <kind>                       nfa | dpda | npda | transducer
//   states <N>
//   alphabet <tok> ...           (input alphabet)
//   ...kind-specific headers...
//   initial <s> ...
//   accepting <s> ...
//   trans ... / eps ... / rule ...   one transition per line
//   end
//
// Empty push strings serialize as "-", epsilon input as "@".  Gamma tokens
// and plain symbols are used verbatim (they never contain whitespace).

#include <string>

#include "duality/nfa.hpp"
#include "duality/pda.hpp"
#include "duality/transducer.hpp"

namespace duality {

std::string serialize(const nfa& a);
std::string serialize(const dpda& p);
std::string serialize(const npda& p);
std::string serialize(const transducer& t);

nfa parse_nfa(const std::string& text);
dpda parse_dpda(const std::string& text);
npda parse_npda(const std::string& text);
transducer parse_transducer(const std::string& text);

}  // namespace duality
