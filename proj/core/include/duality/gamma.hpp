#pragma once
// Gamma_n alphabet machinery: unary V_n-structures, kernels, tuple coding,
// numerical relations carved out by languages, and neutral-letter closures.
//
// A Gamma_n symbol (0, V) with V a subset of {x_1..x_n} is represented by the
// bitmask of V (bit i-1 set <=> x_i in V).  The padding symbol (0, {}) has
// mask 0.  Wire format: "." for the padding symbol, "xi+xj+..." with indices
// ascending otherwise; words are whitespace-separated token sequences.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace duality {

using gamma_symbol = std::uint32_t;
using gamma_word = std::vector<gamma_symbol>;

std::string gamma_token(gamma_symbol v);
gamma_symbol parse_gamma_token(const std::string& tok, int n);
std::string format_gamma_word(const gamma_word& w);
gamma_word parse_gamma_word(const std::string& text, int n);

// All 2^n symbols of Gamma_n as tokens, in mask order (padding first).
std::vector<std::string> gamma_alphabet(int n);

bool is_unary_structure(const gamma_word& w, int n);

// Strip trailing padding symbols; w must be a unary structure.
gamma_word kernel(const gamma_word& w);

// tuple_of: positions of x_1..x_n (1-based).  encode: inverse, padded to m.
std::vector<int> tuple_of(const gamma_word& w, int n);
gamma_word encode(const std::vector<int>& t, int m);

// A bounded enumeration of an n-ary relation over positive integers.
struct num_relation {
  int arity = 0;
  int bound = 0;
  std::set<std::vector<int>> tuples;

  bool operator==(const num_relation&) const = default;
};

// L^N: tuples of all accepted unary structures of length <= max_len.
num_relation relation_of_language(
    const std::function<bool(const gamma_word&)>& member, int n, int max_len);

bool is_kernel_closed(const std::vector<gamma_word>& language, int n);

// Neutral-letter closure ~L over plain character strings: the returned
// tester deletes every occurrence of e before consulting member.
std::function<bool(const std::string&)> neutralize_member(
    std::function<bool(const std::string&)> member, char e);

struct nfa;

// Union over the given ordered partitions (V_1..V_k) of V_n of the padded
// products (0,{})* (0,V_1) (0,{})* ... (0,V_k) (0,{})*, over Gamma_n tokens.
// Throws if a sequence is not a partition of {x_1..x_n}.
nfa neutral_union_nfa(int n,
                      const std::vector<std::vector<gamma_symbol>>& partitions);

}  // namespace duality
