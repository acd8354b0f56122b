#include "duality/transducer.hpp"

#include <algorithm>
#include <stdexcept>

namespace duality {

namespace {
int index_of(const std::vector<std::string>& alphabet,
             const std::string& sym) {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == sym) return (int)i;
  throw std::invalid_argument("symbol not in alphabet: " + sym);
}
}  // namespace

void transducer::add(int state, const std::string& in, int next,
                     const std::vector<std::string>& out) {
  auto key = std::make_pair(state, index_of(input_alphabet, in));
  if (transitions.count(key))
    throw std::invalid_argument("transducer is deterministic; duplicate rule");
  transitions[key] = {next, out};
}

std::optional<std::vector<std::string>> transduce(
    const transducer& t, const std::vector<std::string>& w) {
  int state = t.initial;
  std::vector<std::string> out;
  for (const auto& sym : w) {
    auto it = t.transitions.find({state, index_of(t.input_alphabet, sym)});
    if (it == t.transitions.end()) return std::nullopt;
    state = it->second.first;
    out.insert(out.end(), it->second.second.begin(),
               it->second.second.end());
  }
  if (!t.accepting.count(state)) return std::nullopt;
  auto fin = t.final_output.find(state);
  if (fin != t.final_output.end())
    out.insert(out.end(), fin->second.begin(), fin->second.end());
  return out;
}

transducer chi_transducer(int m) {
  // chi(w)_i is (0,{x_j}) when w_i = a_j ends its block (last letter or next
  // letter differs) and padding otherwise; realized with a one-symbol delay.
  // States: 0 = start, j = previous symbol was a_j (output pending).
  transducer t;
  t.num_states = m + 1;
  for (int j = 1; j <= m; ++j) t.input_alphabet.push_back("a" + std::to_string(j));
  for (gamma_symbol v = 0; v < (1u << m); ++v)
    t.output_alphabet.push_back(gamma_token(v));
  t.initial = 0;
  for (int j = 0; j <= m; ++j) t.accepting.insert(j);
  for (int j = 1; j <= m; ++j) {
    t.add(0, "a" + std::to_string(j), j, {});
    for (int k = j; k <= m; ++k)  // blocks appear in ascending order
      t.add(j, "a" + std::to_string(k), k,
            {k == j ? gamma_token(0) : gamma_token(1u << (j - 1))});
    t.final_output[j] = {gamma_token(1u << (j - 1))};
  }
  return t;
}

transducer psi_reversed_transducer(int m) {
  // On the reversed structure: trailing pads come first and emit e; after
  // (0,{x_j}) is seen, every symbol up to the next variable emits a_j.
  // States: 0 = no variable seen yet, j = nearest variable to the right of
  // the current position (in original orientation) is x_j.
  transducer t;
  t.num_states = m + 1;
  t.input_alphabet.push_back(gamma_token(0));
  for (int j = 1; j <= m; ++j)
    t.input_alphabet.push_back(gamma_token(1u << (j - 1)));
  for (int j = 1; j <= m; ++j) t.output_alphabet.push_back("a" + std::to_string(j));
  t.output_alphabet.push_back("e");
  t.initial = 0;
  for (int j = 0; j <= m; ++j) t.accepting.insert(j);
  t.add(0, gamma_token(0), 0, {"e"});
  for (int j = 1; j <= m; ++j) {
    t.add(0, gamma_token(1u << (j - 1)), j, {"a" + std::to_string(j)});
    t.add(j, gamma_token(0), j, {"a" + std::to_string(j)});
    for (int k = 1; k < j; ++k)  // sorted: x_k with k<j lies further left
      t.add(j, gamma_token(1u << (k - 1)), k, {"a" + std::to_string(k)});
  }
  return t;
}

std::optional<std::vector<std::string>> apply_psi(int m,
                                                  const gamma_word& w) {
  transducer t = psi_reversed_transducer(m);
  std::vector<std::string> rev;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    rev.push_back(gamma_token(*it));
  auto out = transduce(t, rev);
  if (!out) return std::nullopt;
  std::reverse(out->begin(), out->end());
  return out;
}

std::optional<gamma_word> apply_chi(int m,
                                    const std::vector<std::string>& w) {
  transducer t = chi_transducer(m);
  auto out = transduce(t, w);
  if (!out) return std::nullopt;
  gamma_word gw;
  for (const auto& tok : *out) gw.push_back(parse_gamma_token(tok, m));
  return gw;
}

}  // namespace duality
