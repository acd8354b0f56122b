#include "duality/gamma.hpp"

#include <sstream>
#include <stdexcept>

#include "duality/nfa.hpp"

namespace duality {

std::string gamma_token(gamma_symbol v) {
  if (v == 0) return ".";
  std::string out;
  for (int i = 0; v >> i; ++i) {
    if (v & (1u << i)) {
      if (!out.empty()) out += '+';
      out += 'x';
      out += std::to_string(i + 1);
    }
  }
  return out;
}

gamma_symbol parse_gamma_token(const std::string& tok, int n) {
  if (tok == ".") return 0;
  gamma_symbol v = 0;
  size_t pos = 0;
  while (pos < tok.size()) {
    if (tok[pos] != 'x')
      throw std::invalid_argument("bad Gamma token: " + tok);
    ++pos;
    size_t start = pos;
    while (pos < tok.size() && isdigit((unsigned char)tok[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("bad Gamma token: " + tok);
    int idx = std::stoi(tok.substr(start, pos - start));
    if (idx < 1 || idx > n)
      throw std::invalid_argument("variable index out of range in: " + tok);
    if (v & (1u << (idx - 1)))
      throw std::invalid_argument("duplicate variable in token: " + tok);
    v |= 1u << (idx - 1);
    if (pos < tok.size()) {
      if (tok[pos] != '+')
        throw std::invalid_argument("bad Gamma token: " + tok);
      ++pos;
    }
  }
  if (v == 0) throw std::invalid_argument("empty Gamma token");
  return v;
}

std::string format_gamma_word(const gamma_word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += gamma_token(w[i]);
  }
  return out;
}

gamma_word parse_gamma_word(const std::string& text, int n) {
  gamma_word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.push_back(parse_gamma_token(tok, n));
  return w;
}

std::vector<std::string> gamma_alphabet(int n) {
  std::vector<std::string> out;
  for (gamma_symbol v = 0; v < (1u << n); ++v) out.push_back(gamma_token(v));
  return out;
}

bool is_unary_structure(const gamma_word& w, int n) {
  gamma_symbol seen = 0;
  for (gamma_symbol s : w) {
    if (s >= (1u << n)) return false;
    if (s & seen) return false;
    seen |= s;
  }
  return seen == (1u << n) - 1;
}

gamma_word kernel(const gamma_word& w) {
  gamma_word out = w;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<int> tuple_of(const gamma_word& w, int n) {
  std::vector<int> t(n, 0);
  for (size_t p = 0; p < w.size(); ++p)
    for (int i = 0; i < n; ++i)
      if (w[p] & (1u << i)) t[i] = (int)p + 1;
  for (int i = 0; i < n; ++i)
    if (t[i] == 0)
      throw std::invalid_argument("not a unary V_n-structure: x" +
                                  std::to_string(i + 1) + " missing");
  return t;
}

gamma_word encode(const std::vector<int>& t, int m) {
  int cmax = 0;
  for (int c : t) {
    if (c < 1) throw std::invalid_argument("tuple entries must be >= 1");
    cmax = std::max(cmax, c);
  }
  if (m < cmax) throw std::invalid_argument("encode: m < max(t)");
  gamma_word w(m, 0);
  for (size_t i = 0; i < t.size(); ++i) w[t[i] - 1] |= 1u << i;
  return w;
}

num_relation relation_of_language(
    const std::function<bool(const gamma_word&)>& member, int n, int max_len) {
  num_relation rel;
  rel.arity = n;
  rel.bound = max_len;
  // Unary structures of length <= max_len are exactly the encodings of
  // tuples with max entry <= m, for each padding length m; enumerate those
  // instead of all |Gamma_n|^len words.
  std::vector<int> t(n, 1);
  auto scan = [&](auto&& self, int i) -> void {
    if (i == n) {
      int cmax = 0;
      for (int c : t) cmax = std::max(cmax, c);
      for (int m = cmax; m <= max_len; ++m)
        if (member(encode(t, m))) {
          rel.tuples.insert(t);
          break;
        }
      return;
    }
    for (t[i] = 1; t[i] <= max_len; ++t[i]) self(self, i + 1);
    t[i] = 1;
  };
  scan(scan, 0);
  return rel;
}

bool is_kernel_closed(const std::vector<gamma_word>& language, int n) {
  std::set<gamma_word> members(language.begin(), language.end());
  for (const auto& w : language) {
    if (!is_unary_structure(w, n))
      throw std::invalid_argument("is_kernel_closed: not a unary structure");
    if (!members.count(kernel(w))) return false;
  }
  return true;
}

std::function<bool(const std::string&)> neutralize_member(
    std::function<bool(const std::string&)> member, char e) {
  return [member = std::move(member), e](const std::string& w) {
    std::string stripped;
    stripped.reserve(w.size());
    for (char c : w)
      if (c != e) stripped += c;
    return member(stripped);
  };
}

nfa neutral_union_nfa(
    int n, const std::vector<std::vector<gamma_symbol>>& partitions) {
  gamma_symbol full = (1u << n) - 1;
  nfa a;
  a.alphabet = gamma_alphabet(n);
  for (const auto& seq : partitions) {
    gamma_symbol seen = 0;
    for (gamma_symbol v : seq) {
      if (v == 0 || v > full || (v & seen))
        throw std::invalid_argument("neutral_union_nfa: not a partition");
      seen |= v;
    }
    if (seen != full)
      throw std::invalid_argument("neutral_union_nfa: not a partition");
    // A fresh chain state per block, padding self-loops everywhere.
    int base = a.num_states;
    a.num_states += (int)seq.size() + 1;
    a.transitions.resize(a.num_states);
    a.epsilon.resize(a.num_states);
    a.initial.push_back(base);
    for (size_t i = 0; i <= seq.size(); ++i)
      a.add_transition(base + (int)i, ".", base + (int)i);
    for (size_t i = 0; i < seq.size(); ++i)
      a.add_transition(base + (int)i, gamma_token(seq[i]), base + (int)i + 1);
    a.accepting.insert(base + (int)seq.size());
  }
  return a;
}

}  // namespace duality
