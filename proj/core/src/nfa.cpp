#include "duality/nfa.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace duality {

int nfa::symbol_index(const std::string& sym) const {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == sym) return (int)i;
  throw std::invalid_argument("symbol not in alphabet: " + sym);
}

void nfa::add_transition(int from, const std::string& sym, int to) {
  transitions.resize(num_states);
  epsilon.resize(num_states);
  if (from < 0 || from >= num_states || to < 0 || to >= num_states)
    throw std::invalid_argument("transition references undeclared state");
  auto& vec = transitions[from][symbol_index(sym)];
  if (std::find(vec.begin(), vec.end(), to) == vec.end()) vec.push_back(to);
}

void nfa::add_epsilon(int from, int to) {
  transitions.resize(num_states);
  epsilon.resize(num_states);
  if (from < 0 || from >= num_states || to < 0 || to >= num_states)
    throw std::invalid_argument("transition references undeclared state");
  auto& vec = epsilon[from];
  if (std::find(vec.begin(), vec.end(), to) == vec.end()) vec.push_back(to);
}

namespace {

std::set<int> closure(const nfa& a, std::set<int> states) {
  std::vector<int> stack(states.begin(), states.end());
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    if (s < (int)a.epsilon.size())
      for (int t : a.epsilon[s])
        if (states.insert(t).second) stack.push_back(t);
  }
  return states;
}

std::set<int> step(const nfa& a, const std::set<int>& states, int sym) {
  std::set<int> next;
  for (int s : states) {
    if (s >= (int)a.transitions.size()) continue;
    auto it = a.transitions[s].find(sym);
    if (it != a.transitions[s].end())
      next.insert(it->second.begin(), it->second.end());
  }
  return closure(a, std::move(next));
}

}  // namespace

bool nfa_accepts(const nfa& a, const word& w) {
  std::set<int> cur = closure(a, {a.initial.begin(), a.initial.end()});
  for (const auto& sym : w) {
    cur = step(a, cur, a.symbol_index(sym));
    if (cur.empty()) break;
  }
  for (int s : cur)
    if (a.accepting.count(s)) return true;
  return false;
}

bool nfa_accepts(const nfa& a, const std::string& chars) {
  return nfa_accepts(a, word_of_chars(chars));
}

nfa determinize(const nfa& a) {
  nfa d;
  d.alphabet = a.alphabet;
  d.deterministic = true;
  std::map<std::set<int>, int> ids;
  std::vector<std::set<int>> order;
  auto intern = [&](std::set<int> s) {
    auto [it, fresh] = ids.emplace(std::move(s), (int)order.size());
    if (fresh) order.push_back(it->first);
    return it->second;
  };
  int start = intern(closure(a, {a.initial.begin(), a.initial.end()}));
  d.initial = {start};
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      std::set<int> cur = order[i];  // copy: order may reallocate below
      int t = intern(step(a, cur, (int)sym));
      d.num_states = (int)order.size();
      d.transitions.resize(d.num_states);
      d.epsilon.resize(d.num_states);
      d.transitions[i][(int)sym] = {t};
    }
  d.num_states = (int)order.size();
  d.transitions.resize(d.num_states);
  d.epsilon.resize(d.num_states);
  for (size_t i = 0; i < order.size(); ++i)
    for (int s : order[i])
      if (a.accepting.count(s)) {
        d.accepting.insert((int)i);
        break;
      }
  return d;
}

nfa nfa_complement(const nfa& dfa) {
  if (!dfa.deterministic)
    throw std::invalid_argument("complement requires a determinized DFA");
  nfa out = dfa;
  out.accepting.clear();
  for (int s = 0; s < dfa.num_states; ++s)
    if (!dfa.accepting.count(s)) out.accepting.insert(s);
  return out;
}

nfa nfa_product(const nfa& a, const nfa& b, nfa_op op) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("product requires identical alphabets");
  nfa da = a.deterministic ? a : determinize(a);
  nfa db = b.deterministic ? b : determinize(b);
  nfa p;
  p.alphabet = da.alphabet;
  p.deterministic = true;
  p.num_states = da.num_states * db.num_states;
  p.transitions.resize(p.num_states);
  p.epsilon.resize(p.num_states);
  auto id = [&](int x, int y) { return x * db.num_states + y; };
  p.initial = {id(da.initial[0], db.initial[0])};
  for (int x = 0; x < da.num_states; ++x)
    for (int y = 0; y < db.num_states; ++y)
      for (size_t sym = 0; sym < p.alphabet.size(); ++sym) {
        int tx = da.transitions[x].at((int)sym)[0];
        int ty = db.transitions[y].at((int)sym)[0];
        p.transitions[id(x, y)][(int)sym] = {id(tx, ty)};
      }
  for (int x = 0; x < da.num_states; ++x)
    for (int y = 0; y < db.num_states; ++y) {
      bool ax = da.accepting.count(x) > 0, ay = db.accepting.count(y) > 0;
      bool acc = op == nfa_op::intersect ? (ax && ay)
                 : op == nfa_op::unite   ? (ax || ay)
                                         : (ax && !ay);
      if (acc) p.accepting.insert(id(x, y));
    }
  return p;
}

std::vector<word> enumerate_words(const nfa& a, int max_len) {
  std::vector<word> out;
  word w;
  auto rec = [&](auto&& self) -> void {
    if (nfa_accepts(a, w)) out.push_back(w);
    if ((int)w.size() == max_len) return;
    for (const auto& sym : a.alphabet) {
      w.push_back(sym);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  std::stable_sort(out.begin(), out.end(),
                   [](const word& x, const word& y) {
                     return x.size() < y.size();
                   });
  return out;
}

word word_of_chars(const std::string& chars) {
  word w;
  for (char c : chars) w.push_back(std::string(1, c));
  return w;
}

std::string chars_of_word(const word& w) {
  std::string out;
  for (const auto& sym : w) {
    if (sym.size() != 1)
      throw std::invalid_argument("multi-character symbol in chars_of_word");
    out += sym;
  }
  return out;
}

nfa nfa_for_word_set(const std::vector<std::string>& alphabet,
                     const std::vector<word>& words) {
  nfa a;
  a.alphabet = alphabet;
  a.num_states = 1;
  a.transitions.resize(1);
  a.epsilon.resize(1);
  a.initial = {0};
  for (const auto& w : words) {
    int cur = 0;
    for (const auto& sym : w) {
      int next = a.num_states++;
      a.transitions.resize(a.num_states);
      a.epsilon.resize(a.num_states);
      a.add_transition(cur, sym, next);
      cur = next;
    }
    a.accepting.insert(cur);
  }
  return a;
}

}  // namespace duality
