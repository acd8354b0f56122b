#include "duality/machine_io.hpp"

#include <sstream>
#include <stdexcept>

namespace duality {

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_strs(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += xs[i];
  }
  return out;
}

std::string push_repr(const std::string& push) {
  return push.empty() ? "-" : push;
}

std::string push_parse(const std::string& repr) {
  return repr == "-" ? "" : repr;
}

class line_reader {
 public:
  explicit line_reader(const std::string& text) : in_(text) {}
  bool next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      std::istringstream ls(line);
      fields.clear();
      std::string tok;
      while (ls >> tok) fields.push_back(tok);
      if (!fields.empty()) return true;
    }
    return false;
  }

 private:
  std::istringstream in_;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("machine parse error: " + what);
}

}  // namespace

std::string serialize(const nfa& a) {
  std::ostringstream out;
  out << "nfa\n";
  out << "states " << a.num_states << "\n";
  out << "alphabet " << join_strs(a.alphabet) << "\n";
  out << "deterministic " << (a.deterministic ? 1 : 0) << "\n";
  out << "initial " << join_ints(a.initial) << "\n";
  out << "accepting "
      << join_ints({a.accepting.begin(), a.accepting.end()}) << "\n";
  for (size_t s = 0; s < a.transitions.size(); ++s)
    for (const auto& [sym, targets] : a.transitions[s])
      for (int t : targets)
        out << "trans " << s << " " << a.alphabet[sym] << " " << t << "\n";
  for (size_t s = 0; s < a.epsilon.size(); ++s)
    for (int t : a.epsilon[s]) out << "eps " << s << " " << t << "\n";
  out << "end\n";
  return out.str();
}

std::string serialize(const dpda& p) {
  std::ostringstream out;
  out << "dpda\n";
  out << "states " << p.num_states << "\n";
  out << "alphabet " << join_strs(p.alphabet) << "\n";
  out << "stack " << p.stack_alphabet << "\n";
  out << "bottom " << p.bottom << "\n";
  out << "initial " << p.initial << "\n";
  out << "accepting "
      << join_ints({p.accepting.begin(), p.accepting.end()}) << "\n";
  for (const auto& [key, act] : p.delta) {
    auto [state, sym, top] = key;
    out << "rule " << state << " " << (sym < 0 ? "@" : p.alphabet[sym])
        << " " << top << " " << act.state << " " << push_repr(act.push)
        << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string serialize(const npda& p) {
  std::ostringstream out;
  out << "npda\n";
  out << "states " << p.num_states << "\n";
  out << "alphabet " << join_strs(p.alphabet) << "\n";
  out << "stack " << p.stack_alphabet << "\n";
  out << "bottom " << p.bottom << "\n";
  out << "initial " << p.initial << "\n";
  out << "accepting "
      << join_ints({p.accepting.begin(), p.accepting.end()}) << "\n";
  for (const auto& r : p.rules)
    out << "rule " << r.state << " "
        << (r.sym < 0 ? "@" : p.alphabet[r.sym]) << " " << r.top << " "
        << r.next << " " << push_repr(r.push) << "\n";
  out << "end\n";
  return out.str();
}

std::string serialize(const transducer& t) {
  std::ostringstream out;
  out << "transducer\n";
  out << "states " << t.num_states << "\n";
  out << "alphabet " << join_strs(t.input_alphabet) << "\n";
  out << "output-alphabet " << join_strs(t.output_alphabet) << "\n";
  out << "initial " << t.initial << "\n";
  out << "accepting "
      << join_ints({t.accepting.begin(), t.accepting.end()}) << "\n";
  for (const auto& [key, val] : t.transitions) {
    out << "rule " << key.first << " " << t.input_alphabet[key.second]
        << " " << val.first;
    for (const auto& sym : val.second) out << " " << sym;
    out << "\n";
  }
  for (const auto& [state, outw] : t.final_output) {
    out << "final " << state;
    for (const auto& sym : outw) out << " " << sym;
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

namespace {

struct header {
  int num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<int> initial;
  std::set<int> accepting;
};

bool read_common(const std::vector<std::string>& f, header& h) {
  if (f[0] == "states") {
    h.num_states = std::stoi(f[1]);
    return true;
  }
  if (f[0] == "alphabet") {
    h.alphabet.assign(f.begin() + 1, f.end());
    return true;
  }
  if (f[0] == "initial") {
    for (size_t i = 1; i < f.size(); ++i) h.initial.push_back(std::stoi(f[i]));
    return true;
  }
  if (f[0] == "accepting") {
    for (size_t i = 1; i < f.size(); ++i) h.accepting.insert(std::stoi(f[i]));
    return true;
  }
  return false;
}

}  // namespace

nfa parse_nfa(const std::string& text) {
  line_reader in(text);
  std::vector<std::string> f;
  expect(in.next(f) && f[0] == "nfa", "expected nfa header");
  nfa a;
  header h;
  while (in.next(f)) {
    if (f[0] == "end") break;
    if (read_common(f, h)) continue;
    if (f[0] == "deterministic") {
      a.deterministic = f[1] == "1";
    } else if (f[0] == "trans") {
      a.num_states = h.num_states;
      a.alphabet = h.alphabet;
      a.add_transition(std::stoi(f[1]), f[2], std::stoi(f[3]));
    } else if (f[0] == "eps") {
      a.num_states = h.num_states;
      a.alphabet = h.alphabet;
      a.add_epsilon(std::stoi(f[1]), std::stoi(f[2]));
    } else {
      expect(false, "unknown nfa line: " + f[0]);
    }
  }
  a.num_states = h.num_states;
  a.alphabet = h.alphabet;
  a.transitions.resize(a.num_states);
  a.epsilon.resize(a.num_states);
  a.initial = h.initial;
  a.accepting = h.accepting;
  return a;
}

dpda parse_dpda(const std::string& text) {
  line_reader in(text);
  std::vector<std::string> f;
  expect(in.next(f) && f[0] == "dpda", "expected dpda header");
  dpda p;
  header h;
  std::vector<std::vector<std::string>> rules;
  while (in.next(f)) {
    if (f[0] == "end") break;
    if (read_common(f, h)) continue;
    if (f[0] == "stack")
      p.stack_alphabet = f[1];
    else if (f[0] == "bottom")
      p.bottom = f[1][0];
    else if (f[0] == "rule")
      rules.push_back(f);
    else
      expect(false, "unknown dpda line: " + f[0]);
  }
  p.num_states = h.num_states;
  p.alphabet = h.alphabet;
  p.initial = h.initial.empty() ? 0 : h.initial[0];
  p.accepting = h.accepting;
  for (const auto& r : rules) {
    expect(r.size() == 6, "dpda rule arity");
    if (r[2] == "@")
      p.add_eps_rule(std::stoi(r[1]), r[3][0], std::stoi(r[4]),
                     push_parse(r[5]));
    else
      p.add_rule(std::stoi(r[1]), r[2], r[3][0], std::stoi(r[4]),
                 push_parse(r[5]));
  }
  return p;
}

npda parse_npda(const std::string& text) {
  line_reader in(text);
  std::vector<std::string> f;
  expect(in.next(f) && f[0] == "npda", "expected npda header");
  npda p;
  header h;
  std::vector<std::vector<std::string>> rules;
  while (in.next(f)) {
    if (f[0] == "end") break;
    if (read_common(f, h)) continue;
    if (f[0] == "stack")
      p.stack_alphabet = f[1];
    else if (f[0] == "bottom")
      p.bottom = f[1][0];
    else if (f[0] == "rule")
      rules.push_back(f);
    else
      expect(false, "unknown npda line: " + f[0]);
  }
  p.num_states = h.num_states;
  p.alphabet = h.alphabet;
  p.initial = h.initial.empty() ? 0 : h.initial[0];
  p.accepting = h.accepting;
  for (const auto& r : rules) {
    expect(r.size() == 6, "npda rule arity");
    if (r[2] == "@")
      p.add_eps_rule(std::stoi(r[1]), r[3][0], std::stoi(r[4]),
                     push_parse(r[5]));
    else
      p.add_rule(std::stoi(r[1]), r[2], r[3][0], std::stoi(r[4]),
                 push_parse(r[5]));
  }
  return p;
}

transducer parse_transducer(const std::string& text) {
  line_reader in(text);
  std::vector<std::string> f;
  expect(in.next(f) && f[0] == "transducer", "expected transducer header");
  transducer t;
  header h;
  std::vector<std::vector<std::string>> rules, finals;
  while (in.next(f)) {
    if (f[0] == "end") break;
    if (read_common(f, h)) continue;
    if (f[0] == "output-alphabet")
      t.output_alphabet.assign(f.begin() + 1, f.end());
    else if (f[0] == "rule")
      rules.push_back(f);
    else if (f[0] == "final")
      finals.push_back(f);
    else
      expect(false, "unknown transducer line: " + f[0]);
  }
  t.num_states = h.num_states;
  t.input_alphabet = h.alphabet;
  t.initial = h.initial.empty() ? 0 : h.initial[0];
  t.accepting = h.accepting;
  for (const auto& r : rules) {
    expect(r.size() >= 4, "transducer rule arity");
    t.add(std::stoi(r[1]), r[2], std::stoi(r[3]),
          {r.begin() + 4, r.end()});
  }
  for (const auto& r : finals) {
    expect(r.size() >= 2, "transducer final arity");
    t.final_output[std::stoi(r[1])] = {r.begin() + 2, r.end()};
  }
  return t;
}

}  // namespace duality
