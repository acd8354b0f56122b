#include "duality/pda.hpp"

#include <algorithm>
#include <deque>
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

void dpda::add_rule(int state, const std::string& sym, char top, int next,
                    const std::string& push) {
  delta[{state, index_of(alphabet, sym), top}] = {next, push};
}

void dpda::add_eps_rule(int state, char top, int next,
                        const std::string& push) {
  delta[{state, -1, top}] = {next, push};
}

void validate_dpda(const dpda& p) {
  for (const auto& [key, act] : p.delta) {
    auto [state, sym, top] = key;
    (void)act;
    if (sym == -1)
      for (size_t s = 0; s < p.alphabet.size(); ++s)
        if (p.delta.count({state, (int)s, top}))
          throw std::invalid_argument(
              "dpda: state has both epsilon and symbol rules on one top");
  }
}

bool dpda_run(const dpda& p, const std::vector<std::string>& w,
              std::string* diag) {
  int state = p.initial;
  std::string stack(1, p.bottom);  // back() is the top
  auto apply = [&](const dpda::action& act) {
    stack.pop_back();
    for (auto it = act.push.rbegin(); it != act.push.rend(); ++it)
      stack.push_back(*it);
    state = act.state;
  };
  auto eps_closure = [&]() -> bool {
    size_t steps = 0;
    while (!stack.empty()) {
      auto it = p.delta.find({state, -1, stack.back()});
      if (it == p.delta.end()) return true;
      if (++steps > stack.size() + (size_t)p.num_states) {
        if (diag) *diag += "epsilon loop detected; rejecting\n";
        return false;
      }
      apply(it->second);
    }
    return true;
  };
  for (const auto& sym : w) {
    if (!eps_closure()) return false;
    if (stack.empty()) return false;
    auto it = p.delta.find({state, index_of(p.alphabet, sym), stack.back()});
    if (it == p.delta.end()) return false;
    apply(it->second);
  }
  if (!eps_closure()) return false;
  return p.accepting.count(state) > 0;
}

void npda::add_rule(int state, const std::string& sym, char top, int next,
                    const std::string& push) {
  if (push.size() > 2)
    throw std::invalid_argument("npda push strings are limited to length 2");
  rules.push_back({state, index_of(alphabet, sym), top, next, push});
}

void npda::add_eps_rule(int state, char top, int next,
                        const std::string& push) {
  if (push.size() > 2)
    throw std::invalid_argument("npda push strings are limited to length 2");
  rules.push_back({state, -1, top, next, push});
}

bool npda_accepts(const npda& p, const std::vector<std::string>& w) {
  std::vector<int> syms;
  for (const auto& s : w) syms.push_back(index_of(p.alphabet, s));
  const size_t cap = w.size() + (size_t)p.num_states + 2;

  // Group rules by (state, sym presence) for quick scanning.
  struct config {
    int state;
    size_t pos;
    std::string stack;  // back() is the top
    bool operator<(const config& o) const {
      return std::tie(state, pos, stack) < std::tie(o.state, o.pos, o.stack);
    }
  };
  std::set<config> seen;
  std::deque<config> queue;
  auto enqueue = [&](config c) {
    if (c.stack.size() > cap)
      throw std::runtime_error("npda stack height cap exceeded");
    if (seen.insert(c).second) queue.push_back(std::move(c));
  };
  enqueue({p.initial, 0, std::string(1, p.bottom)});
  while (!queue.empty()) {
    config c = queue.front();
    queue.pop_front();
    if (c.pos == w.size() && p.accepting.count(c.state)) return true;
    if (c.stack.empty()) continue;
    char top = c.stack.back();
    for (const auto& r : p.rules) {
      if (r.state != c.state || r.top != top) continue;
      if (r.sym == -1) {
        config n = c;
        n.stack.pop_back();
        for (auto it = r.push.rbegin(); it != r.push.rend(); ++it)
          n.stack.push_back(*it);
        n.state = r.next;
        enqueue(std::move(n));
      } else if (c.pos < w.size() && syms[c.pos] == r.sym) {
        config n = c;
        n.stack.pop_back();
        for (auto it = r.push.rbegin(); it != r.push.rend(); ++it)
          n.stack.push_back(*it);
        n.state = r.next;
        n.pos = c.pos + 1;
        enqueue(std::move(n));
      }
    }
  }
  return false;
}

}  // namespace duality
