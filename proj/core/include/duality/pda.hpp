#pragma once
// Deterministic and nondeterministic pushdown automata, final-state
// acceptance.  Stack strings are written top-first: a rule that replaces the
// matched top T by "XT" pushes X above T; "" pops the top.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace duality {

struct dpda {
  int num_states = 0;
  std::vector<std::string> alphabet;
  std::string stack_alphabet;  // characters; must contain bottom
  char bottom = 'Z';
  // key: (state, symbol index or -1 for epsilon, stack top)
  struct action {
    int state;
    std::string push;  // replacement for the matched top, top-first
  };
  std::map<std::tuple<int, int, char>, action> delta;
  int initial = 0;
  std::set<int> accepting;

  void add_rule(int state, const std::string& sym, char top, int next,
                const std::string& push);
  void add_eps_rule(int state, char top, int next, const std::string& push);
};

// Throws std::invalid_argument if determinism is violated (for some
// (state, top) both an epsilon rule and a symbol rule exist).
void validate_dpda(const dpda& p);

// Runs p on w.  An epsilon chain longer than |stack|+|Q| between input
// symbols is treated as a defect: reject, with the diagnostic appended to
// *diag when given.
bool dpda_run(const dpda& p, const std::vector<std::string>& w,
              std::string* diag = nullptr);

struct npda {
  int num_states = 0;
  std::vector<std::string> alphabet;
  std::string stack_alphabet;
  char bottom = 'Z';
  struct rule {
    int state;
    int sym;  // symbol index or -1 for epsilon
    char top;
    int next;
    std::string push;  // length <= 2, top-first
  };
  std::vector<rule> rules;
  int initial = 0;
  std::set<int> accepting;

  void add_rule(int state, const std::string& sym, char top, int next,
                const std::string& push);
  void add_eps_rule(int state, char top, int next, const std::string& push);
};

// BFS over configurations (state, position, stack); throws std::runtime_error
// if a live branch exceeds stack height |w| + |Q| + 2.
bool npda_accepts(const npda& p, const std::vector<std::string>& w);

}  // namespace duality
