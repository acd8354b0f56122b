#include <doctest.h>

#include "duality/constructions.hpp"
#include "duality/gamma.hpp"
#include "duality/nfa.hpp"
#include "duality/pda.hpp"

using namespace duality;

namespace {

nfa a_star_nfa() {
  nfa a;
  a.num_states = 1;
  a.alphabet = {"a", "b"};
  a.epsilon.resize(1);
  a.transitions.resize(1);
  a.add_transition(0, "a", 0);
  a.initial = {0};
  a.accepting = {0};
  return a;
}

nfa a_star_b_nfa() {
  nfa a;
  a.num_states = 2;
  a.alphabet = {"a", "b"};
  a.add_transition(0, "a", 0);
  a.add_transition(0, "b", 1);
  a.initial = {0};
  a.accepting = {1};
  return a;
}

// counts a's mod 2 via an epsilon detour
nfa even_a_nfa() {
  nfa a;
  a.num_states = 3;
  a.alphabet = {"a", "b"};
  a.add_transition(0, "a", 1);
  a.add_transition(1, "a", 0);
  a.add_transition(0, "b", 0);
  a.add_transition(1, "b", 1);
  a.add_epsilon(0, 2);
  a.initial = {0};
  a.accepting = {2};
  return a;
}

}  // namespace

TEST_CASE("nfa_accepts") {
  nfa a = a_star_nfa();
  CHECK(nfa_accepts(a, ""));
  CHECK(nfa_accepts(a, "aaa"));
  CHECK_FALSE(nfa_accepts(a, "ab"));
  nfa e = even_a_nfa();
  CHECK(nfa_accepts(e, "babab"));
  CHECK_FALSE(nfa_accepts(e, "ab"));
}

TEST_CASE("product, complement, enumerate") {
  nfa a = a_star_nfa(), ab = a_star_b_nfa();
  nfa both = nfa_product(a, ab, nfa_op::intersect);
  // a* and a*b are disjoint
  for (const std::string& w : {"", "a", "b", "ab", "aab", "aa"})
    CHECK_FALSE(nfa_accepts(both, w));

  nfa either = nfa_product(a, ab, nfa_op::unite);
  CHECK(nfa_accepts(either, "aa"));
  CHECK(nfa_accepts(either, "aab"));
  CHECK_FALSE(nfa_accepts(either, "ba"));

  auto words = enumerate_words(ab, 2);
  REQUIRE(words.size() == 2);
  CHECK(chars_of_word(words[0]) == "b");
  CHECK(chars_of_word(words[1]) == "ab");
}

TEST_CASE("determinize and complement partition the words") {
  nfa e = even_a_nfa();
  nfa d = determinize(e);
  CHECK(d.deterministic);
  nfa c = nfa_complement(d);
  for (int len = 0; len <= 8; ++len)
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (mask >> i & 1) ? 'a' : 'b';
      bool in = nfa_accepts(e, w);
      CHECK(nfa_accepts(d, w) == in);
      CHECK(nfa_accepts(c, w) == !in);
    }
  CHECK_THROWS_AS(nfa_complement(e), std::invalid_argument);
}

TEST_CASE("nfa_for_word_set") {
  nfa a = nfa_for_word_set({"a", "b"}, {word_of_chars("ab"),
                                        word_of_chars("ba")});
  CHECK(nfa_accepts(a, "ab"));
  CHECK(nfa_accepts(a, "ba"));
  CHECK_FALSE(nfa_accepts(a, "aa"));
  CHECK_FALSE(nfa_accepts(a, "aba"));
}

TEST_CASE("dpda_run on the addition machine") {
  dpda p = addition_dpda();
  validate_dpda(p);
  // 2 + 3 = 5 as a unary structure over Gamma_3
  CHECK(dpda_run(p, {".", "x1", "x2", ".", "x3"}));
  CHECK(dpda_run(p, {"x1+x2", "x3"}));            // 1 + 1 = 2
  CHECK(dpda_run(p, {"x1", "x2", "x3"}));         // 1 + 2 = 3
  CHECK_FALSE(dpda_run(p, {"x1", "x1", "x1"}));   // not even a structure
  CHECK(dpda_run(p, {"x2", "x1", "x3"}));         // 2 + 1 = 3, other order
  CHECK_FALSE(dpda_run(p, {"x1", "x3", "x2"}));   // 1 + 3 != 2
}

TEST_CASE("dpda and npda agree on deterministic machines") {
  dpda d = addition_dpda();
  // same machine expressed as an npda (single-push rules only)
  npda n;
  n.num_states = d.num_states;
  n.alphabet = d.alphabet;
  n.stack_alphabet = d.stack_alphabet;
  n.bottom = d.bottom;
  n.initial = d.initial;
  n.accepting = d.accepting;
  for (const auto& [key, act] : d.delta) {
    auto [state, sym, top] = key;
    if (sym < 0)
      n.add_eps_rule(state, top, act.state, act.push);
    else
      n.add_rule(state, d.alphabet[sym], top, act.state, act.push);
  }
  // exhaustive to length 3 over the full Gamma_3 alphabet, then spot checks
  auto tokens = gamma_alphabet(3);
  word w;
  auto rec = [&](auto&& self) -> void {
    CHECK(dpda_run(d, w) == npda_accepts(n, w));
    if (w.size() == 3) return;
    for (const auto& t : tokens) {
      w.push_back(t);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  for (const word& v : {word{".", "x1", "x2", ".", "x3", ".", ".", "."},
                        word{"x1", "x2", "x3", ".", ".", ".", ".", "."},
                        word{".", ".", "x1+x2", ".", ".", ".", ".", "x3"}})
    CHECK(dpda_run(d, v) == npda_accepts(n, v));
}

TEST_CASE("npda for a^n b^n") {
  // final-state acceptance: enter state 2 only once the stack is drained
  npda p;
  p.num_states = 3;
  p.alphabet = {"a", "b"};
  p.stack_alphabet = "XZ";
  p.add_rule(0, "a", 'Z', 0, "XZ");
  p.add_rule(0, "a", 'X', 0, "XX");
  p.add_rule(0, "b", 'X', 1, "");
  p.add_rule(1, "b", 'X', 1, "");
  p.add_eps_rule(0, 'Z', 2, "Z");
  p.add_eps_rule(1, 'Z', 2, "Z");
  p.initial = 0;
  p.accepting = {2};
  auto chars = [](const std::string& s) {
    word w;
    for (char c : s) w.push_back(std::string(1, c));
    return w;
  };
  CHECK(npda_accepts(p, chars("")));
  CHECK(npda_accepts(p, chars("aabb")));
  CHECK_FALSE(npda_accepts(p, chars("aab")));
  CHECK_FALSE(npda_accepts(p, chars("ba")));
  CHECK_FALSE(npda_accepts(p, chars("aa")));
  CHECK_FALSE(npda_accepts(p, chars("abb")));
}

TEST_CASE("defective machines are diagnosed, not looped on") {
  dpda p;
  p.num_states = 1;
  p.alphabet = {"a"};
  p.stack_alphabet = "Z";
  p.add_eps_rule(0, 'Z', 0, "Z");  // epsilon self-loop
  p.accepting = {0};
  std::string diag;
  CHECK_FALSE(dpda_run(p, {std::string("a")}, &diag));
  CHECK(!diag.empty());

  npda q;
  q.num_states = 2;
  q.alphabet = {"a"};
  q.stack_alphabet = "XZ";
  q.add_eps_rule(0, 'Z', 0, "XZ");
  q.add_eps_rule(0, 'X', 0, "XX");  // unbounded epsilon growth
  q.accepting = {1};                // unreachable, so the search cannot stop
  CHECK_THROWS_AS(npda_accepts(q, {}), std::runtime_error);
}

TEST_CASE("dpda determinism validation") {
  dpda p;
  p.num_states = 1;
  p.alphabet = {"a"};
  p.stack_alphabet = "Z";
  p.add_rule(0, "a", 'Z', 0, "Z");
  p.add_eps_rule(0, 'Z', 0, "Z");
  CHECK_THROWS_AS(validate_dpda(p), std::invalid_argument);
}
