#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "duality/gamma.hpp"
#include "duality/nfa.hpp"

using namespace duality;

namespace {

word parse_word(const std::string& text) {
  std::istringstream in(text);
  word w;
  std::string tok;
  while (in >> tok) w.push_back(tok);
  return w;
}

}  // namespace

TEST_CASE("gamma token round-trip") {
  CHECK(gamma_token(0) == ".");
  CHECK(gamma_token(1) == "x1");
  CHECK(gamma_token(3) == "x1+x2");
  CHECK(gamma_token(5) == "x1+x3");
  CHECK(parse_gamma_token("x2+x3", 3) == 6);
  CHECK(parse_gamma_token(".", 1) == 0);
  for (int n = 1; n <= 4; ++n)
    for (gamma_symbol v = 0; v < (1u << n); ++v)
      CHECK(parse_gamma_token(gamma_token(v), n) == v);
  CHECK_THROWS_AS(parse_gamma_token("x3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_gamma_token("x1+x1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_gamma_token("y1", 2), std::invalid_argument);
}

TEST_CASE("is_unary_structure") {
  CHECK(is_unary_structure(parse_gamma_word(". x1 x2", 2), 2));
  CHECK_FALSE(is_unary_structure(parse_gamma_word("x1 x1", 1), 1));
  CHECK_FALSE(is_unary_structure(parse_gamma_word(".", 1), 1));
  CHECK(is_unary_structure(parse_gamma_word("x1+x2", 2), 2));
  CHECK_FALSE(is_unary_structure(parse_gamma_word("x1 x1+x2", 2), 2));
}

TEST_CASE("kernel strips trailing padding and is idempotent") {
  CHECK(kernel(parse_gamma_word(". x1 . .", 1)) == parse_gamma_word(". x1", 1));
  CHECK(kernel(parse_gamma_word("x1", 1)) == parse_gamma_word("x1", 1));
  CHECK(kernel(parse_gamma_word(". x1+x2 .", 2)) ==
        parse_gamma_word(". x1+x2", 2));
  // idempotence over all structures up to length 10 (n = 1, 2)
  for (int n = 1; n <= 2; ++n) {
    std::vector<int> t(n, 1);
    auto scan = [&](auto&& self, int i) -> void {
      if (i == n) {
        int cmax = *std::max_element(t.begin(), t.end());
        for (int m = cmax; m <= 10; ++m) {
          gamma_word w = encode(t, m);
          CHECK(kernel(kernel(w)) == kernel(w));
        }
        return;
      }
      for (t[i] = 1; t[i] <= 10; ++t[i]) self(self, i + 1);
      t[i] = 1;
    };
    scan(scan, 0);
  }
}

TEST_CASE("encode and tuple_of") {
  CHECK(format_gamma_word(encode({2, 3, 5}, 5)) == ". x1 x2 . x3");
  CHECK(tuple_of(parse_gamma_word(". x1 x2 . x3", 3), 3) ==
        std::vector<int>{2, 3, 5});
  CHECK(format_gamma_word(encode({1, 1}, 1)) == "x1+x2");
  CHECK_THROWS_AS(encode({3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(encode({0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(tuple_of(parse_gamma_word(". .", 1), 1),
                  std::invalid_argument);
  // tuple_of . encode = id for all tuples with max <= 8, n <= 2, all valid m
  for (int a = 1; a <= 8; ++a) {
    for (int m = a; m <= 8; ++m)
      CHECK(tuple_of(encode({a}, m), 1) == std::vector<int>{a});
    for (int b = 1; b <= 8; ++b)
      for (int m = std::max(a, b); m <= 8; ++m)
        CHECK(tuple_of(encode({a, b}, m), 2) == std::vector<int>{a, b});
  }
}

TEST_CASE("structures with equal tuples differ only by padding") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (int m1 = std::max(a, b); m1 <= 6; ++m1)
        for (int m2 = m1; m2 <= 6; ++m2) {
          gamma_word w1 = encode({a, b}, m1), w2 = encode({a, b}, m2);
          gamma_word padded = w1;
          padded.resize(m2, 0);
          CHECK(padded == w2);
        }
}

TEST_CASE("relation_of_language") {
  auto always = [](const gamma_word&) { return true; };
  num_relation r = relation_of_language(always, 1, 3);
  CHECK(r.tuples == std::set<std::vector<int>>{{1}, {2}, {3}});

  auto ends_x1 = [](const gamma_word& w) {
    return !w.empty() && w.back() == 1;
  };
  num_relation r2 = relation_of_language(ends_x1, 1, 2);
  CHECK(r2.tuples == std::set<std::vector<int>>{{1}, {2}});
}

TEST_CASE("is_kernel_closed") {
  CHECK(is_kernel_closed({parse_gamma_word("x1", 1),
                          parse_gamma_word("x1 .", 1)},
                         1));
  CHECK_FALSE(is_kernel_closed({parse_gamma_word("x1 .", 1)}, 1));
  CHECK(is_kernel_closed({}, 1));
  CHECK_THROWS_AS(is_kernel_closed({parse_gamma_word("x1 x1", 1)}, 1),
                  std::invalid_argument);
}

TEST_CASE("neutralize_member") {
  auto is_ab = [](const std::string& w) { return w == "ab"; };
  auto closed = neutralize_member(is_ab, 'e');
  CHECK(closed("aeb"));
  CHECK_FALSE(closed("ee"));
  CHECK(closed("ab"));
  // restriction to e-free words equals the original member
  for (const std::string& w : {"", "a", "b", "ab", "ba", "aab"})
    CHECK(closed(w) == is_ab(w));
}

TEST_CASE("neutral_union_nfa") {
  nfa single = neutral_union_nfa(1, {{1}});
  CHECK(nfa_accepts(single, parse_word(". x1 .")));
  CHECK_FALSE(nfa_accepts(single, parse_word("x1 x1")));

  nfa ordered = neutral_union_nfa(2, {{1, 2}});
  CHECK(nfa_accepts(ordered, parse_word(". x1 . x2")));
  CHECK_FALSE(nfa_accepts(ordered, parse_word("x2 x1")));

  nfa both = neutral_union_nfa(2, {{1, 2}, {2, 1}});
  CHECK(nfa_accepts(both, parse_word("x1 x2")));
  CHECK(nfa_accepts(both, parse_word("x2 x1")));

  CHECK_THROWS_AS(neutral_union_nfa(2, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(neutral_union_nfa(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("every structure lies in the padded product of its order") {
  // n = 2, length <= 8: the structure must be accepted by the union over
  // both variable orders (x1 and x2 may share a position, mask 3).
  nfa orders = neutral_union_nfa(2, {{1, 2}, {2, 1}, {3}});
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      for (int m = std::max(a, b); m <= 8; ++m) {
        gamma_word w = encode({a, b}, m);
        std::vector<std::string> tokens;
        for (gamma_symbol s : w) tokens.push_back(gamma_token(s));
        CHECK(nfa_accepts(orders, tokens));
      }
}
