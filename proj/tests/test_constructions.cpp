#include <doctest.h>

#include <fstream>
#include <sstream>

#include "duality/constructions.hpp"
#include "duality/eval.hpp"
#include "duality/verify.hpp"

using namespace duality;

namespace {

std::vector<std::string> chars(const std::string& w) {
  std::vector<std::string> out;
  for (char c : w) out.push_back(std::string(1, c));
  return out;
}

// output alphabet for the tuple transformation: (0,V_i) in mask order for the
// nonempty subsets, with the default letter (0,{}) last
std::vector<std::string> transformation_alphabet(int n) {
  std::vector<std::string> out = gamma_alphabet(n);
  out.erase(out.begin());
  out.push_back(gamma_token(0));
  return out;
}

}  // namespace

TEST_CASE("int_of") {
  CHECK(int_of("0") == 0);
  CHECK(int_of("1") == 1);
  CHECK(int_of("110") == 6);
  CHECK(int_of("0001") == 1);
  CHECK_THROWS_AS(int_of(""), std::invalid_argument);
  CHECK_THROWS_AS(int_of("012"), std::invalid_argument);
}

TEST_CASE("forbidden windows match the frozen golden set") {
  const std::vector<std::string> expected = {"0010", "0011", "0100", "0111",
                                             "1001", "1000", "1110", "1101"};
  CHECK(forbidden_windows() == expected);

  std::ifstream in(std::string(GOLDEN_DIR) + "/forbidden_windows.txt");
  REQUIRE(in.good());
  std::ostringstream text;
  text << in.rdbuf();
  std::string serialized;
  for (const auto& w : forbidden_windows()) serialized += w + "\n";
  CHECK(serialized == text.str());
}

TEST_CASE("successor_window_check examples") {
  CHECK(successor_window_check("11", "00"));  // 3 + 1 = 0 mod 4
  CHECK(successor_window_check("01", "10"));
  CHECK_FALSE(successor_window_check("00", "11"));
  CHECK(successor_window_check("0", "1"));
  CHECK(successor_window_check("1", "0"));
  CHECK_THROWS_AS(successor_window_check("00", "10"), std::invalid_argument);
  CHECK_THROWS_AS(successor_window_check("0", "10"), std::invalid_argument);
  CHECK_THROWS_AS(successor_window_check("", ""), std::invalid_argument);
}

TEST_CASE("successor_window_check agrees with the arithmetic oracle") {
  for (int n = 1; n <= 6; ++n)
    for (long a = 0; a < (1L << n); ++a)
      for (long b = 0; b < (1L << n); ++b) {
        std::string u, v;
        for (int i = n - 1; i >= 0; --i) {
          u += (a >> i & 1) ? '1' : '0';
          v += (b >> i & 1) ? '1' : '0';
        }
        if (u.back() == v.back()) continue;
        CHECK(successor_window_check(u, v) == oracle_successor(u, v));
      }
}

TEST_CASE("immerman_member") {
  CHECK(immerman_member("0a1"));
  CHECK(immerman_member("00a01a10a11"));
  CHECK(immerman_member("000a001a010a011a100a101a110a111"));
  CHECK_FALSE(immerman_member("a"));
  CHECK_FALSE(immerman_member(""));
  CHECK_FALSE(immerman_member("00a01a10"));
  CHECK_FALSE(immerman_member("00a01a11a10"));
  CHECK_FALSE(immerman_member("00a01a10a11a"));
}

TEST_CASE("in_A golden words") {
  CHECK(in_A("00a01a11a11a"));
  CHECK_FALSE(in_A("a"));
  CHECK_FALSE(in_A("0a1a0a1"));
  CHECK_FALSE(in_A("01a10a11a00"));
  CHECK_FALSE(in_A("00a01a10a11a00a01"));
  CHECK_FALSE(in_A("00a01001a10a11"));
  CHECK(in_A("0a0"));     // 0 + 1 != 0 mod 2
  CHECK_FALSE(in_A("0a1"));
  CHECK(in_A("11a01"));   // 3 + 1 = 0 != 1 mod 4
}

TEST_CASE("npda_for_A agrees with in_A on the golden words") {
  npda p = npda_for_A();
  CHECK(npda_accepts(p, chars("00a01a11a11a")));
  CHECK_FALSE(npda_accepts(p, chars("01a10a11a00")));
  CHECK_FALSE(npda_accepts(p, chars("00a01001a10a11")));
  CHECK_FALSE(npda_accepts(p, chars("a")));
  CHECK(npda_accepts(p, chars("0a0")));
}

TEST_CASE("complement decomposition golden words") {
  CHECK(complement_decomposition_member("a"));
  CHECK_FALSE(complement_decomposition_member("00a01a10a11"));
  CHECK(complement_decomposition_member("00a01001a10a11"));
  CHECK(complement_decomposition_member("00a01a11a11a"));
  CHECK(complement_decomposition_member("0a1a0a1"));  // a0a segment
  CHECK(complement_decomposition_member("01a10a11a00"));
  CHECK(complement_decomposition_member("00a01a10a11a00a01"));
  CHECK_FALSE(complement_decomposition_member("0a1"));
}

TEST_CASE("in_A implies decomposition membership") {
  // every word over {0,1,a} of length <= 9
  const std::string sigma = "01a";
  std::string w;
  auto rec = [&](auto&& self) -> void {
    if (in_A(w)) CHECK(complement_decomposition_member(w));
    if (w.size() == 9) return;
    for (char c : sigma) {
      w += c;
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

TEST_CASE("unequal_adjacent_runs_nfa cross-check") {
  nfa a = unequal_adjacent_runs_nfa(3);
  CHECK(nfa_accepts(a, "00a0"));
  CHECK(nfa_accepts(a, "0a1a011a0"));  // 1 vs 3 in the middle
  CHECK_FALSE(nfa_accepts(a, "0a1a0a1"));  // all runs have length 1
  CHECK_FALSE(nfa_accepts(a, "00a01"));
  CHECK_FALSE(nfa_accepts(a, "0a1"));
}

TEST_CASE("modified_immerman_member") {
  CHECK(modified_immerman_member("000a100a010a110a100a101a110a111"));
  CHECK(modified_immerman_member("0a1"));
  CHECK(modified_immerman_member("00a10a10a11"));
  CHECK_FALSE(modified_immerman_member("00a01a10a11"));
  CHECK_FALSE(modified_immerman_member(""));
}

TEST_CASE("wotschke_member") {
  CHECK(wotschke_member(""));
  CHECK(wotschke_member("ab"));
  CHECK(wotschke_member("aabaab"));
  CHECK_FALSE(wotschke_member("aab"));
  CHECK_FALSE(wotschke_member("abab"));
  CHECK_FALSE(wotschke_member("aabaaba"));
}

TEST_CASE("build_tuple_transformation") {
  std::vector<formula> phi1 = build_tuple_transformation(1);
  REQUIRE(phi1.size() == 1);

  language_ref any;
  any.alphabet = transformation_alphabet(1);
  any.member = [](const std::vector<std::string>&) { return true; };
  CHECK(lindstrom_transform(any, phi1, word_structure::blank(3),
                            {{"x1", 2}}, "y") ==
        std::vector<std::string>{".", "x1", "."});

  std::vector<formula> phi2 = build_tuple_transformation(2);
  REQUIRE(phi2.size() == 3);
  language_ref any2 = any;
  any2.alphabet = transformation_alphabet(2);
  CHECK(lindstrom_transform(any2, phi2, word_structure::blank(1),
                            {{"x1", 1}, {"x2", 1}}, "y") ==
        std::vector<std::string>{"x1+x2"});
  CHECK(lindstrom_transform(any2, phi2, word_structure::blank(2),
                            {{"x1", 2}, {"x2", 1}}, "y") ==
        std::vector<std::string>{"x2", "x1"});
}

TEST_CASE("transformation output always encodes the parameter tuple") {
  language_ref any2;
  any2.alphabet = transformation_alphabet(2);
  any2.member = [](const std::vector<std::string>&) { return true; };
  std::vector<formula> phi2 = build_tuple_transformation(2);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int l = std::max(a, b); l <= 5; ++l) {
        auto out = lindstrom_transform(any2, phi2, word_structure::blank(l),
                                       {{"x1", a}, {"x2", b}}, "y");
        gamma_word g;
        for (const auto& tok : out) g.push_back(parse_gamma_token(tok, 2));
        CHECK(g == encode({a, b}, l));
      }
}
