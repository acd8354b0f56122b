#include <doctest.h>

#include "duality/gamma.hpp"
#include "duality/transducer.hpp"

using namespace duality;

namespace {

std::vector<std::string> block_word(const std::vector<int>& counts) {
  std::vector<std::string> w;
  for (int j = 0; j < (int)counts.size(); ++j)
    for (int k = 0; k < counts[j]; ++k)
      w.push_back("a" + std::to_string(j + 1));
  return w;
}

}  // namespace

TEST_CASE("transduce basics") {
  // doubles every a and rejects words containing b
  transducer t;
  t.num_states = 1;
  t.input_alphabet = {"a", "b"};
  t.output_alphabet = {"a"};
  t.add(0, "a", 0, {"a", "a"});
  t.accepting = {0};
  CHECK(transduce(t, {"a", "a"}) ==
        std::vector<std::string>{"a", "a", "a", "a"});
  CHECK(transduce(t, std::vector<std::string>{}) ==
        std::vector<std::string>{});
  CHECK_FALSE(transduce(t, {"a", "b"}).has_value());

  t.final_output[0] = {"a"};
  CHECK(transduce(t, {"a"}) == std::vector<std::string>{"a", "a", "a"});
}

TEST_CASE("psi on worked examples") {
  // block j ends where x_j sits; pads after the last variable become e
  CHECK(apply_psi(2, parse_gamma_word(". x1 . x2 .", 2)) ==
        std::vector<std::string>{"a1", "a1", "a2", "a2", "e"});
  CHECK(apply_psi(1, parse_gamma_word("x1", 1)) ==
        std::vector<std::string>{"a1"});
  CHECK(apply_psi(2, parse_gamma_word("x1 .", 2)) ==
        std::vector<std::string>{"a1", "e"});
  CHECK(apply_psi(2, gamma_word{}) == std::vector<std::string>{});
  // not sorted: x2 before x1
  CHECK_FALSE(apply_psi(2, parse_gamma_word("x2 x1", 2)).has_value());
}

TEST_CASE("chi on worked examples") {
  CHECK(apply_chi(1, {"a1"}) == parse_gamma_word("x1", 1));
  CHECK(apply_chi(2, {"a1", "a1", "a2"}) == parse_gamma_word(". x1 x2", 2));
  CHECK(apply_chi(2, std::vector<std::string>{}) == gamma_word{});
  // out-of-order blocks are not in a1*...am*
  CHECK_FALSE(apply_chi(2, {"a2", "a1"}).has_value());
}

TEST_CASE("psi inverts chi on all of a1*...am*") {
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> counts(m, 0);
    auto scan = [&](auto&& self, int j, int left) -> void {
      if (j == m) {
        std::vector<std::string> w = block_word(counts);
        auto g = apply_chi(m, w);
        REQUIRE(g.has_value());
        auto back = apply_psi(m, *g);
        REQUIRE(back.has_value());
        CHECK(*back == w);
        return;
      }
      for (counts[j] = 0; counts[j] <= left; ++counts[j])
        self(self, j + 1, left - counts[j]);
      counts[j] = 0;
    };
    scan(scan, 0, 8);
  }
}

TEST_CASE("chi output is a sorted unary structure when every block is nonempty") {
  auto g = apply_chi(3, block_word({2, 1, 3}));
  REQUIRE(g.has_value());
  CHECK(is_unary_structure(*g, 3));
  CHECK(tuple_of(*g, 3) == std::vector<int>{2, 3, 6});
}
