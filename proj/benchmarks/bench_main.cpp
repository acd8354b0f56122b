// Micro-benchmarks for the hot paths used by the verification suites.

#include <benchmark/benchmark.h>

#include "duality/catalog.hpp"
#include "duality/constructions.hpp"
#include "duality/eval.hpp"
#include "duality/semilinear.hpp"

namespace {

using namespace duality;

void bm_successor_window_check(benchmark::State& state) {
  std::string u(10, '1'), v(10, '0');
  for (auto _ : state)
    benchmark::DoNotOptimize(successor_window_check(u, v));
}
BENCHMARK(bm_successor_window_check);

void bm_addition_dpda_run(benchmark::State& state) {
  const dpda machine = addition_dpda();
  gamma_word w = encode({5, 6, 11}, 12);
  std::vector<std::string> tokens;
  for (gamma_symbol s : w) tokens.push_back(gamma_token(s));
  for (auto _ : state) benchmark::DoNotOptimize(dpda_run(machine, tokens));
}
BENCHMARK(bm_addition_dpda_run);

void bm_complement_decomposition(benchmark::State& state) {
  std::string w = "00a01a10a11a00a01";
  for (auto _ : state)
    benchmark::DoNotOptimize(complement_decomposition_member(w));
}
BENCHMARK(bm_complement_decomposition);

void bm_npda_for_A(benchmark::State& state) {
  const npda machine = npda_for_A();
  std::vector<std::string> w;
  for (char c : std::string("00a01a11a11a")) w.push_back(std::string(1, c));
  for (auto _ : state) benchmark::DoNotOptimize(npda_accepts(machine, w));
}
BENCHMARK(bm_npda_for_A);

void bm_eval_formula(benchmark::State& state) {
  formula f = parse_formula("!exists i.(even(i) & Qb(i))");
  word_structure s = word_structure::from_chars("abababab", "ab");
  for (auto _ : state) benchmark::DoNotOptimize(eval(f, s, {}));
}
BENCHMARK(bm_eval_formula);

void bm_semilinear_member(benchmark::State& state) {
  semilinear_set s;
  s.components.emplace_back(std::vector<long>{1, 0, 2},
                            std::vector<std::vector<long>>{{1, 1, 0},
                                                           {0, 2, 1}});
  std::vector<long> t{5, 8, 4};
  for (auto _ : state) benchmark::DoNotOptimize(semilinear_member(s, t));
}
BENCHMARK(bm_semilinear_member);

}  // namespace

BENCHMARK_MAIN();
