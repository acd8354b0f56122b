// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "duality/constructions.hpp"
#include "duality/semilinear.hpp"
#include "duality/verify.hpp"

using namespace duality;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool suite_passes(const std::string& name,
                  const std::map<std::string, long>& params) {
  suite_report r = run_suite(name, params);
  if (!r.pass)
    std::fprintf(stderr, "  %s: %ld failures over %ld cases\n",
                 name.c_str(), r.failures_total, r.cases);
  return r.pass;
}

}  // namespace

int main() {
  report(1, "successor windows vs arithmetic, n = 1..10",
         suite_passes("successor-windows", {{"max_n", 10}}));

  const std::vector<std::string> f_golden = {"0010", "0011", "0100", "0111",
                                             "1001", "1000", "1110", "1101"};
  report(2, "forbidden window set is byte-exact",
         forbidden_windows() == f_golden);

  report(3, "addition DPDA vs a+b=c, structures up to length 12",
         suite_passes("addition-dpda", {{"max_len", 12}}));

  bool goldens =
      in_A("00a01a11a11a") && !in_A("a") && !in_A("0a1a0a1") &&
      !in_A("01a10a11a00") && !in_A("00a01a10a11a00a01") &&
      !in_A("00a01001a10a11") && complement_decomposition_member("a") &&
      complement_decomposition_member("0a1a0a1") &&
      complement_decomposition_member("01a10a11a00") &&
      complement_decomposition_member("00a01a10a11a00a01") &&
      complement_decomposition_member("00a01001a10a11");
  report(4, "complement decomposition vs Immerman oracle up to length 14",
         goldens && suite_passes("immerman-complement", {{"max_len", 14}}));

  report(5, "NPDA for A vs definitional membership up to length 12",
         suite_passes("npda-A", {{"max_len", 12}}));

  report(6, "neutral-letter chain over {0,1,a,e} up to length 12",
         suite_passes("neutral-immerman", {{"max_len", 12}}));

  report(7, "displayed Immerman words are members",
         immerman_member("00a01a10a11") &&
             immerman_member("000a001a010a011a100a101a110a111"));

  report(8, "Lindstrom quantifier over addition language vs plus, c <= 8",
         suite_passes("lindstrom-plus", {{"max_c", 8}}));

  report(9, "stratification goldens",
         !is_stratified({{1, 1, 1}}) &&
             is_stratified({{1, 1, 0, 0}, {0, 0, 1, 1}}) &&
             !is_stratified({{1, 0, 1, 0}, {0, 1, 0, 1}}));

  report(10, "prefix-sum inverts diff, arity <= 4, bound <= 10",
         suite_passes("sort-diff", {{"arity", 4}, {"bound", 10}}));

  report(11, "emitted plus-formulas match semilinear membership",
         suite_passes("semilinear-folin",
                      {{"count", 20}, {"bound", 12}, {"seed", 7041}}));

  report(12, "letter-to-equality rewriting preserves truth and constancy",
         suite_passes("prop3-rewrite", {{"bound", 6}}));

  auto normalized = [](const suite_report& r) {
    nlohmann::json j = report_to_json(r);
    j.erase("millis");
    return j.dump();
  };
  report(13, "verification reports are byte-identical across runs",
         normalized(run_suite("successor-windows", {{"max_n", 8}})) ==
             normalized(run_suite("successor-windows", {{"max_n", 8}})));

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
