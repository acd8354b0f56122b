#pragma once
// Brute-force oracles and the exhaustive equivalence suites, with
// machine-readable reports.  Oracles are written from the definitions and
// share no code with the constructions they validate.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace duality {

struct suite_failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct suite_report {
  std::string suite;
  std::map<std::string, long> params;
  long cases = 0;
  std::vector<suite_failure> failures;  // sorted by input, first 100 kept
  long failures_total = 0;
  bool pass = false;
  long millis = 0;
};

// <u> + 1 = <v> (mod 2^n), by plain modular arithmetic.
bool oracle_successor(const std::string& u, const std::string& v);

// Suites: successor-windows (max_n), addition-dpda (max_len),
// immerman-complement (max_len), npda-A (max_len), neutral-immerman
// (max_len), lindstrom-plus (max_c), semilinear-folin (count, bound, seed),
// sort-diff (arity, bound), prop3-rewrite (bound).  Unknown parameters or
// suite names throw std::invalid_argument.
suite_report run_suite(const std::string& name,
                       const std::map<std::string, long>& params = {});

std::vector<std::string> suite_names();

nlohmann::json report_to_json(const suite_report& r);

// Worker count: DUALITY_THREADS when set (>= 1), else hardware concurrency.
int worker_count();

}  // namespace duality
