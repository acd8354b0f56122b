#include <doctest.h>

#include <nlohmann/json.hpp>

#include "duality/verify.hpp"

using namespace duality;

TEST_CASE("oracle_successor") {
  CHECK(oracle_successor("11", "00"));
  CHECK(oracle_successor("00", "01"));
  CHECK_FALSE(oracle_successor("00", "10"));
  CHECK(oracle_successor("111", "000"));
  CHECK_THROWS_AS(oracle_successor("1", "00"), std::invalid_argument);
}

TEST_CASE("suite names and dispatch") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("successor-windows", {{"bogus", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_suite("successor-windows", {{"max_n", 0}}),
                  std::invalid_argument);
}

TEST_CASE("small suite runs pass") {
  for (const auto& [name, params] :
       std::vector<std::pair<std::string, std::map<std::string, long>>>{
           {"successor-windows", {{"max_n", 5}}},
           {"addition-dpda", {{"max_len", 6}}},
           {"immerman-complement", {{"max_len", 8}}},
           {"npda-A", {{"max_len", 7}}},
           {"neutral-immerman", {{"max_len", 7}}},
           {"lindstrom-plus", {{"max_c", 4}}},
           {"semilinear-folin", {{"count", 4}, {"bound", 6}, {"seed", 3}}},
           {"sort-diff", {{"arity", 3}, {"bound", 5}}},
           {"prop3-rewrite", {{"bound", 4}}}}) {
    suite_report r = run_suite(name, params);
    INFO(name);
    CHECK(r.pass);
    CHECK(r.failures.empty());
    CHECK(r.failures_total == 0);
    CHECK(r.cases > 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("reports are deterministic modulo wall time") {
  auto normalized = [](const suite_report& r) {
    nlohmann::json j = report_to_json(r);
    j.erase("millis");
    return j.dump();
  };
  std::map<std::string, long> params{{"max_n", 6}};
  CHECK(normalized(run_suite("successor-windows", params)) ==
        normalized(run_suite("successor-windows", params)));
  std::map<std::string, long> folin{{"count", 6}, {"bound", 7}, {"seed", 5}};
  CHECK(normalized(run_suite("semilinear-folin", folin)) ==
        normalized(run_suite("semilinear-folin", folin)));
}

TEST_CASE("report json schema") {
  suite_report r = run_suite("sort-diff", {{"arity", 2}, {"bound", 4}});
  nlohmann::json j = report_to_json(r);
  CHECK(j.at("suite") == "sort-diff");
  CHECK(j.at("params").at("arity") == 2);
  CHECK(j.at("params").at("bound") == 4);
  CHECK(j.at("cases").get<long>() == r.cases);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("failures_total") == 0);
  CHECK(j.at("pass") == true);
  CHECK(j.contains("millis"));
}

TEST_CASE("pass flag reflects failures") {
  suite_report r;
  r.suite = "synthetic";
  r.failures.push_back({"w", "true", "false"});
  r.failures_total = 1;
  r.pass = r.failures.empty();
  nlohmann::json j = report_to_json(r);
  CHECK(j.at("pass") == false);
  CHECK(j.at("failures").size() == 1);
  CHECK(j.at("failures")[0].at("input") == "w");
}

TEST_CASE("worker_count is positive") { CHECK(worker_count() >= 1); }
