#pragma once
// Linear/semilinear set algebra, Ginsburg stratification, the sort/diff
// transforms, exponent relations E(L), and FO[+] formula emission.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "duality/formula.hpp"
#include "duality/gamma.hpp"

#include <nlohmann/json_fwd.hpp>

namespace duality {

struct linear_set {
  std::vector<long> base;
  std::vector<std::vector<long>> periods;

  // Drops all-zero periods and validates uniform arity / nonnegativity.
  linear_set(std::vector<long> base, std::vector<std::vector<long>> periods);
  linear_set() = default;
};

struct semilinear_set {
  std::vector<linear_set> components;

  int arity() const;
};

semilinear_set semilinear_from_json(const nlohmann::json& j);
nlohmann::json semilinear_to_json(const semilinear_set& s);

// Ginsburg: every vector has <= 2 nonzero coordinates, and no i<j<k<l with
// x_i x'_j x_k x'_l != 0 over ordered pairs (x, x'), including x = x'.
bool is_stratified(const std::vector<std::vector<long>>& periods);
bool is_stratified(const semilinear_set& s);

bool semilinear_member(const semilinear_set& s, const std::vector<long>& t);

// sort: distinct values ascending.  Throws if the results mix arities; use
// order_type_partition to split first.
num_relation sort_transform(const num_relation& r);

// diff: prefix-sum inverse; every tuple must be strictly ascending.
// The result may contain the same arity with entries >= 1.
num_relation diff_transform(const num_relation& r);

// Partition of r by the equality/ordering pattern of tuple components.
// Keyed by the dense rank vector of the tuple (e.g. (2,1) -> [1,0]).
std::map<std::vector<int>, num_relation> order_type_partition(
    const num_relation& r);

struct exponent_relation {
  std::vector<std::string> words;
  int cap = 0;
  std::set<std::vector<long>> tuples;
};

exponent_relation compute_exponent_relation(
    const std::function<bool(const std::string&)>& member,
    const std::vector<std::string>& words, int cap);

// Lemma 6: a formula over `plus` whose relation_of equals bounded
// membership in s.  Free variables are e1..en.
formula emit_folin(const semilinear_set& s);

// Theorem 5 as a checker: partition must union to r (else throws); each part
// is sorted+diffed and compared against its semilinear witness up to the
// relation's bound, and every witness must be stratified.
bool check_cflN_criterion(const num_relation& r,
                          const std::vector<num_relation>& partition,
                          const std::vector<semilinear_set>& witnesses);

}  // namespace duality
