#include "duality/semilinear.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace duality {

linear_set::linear_set(std::vector<long> base_,
                       std::vector<std::vector<long>> periods_)
    : base(std::move(base_)) {
  for (long v : base)
    if (v < 0) throw std::invalid_argument("linear set entries must be >= 0");
  for (auto& p : periods_) {
    if (p.size() != base.size())
      throw std::invalid_argument("period arity mismatch");
    bool zero = true;
    for (long v : p) {
      if (v < 0)
        throw std::invalid_argument("linear set entries must be >= 0");
      if (v != 0) zero = false;
    }
    if (!zero) periods.push_back(std::move(p));
  }
}

int semilinear_set::arity() const {
  if (components.empty()) return 0;
  for (const auto& c : components)
    if (c.base.size() != components[0].base.size())
      throw std::invalid_argument("semilinear arity must be uniform");
  return (int)components[0].base.size();
}

semilinear_set semilinear_from_json(const nlohmann::json& j) {
  semilinear_set s;
  for (const auto& comp : j.at("components")) {
    std::vector<long> base = comp.at("base").get<std::vector<long>>();
    std::vector<std::vector<long>> periods;
    if (comp.contains("periods"))
      periods = comp.at("periods").get<std::vector<std::vector<long>>>();
    s.components.emplace_back(std::move(base), std::move(periods));
  }
  s.arity();
  return s;
}

nlohmann::json semilinear_to_json(const semilinear_set& s) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : s.components)
    comps.push_back({{"base", c.base}, {"periods", c.periods}});
  return {{"components", comps}};
}

bool is_stratified(const std::vector<std::vector<long>>& periods) {
  for (const auto& p : periods) {
    int nonzero = 0;
    for (long v : p)
      if (v != 0) ++nonzero;
    if (nonzero > 2) return false;
  }
  size_t n = periods.empty() ? 0 : periods[0].size();
  for (const auto& x : periods)
    for (const auto& xp : periods)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          for (size_t k = j + 1; k < n; ++k)
            for (size_t l = k + 1; l < n; ++l)
              if (x[i] != 0 && xp[j] != 0 && x[k] != 0 && xp[l] != 0)
                return false;
  return true;
}

bool is_stratified(const semilinear_set& s) {
  for (const auto& c : s.components)
    if (!is_stratified(c.periods)) return false;
  return true;
}

namespace {

bool member_rec(const linear_set& c, const std::vector<long>& t,
                std::vector<long> rest, size_t j) {
  if (j == c.periods.size()) {
    for (long v : rest)
      if (v != 0) return false;
    return true;
  }
  const auto& p = c.periods[j];
  long bound = -1;  // max usable coefficient, from any nonzero coordinate
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0) {
      long b = rest[i] / p[i];
      bound = bound < 0 ? b : std::min(bound, b);
    }
  for (long k = 0; k <= bound || k == 0; ++k) {
    std::vector<long> next = rest;
    bool ok = true;
    for (size_t i = 0; i < p.size(); ++i) {
      next[i] -= k * p[i];
      if (next[i] < 0) ok = false;
    }
    if (ok && member_rec(c, t, std::move(next), j + 1)) return true;
    if (bound < 0) break;  // zero vector cannot occur; defensive
  }
  return false;
}

}  // namespace

bool semilinear_member(const semilinear_set& s, const std::vector<long>& t) {
  for (const auto& c : s.components) {
    if (c.base.size() != t.size())
      throw std::invalid_argument("membership arity mismatch");
    std::vector<long> rest(t.size());
    bool ok = true;
    for (size_t i = 0; i < t.size(); ++i) {
      rest[i] = t[i] - c.base[i];
      if (rest[i] < 0) ok = false;
    }
    if (ok && member_rec(c, t, std::move(rest), 0)) return true;
  }
  return false;
}

num_relation sort_transform(const num_relation& r) {
  num_relation out;
  out.bound = r.bound;
  out.arity = -1;
  for (const auto& t : r.tuples) {
    std::vector<int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (out.arity == -1)
      out.arity = (int)sorted.size();
    else if (out.arity != (int)sorted.size())
      throw std::invalid_argument(
          "sort_transform: mixed order types produce mixed arities; "
          "partition by order type first");
    out.tuples.insert(std::move(sorted));
  }
  if (out.arity == -1) out.arity = 0;
  return out;
}

num_relation diff_transform(const num_relation& r) {
  num_relation out;
  out.bound = r.bound;
  out.arity = r.arity;
  for (const auto& t : r.tuples) {
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i] <= t[i - 1])
        throw std::invalid_argument(
            "diff_transform requires strictly ascending tuples");
    std::vector<int> d(t.size());
    for (size_t i = 0; i < t.size(); ++i)
      d[i] = i == 0 ? t[0] : t[i] - t[i - 1];
    out.tuples.insert(std::move(d));
  }
  return out;
}

std::map<std::vector<int>, num_relation> order_type_partition(
    const num_relation& r) {
  std::map<std::vector<int>, num_relation> groups;
  for (const auto& t : r.tuples) {
    std::vector<int> distinct = t;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> rank(t.size());
    for (size_t i = 0; i < t.size(); ++i)
      rank[i] = (int)(std::lower_bound(distinct.begin(), distinct.end(),
                                       t[i]) -
                      distinct.begin());
    auto& g = groups[rank];
    g.arity = r.arity;
    g.bound = r.bound;
    g.tuples.insert(t);
  }
  return groups;
}

exponent_relation compute_exponent_relation(
    const std::function<bool(const std::string&)>& member,
    const std::vector<std::string>& words, int cap) {
  for (const auto& w : words)
    if (w.empty())
      throw std::invalid_argument("exponent_relation words must be nonempty");
  exponent_relation out;
  out.words = words;
  out.cap = cap;
  std::vector<long> e(words.size(), 0);
  auto rec = [&](auto&& self, size_t i, const std::string& prefix) -> void {
    if (i == words.size()) {
      if (member(prefix)) out.tuples.insert(e);
      return;
    }
    std::string cur = prefix;
    for (e[i] = 0; e[i] <= cap; ++e[i]) {
      self(self, i + 1, cur);
      cur += words[i];
    }
    e[i] = 0;
  };
  rec(rec, 0, "");
  return out;
}

namespace {

// An item is either an existential binding (var nonempty; def constrains the
// bound variable when present) or a bare conjunct (var empty).
struct item {
  std::string var;
  formula def;
};

// Sum of `terms` (previously bound variable names) equated to `target`,
// emitted as chained ternary plus atoms via fresh temporaries.
void emit_chain(const std::vector<std::string>& terms,
                const std::string& target, int& fresh,
                std::vector<item>& items) {
  if (terms.size() == 1) {
    items.push_back({"", f_equal(terms[0], target)});
    return;
  }
  std::string acc = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) {
    if (i + 1 == terms.size()) {
      items.push_back({"", f_atom("plus", {acc, terms[i], target})});
    } else {
      std::string tmp = "t" + std::to_string(++fresh);
      items.push_back({tmp, f_atom("plus", {acc, terms[i], tmp})});
      acc = tmp;
    }
  }
}

}  // namespace

formula emit_folin(const semilinear_set& s) {
  int n = s.arity();
  if (n < 1) throw std::invalid_argument("emit_folin requires arity >= 1");
  std::vector<formula> disjuncts;
  for (const auto& comp : s.components) {
    size_t k = comp.periods.size();
    for (unsigned subset = 0; subset < (1u << k); ++subset) {
      // Coefficients for periods in `subset` are >= 1, all others are 0.
      std::vector<item> items;
      int fresh = 0;
      long max_const = 0;
      for (int c = 0; c < n; ++c) max_const = std::max(max_const, comp.base[c]);
      bool feasible = true;
      for (int c = 0; c < n && feasible; ++c) {
        bool touched = false;
        for (size_t j = 0; j < k; ++j)
          if ((subset >> j & 1) && comp.periods[j][c] > 0) touched = true;
        if (!touched && comp.base[c] == 0) feasible = false;
      }
      if (!feasible) continue;  // a coordinate would be forced to 0 < 1
      // Constants 1..max_const as a chained unary numeral.
      if (max_const >= 1)
        items.push_back({"c1", f_forall("w", f_not(f_less("w", "c1")))});
      for (long v = 2; v <= max_const; ++v)
        items.push_back({"c" + std::to_string(v),
                         f_atom("plus", {"c" + std::to_string(v - 1), "c1",
                                         "c" + std::to_string(v)})});
      // Emit each coordinate's sum chain as soon as its coefficients are
      // bound; the chain's equation then pins down the last coefficient.
      unsigned bound_coeffs = 0;
      std::vector<bool> emitted(n, false);
      auto flush = [&] {
        for (int c = 0; c < n; ++c) {
          if (emitted[c]) continue;
          unsigned used = 0;
          for (size_t j = 0; j < k; ++j)
            if ((subset >> j & 1) && comp.periods[j][c] > 0) used |= 1u << j;
          if ((used & bound_coeffs) != used) continue;
          emitted[c] = true;
          std::vector<std::string> terms;
          if (comp.base[c] > 0)
            terms.push_back("c" + std::to_string(comp.base[c]));
          for (size_t j = 0; j < k; ++j)
            if ((subset >> j & 1) && comp.periods[j][c] > 0)
              for (long rep = 0; rep < comp.periods[j][c]; ++rep)
                terms.push_back("k" + std::to_string(j + 1));
          emit_chain(terms, "e" + std::to_string(c + 1), fresh, items);
        }
      };
      flush();
      for (size_t j = 0; j < k; ++j)
        if (subset >> j & 1) {
          items.push_back({"k" + std::to_string(j + 1), nullptr});
          bound_coeffs |= 1u << j;
          flush();
        }
      formula body = f_true();
      for (auto it = items.rbegin(); it != items.rend(); ++it) {
        if (it->var.empty())
          body = f_and(it->def, body);
        else
          body = f_exists(it->var, it->def ? f_and(it->def, body) : body);
      }
      disjuncts.push_back(body);
    }
  }
  if (disjuncts.empty()) {
    // Keep e1..en free so relation_of accepts the (everywhere false) formula.
    std::vector<formula> vars;
    for (int c = 0; c < n; ++c) {
      std::string e = "e" + std::to_string(c + 1);
      vars.push_back(f_equal(e, e));
    }
    return f_and(f_false(), f_all(vars));
  }
  return f_any(disjuncts);
}

bool check_cflN_criterion(const num_relation& r,
                          const std::vector<num_relation>& partition,
                          const std::vector<semilinear_set>& witnesses) {
  std::set<std::vector<int>> unioned;
  for (const auto& part : partition)
    unioned.insert(part.tuples.begin(), part.tuples.end());
  if (unioned != r.tuples)
    throw std::invalid_argument("partition does not union to R");
  if (partition.size() != witnesses.size())
    throw std::invalid_argument("one witness required per part");
  for (size_t i = 0; i < partition.size(); ++i) {
    const semilinear_set& w = witnesses[i];
    if (!is_stratified(w)) return false;
    num_relation d;
    try {
      d = diff_transform(sort_transform(partition[i]));
    } catch (const std::invalid_argument&) {
      return false;  // mixed order types or non-ascending part
    }
    if (!w.components.empty() && w.arity() != d.arity) return false;
    for (const auto& t : d.tuples)
      if (!semilinear_member(w, std::vector<long>(t.begin(), t.end())))
        return false;
    // No witness member up to the bound may lie outside diff(sort(R_i)).
    int m = d.arity;
    std::vector<long> t(m, 0);
    bool ok = true;
    auto scan = [&](auto&& self, int idx) -> void {
      if (!ok) return;
      if (idx == m) {
        if (semilinear_member(w, t) &&
            !d.tuples.count(std::vector<int>(t.begin(), t.end())))
          ok = false;
        return;
      }
      for (t[idx] = 0; t[idx] <= r.bound; ++t[idx]) self(self, idx + 1);
      t[idx] = 0;
    };
    if (m > 0) scan(scan, 0);
    if (!ok) return false;
  }
  return true;
}

}  // namespace duality
