#include "duality/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "duality/catalog.hpp"
#include "duality/constructions.hpp"
#include "duality/eval.hpp"
#include "duality/semilinear.hpp"

namespace duality {

int worker_count() {
  if (const char* env = std::getenv("DUALITY_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

namespace {

using case_fn = std::function<void(long, std::vector<suite_failure>&)>;

// Runs fn for indices [0, count) across workers; failures are collected per
// worker and concatenated (final order is fixed by the sort in finalize).
void sweep(suite_report& r, long count, const case_fn& fn) {
  r.cases += count;
  int workers = worker_count();
  if (workers <= 1 || count < 2048) {
    std::vector<suite_failure> local;
    for (long i = 0; i < count; ++i) fn(i, local);
    r.failures.insert(r.failures.end(), local.begin(), local.end());
    return;
  }
  std::vector<std::vector<suite_failure>> parts(workers);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  long chunk = (count + workers - 1) / workers;
  for (int t = 0; t < workers; ++t)
    threads.emplace_back([&, t] {
      try {
        long lo = t * chunk, hi = std::min(count, lo + chunk);
        for (long i = lo; i < hi; ++i) fn(i, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : parts)
    r.failures.insert(r.failures.end(), p.begin(), p.end());
}

void finalize(suite_report& r,
              std::chrono::steady_clock::time_point start) {
  std::sort(r.failures.begin(), r.failures.end(),
            [](const suite_failure& a, const suite_failure& b) {
              return a.input < b.input;
            });
  r.failures_total = (long)r.failures.size();
  if (r.failures.size() > 100) r.failures.resize(100);
  r.pass = r.failures_total == 0;
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void record(std::vector<suite_failure>& out, const std::string& input,
            bool expected, bool actual) {
  if (expected != actual)
    out.push_back({input, bool_str(expected), bool_str(actual)});
}

std::string bits_of(long v, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (v >> i & 1) s[n - 1 - i] = '1';
  return s;
}

long oracle_int(const std::string& u) {
  long v = 0;
  for (char c : u) v = 2 * v + (c == '1');
  return v;
}

// Word with the given index among words over `sigma` of length `len`,
// most significant digit first.
std::string word_at(const std::string& sigma, int len, long idx) {
  std::string w(len, sigma[0]);
  long k = (long)sigma.size();
  for (int i = len - 1; i >= 0; --i) {
    w[i] = sigma[idx % k];
    idx /= k;
  }
  return w;
}

// The canonical members of the Immerman language up to max_len, straight
// from the definition: one word per block width n.
std::set<std::string> canonical_immerman(int max_len) {
  std::set<std::string> out;
  for (int n = 1;; ++n) {
    long blocks = 1L << n;
    long len = blocks * n + blocks - 1;
    if (len > max_len) return out;
    std::string w;
    for (long i = 0; i < blocks; ++i) {
      if (i) w += 'a';
      w += bits_of(i, n);
    }
    out.insert(w);
  }
}

long get_param(const std::map<std::string, long>& params,
               const std::string& key, long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void check_params(const std::map<std::string, long>& params,
                  const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("unknown parameter for this suite: " + key);
  }
}

void suite_successor_windows(suite_report& r) {
  long max_n = get_param(r.params, "max_n", 10);
  if (max_n < 1 || max_n > 20)
    throw std::invalid_argument("max_n must be in 1..20");
  r.params["max_n"] = max_n;
  for (int n = 1; n <= max_n; ++n) {
    long half = 1L << (n - 1);
    sweep(r, (1L << n) * half, [n, half](long idx,
                                         std::vector<suite_failure>& out) {
      long u = idx / half, j = idx % half;
      long v = 2 * j + 1 - (u & 1);  // last bits differ
      std::string su = bits_of(u, n), sv = bits_of(v, n);
      bool expected = (oracle_int(su) + 1) % (1L << n) == oracle_int(sv);
      bool actual = successor_window_check(su, sv);
      record(out, "u=" + su + " v=" + sv, expected, actual);
    });
  }
}

void suite_addition_dpda(suite_report& r) {
  long L = get_param(r.params, "max_len", 12);
  if (L < 1 || L > 20) throw std::invalid_argument("max_len must be in 1..20");
  r.params["max_len"] = L;
  const dpda machine = addition_dpda();
  sweep(r, L * L * L, [&machine, L](long idx,
                                    std::vector<suite_failure>& out) {
    int a = (int)(idx / (L * L)) + 1;
    int b = (int)(idx / L % L) + 1;
    int c = (int)(idx % L) + 1;
    bool expected = a + b == c;
    int cmax = std::max({a, b, c});
    for (int m = cmax; m <= L; ++m) {
      gamma_word w = encode({a, b, c}, m);
      std::vector<std::string> tokens;
      for (gamma_symbol s : w) tokens.push_back(gamma_token(s));
      record(out, format_gamma_word(w), expected, dpda_run(machine, tokens));
    }
  });
}

void suite_immerman_complement(suite_report& r) {
  long L = get_param(r.params, "max_len", 14);
  if (L < 0 || L > 16) throw std::invalid_argument("max_len must be in 0..16");
  r.params["max_len"] = L;
  std::set<std::string> canon = canonical_immerman((int)L);
  for (int len = 0; len <= L; ++len) {
    long count = 1;
    for (int i = 0; i < len; ++i) count *= 3;
    sweep(r, count, [&canon, len](long idx,
                                  std::vector<suite_failure>& out) {
      std::string w = word_at("01a", len, idx);
      record(out, w, !canon.count(w), complement_decomposition_member(w));
    });
  }
}

void suite_npda_A(suite_report& r) {
  long L = get_param(r.params, "max_len", 12);
  if (L < 0 || L > 14) throw std::invalid_argument("max_len must be in 0..14");
  r.params["max_len"] = L;
  const npda machine = npda_for_A();
  for (int len = 0; len <= L; ++len) {
    long count = 1;
    for (int i = 0; i < len; ++i) count *= 3;
    sweep(r, count, [&machine, len](long idx,
                                    std::vector<suite_failure>& out) {
      std::string w = word_at("01a", len, idx);
      std::vector<std::string> syms;
      for (char c : w) syms.push_back(std::string(1, c));
      record(out, w, in_A(w), npda_accepts(machine, syms));
    });
  }
}

void suite_neutral_immerman(suite_report& r) {
  long L = get_param(r.params, "max_len", 12);
  if (L < 0 || L > 13) throw std::invalid_argument("max_len must be in 0..13");
  r.params["max_len"] = L;
  auto in_closure = neutralize_member(immerman_member, 'e');
  auto in_complement_closure =
      neutralize_member(complement_decomposition_member, 'e');
  for (int len = 0; len <= L; ++len) {
    long count = 1;
    for (int i = 0; i < len; ++i) count *= 4;
    sweep(r, count, [&, len](long idx, std::vector<suite_failure>& out) {
      std::string w = word_at("01ae", len, idx);
      record(out, w, in_closure(w), !in_complement_closure(w));
    });
  }
}

void suite_lindstrom_plus(suite_report& r) {
  long C = get_param(r.params, "max_c", 8);
  if (C < 1 || C > 12) throw std::invalid_argument("max_c must be in 1..12");
  r.params["max_c"] = C;
  const language_ref lang = addition_language();
  const std::vector<formula> bodies = build_tuple_transformation(3);
  sweep(r, C * C * C, [&](long idx, std::vector<suite_failure>& out) {
    int a = (int)(idx / (C * C)) + 1;
    int b = (int)(idx / C % C) + 1;
    int c = (int)(idx % C) + 1;
    bool expected = a + b == c;
    int cmax = std::max({a, b, c});
    for (int m = cmax; m <= cmax + 2; ++m) {
      word_structure s = word_structure::blank(m);
      bool actual = eval_lindstrom(lang, bodies, s,
                                   {{"x1", a}, {"x2", b}, {"x3", c}}, "y");
      record(out,
             "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                 " c=" + std::to_string(c) + " m=" + std::to_string(m),
             expected, actual);
    }
  });
}

void suite_semilinear_folin(suite_report& r) {
  long count = get_param(r.params, "count", 20);
  long bound = get_param(r.params, "bound", 12);
  long seed = get_param(r.params, "seed", 7041);
  if (count < 1 || count > 200 || bound < 1 || bound > 16)
    throw std::invalid_argument("count in 1..200, bound in 1..16");
  r.params["count"] = count;
  r.params["bound"] = bound;
  r.params["seed"] = seed;
  // Sets are drawn sequentially so the sweep below can run in parallel.
  std::mt19937 rng((unsigned)seed);
  std::vector<semilinear_set> sets;
  for (long i = 0; i < count; ++i) {
    int arity = 1 + (int)(rng() % 3);
    int comps = 1 + (int)(rng() % 2);
    semilinear_set s;
    for (int c = 0; c < comps; ++c) {
      std::vector<long> base(arity);
      for (auto& v : base) v = (long)(rng() % 5);
      int nper = (int)(rng() % 3);
      std::vector<std::vector<long>> periods(nper,
                                             std::vector<long>(arity));
      for (auto& p : periods)
        for (auto& v : p) v = (long)(rng() % 5);
      s.components.emplace_back(std::move(base), std::move(periods));
    }
    sets.push_back(std::move(s));
  }
  sweep(r, count, [&sets, bound](long idx, std::vector<suite_failure>& out) {
    const semilinear_set& s = sets[idx];
    int n = std::max(s.arity(), 1);
    std::vector<std::string> vars;
    for (int c = 0; c < n; ++c) vars.push_back("e" + std::to_string(c + 1));
    num_relation rel = relation_of(emit_folin(s), vars, (int)bound, 4);
    std::string tag = "set#" + std::to_string(idx) + " " +
                      semilinear_to_json(s).dump();
    std::vector<int> t(n, 1);
    auto scan = [&](auto&& self, int i) -> void {
      if (i == n) {
        bool expected =
            semilinear_member(s, std::vector<long>(t.begin(), t.end()));
        bool actual = rel.tuples.count(t) > 0;
        if (expected != actual) {
          std::string ts;
          for (int v : t) ts += (ts.empty() ? "(" : ",") + std::to_string(v);
          record(out, tag + " t=" + ts + ")", expected, actual);
        }
        return;
      }
      for (t[i] = 1; t[i] <= bound; ++t[i]) self(self, i + 1);
      t[i] = 1;
    };
    scan(scan, 0);
  });
}

void suite_sort_diff(suite_report& r) {
  long arity = get_param(r.params, "arity", 4);
  long bound = get_param(r.params, "bound", 10);
  if (arity < 1 || arity > 6 || bound < 1 || bound > 16)
    throw std::invalid_argument("arity in 1..6, bound in 1..16");
  r.params["arity"] = arity;
  r.params["bound"] = bound;
  std::vector<std::vector<int>> tuples;
  for (int n = 1; n <= arity; ++n) {
    std::vector<int> t(n);
    auto gen = [&](auto&& self, int i, int lo) -> void {
      if (i == n) {
        tuples.push_back(t);
        return;
      }
      for (t[i] = lo; t[i] <= bound; ++t[i]) self(self, i + 1, t[i] + 1);
    };
    gen(gen, 0, 1);
  }
  sweep(r, (long)tuples.size(),
        [&tuples, bound](long idx, std::vector<suite_failure>& out) {
          const std::vector<int>& t = tuples[idx];
          num_relation rel;
          rel.arity = (int)t.size();
          rel.bound = (int)bound;
          rel.tuples.insert(t);
          num_relation d = diff_transform(rel);
          std::vector<int> back = *d.tuples.begin();
          for (size_t i = 1; i < back.size(); ++i) back[i] += back[i - 1];
          std::string ts;
          for (int v : t) ts += (ts.empty() ? "(" : ",") + std::to_string(v);
          record(out, ts + ")", true, back == t);
        });
}

const std::vector<std::string>& prop3_sentences() {
  static const std::vector<std::string> sentences = {
      "exists z. Qx1(z)",
      "exists z. Qx1+x2(z)",
      "exists z. exists w. (Qx1(z) & Qx2(w) & z < w)",
      "forall z. !(Qx1+x2(z))",
      "exists z. (Qx2(z) & !exists w. (w < z & Qx1(w)))",
      "exists z. forall w. (Qx1(w) -> w = z)",
      "exists z. (Qx1(z) & exists w. (Qx2(w) & w < z))",
      "forall z. (Qx1(z) -> exists w. Qx1+x2(w))",
      "exists z. (Qx1(z) & Qx2(z))",
      "!exists z. (Qx1(z) & exists w. (z < w & Qx1+x2(w)))",
  };
  return sentences;
}

void suite_prop3_rewrite(suite_report& r) {
  long bound = get_param(r.params, "bound", 6);
  if (bound < 1 || bound > 10)
    throw std::invalid_argument("bound must be in 1..10");
  r.params["bound"] = bound;
  const auto& sentences = prop3_sentences();
  sweep(r, (long)sentences.size() * bound * bound,
        [&sentences, bound](long idx, std::vector<suite_failure>& out) {
          const std::string& text = sentences[idx / (bound * bound)];
          int c1 = (int)(idx / bound % bound) + 1;
          int c2 = (int)(idx % bound) + 1;
          formula phi = parse_formula(text);
          formula psi = rewrite_letter_to_equalities(phi, 2);
          int cmax = std::max(c1, c2);
          std::vector<bool> values;
          for (int m = cmax; m <= cmax + 4; ++m) {
            word_structure on_word =
                word_structure::from_gamma(encode({c1, c2}, m), 2);
            values.push_back(eval(phi, on_word, {}));
            values.push_back(eval(psi, word_structure::blank(m),
                                  {{"x1", c1}, {"x2", c2}}));
          }
          bool constant_and_equal = true;
          for (bool v : values)
            if (v != values[0]) constant_and_equal = false;
          record(out,
                 "\"" + text + "\" c=(" + std::to_string(c1) + "," +
                     std::to_string(c2) + ")",
                 true, constant_and_equal);
        });
}

}  // namespace

bool oracle_successor(const std::string& u, const std::string& v) {
  if (u.empty() || u.size() != v.size())
    throw std::invalid_argument("oracle_successor: |u| = |v| >= 1");
  long mod = 1L << u.size();
  return (oracle_int(u) + 1) % mod == oracle_int(v) % mod;
}

std::vector<std::string> suite_names() {
  return {"successor-windows", "addition-dpda", "immerman-complement",
          "npda-A",            "neutral-immerman", "lindstrom-plus",
          "semilinear-folin",  "sort-diff",        "prop3-rewrite"};
}

suite_report run_suite(const std::string& name,
                       const std::map<std::string, long>& params) {
  suite_report r;
  r.suite = name;
  r.params = params;
  auto start = std::chrono::steady_clock::now();
  if (name == "successor-windows") {
    check_params(params, {"max_n"});
    suite_successor_windows(r);
  } else if (name == "addition-dpda") {
    check_params(params, {"max_len"});
    suite_addition_dpda(r);
  } else if (name == "immerman-complement") {
    check_params(params, {"max_len"});
    suite_immerman_complement(r);
  } else if (name == "npda-A") {
    check_params(params, {"max_len"});
    suite_npda_A(r);
  } else if (name == "neutral-immerman") {
    check_params(params, {"max_len"});
    suite_neutral_immerman(r);
  } else if (name == "lindstrom-plus") {
    check_params(params, {"max_c"});
    suite_lindstrom_plus(r);
  } else if (name == "semilinear-folin") {
    check_params(params, {"count", "bound", "seed"});
    suite_semilinear_folin(r);
  } else if (name == "sort-diff") {
    check_params(params, {"arity", "bound"});
    suite_sort_diff(r);
  } else if (name == "prop3-rewrite") {
    check_params(params, {"bound"});
    suite_prop3_rewrite(r);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  finalize(r, start);
  return r;
}

nlohmann::json report_to_json(const suite_report& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"input", f.input},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  return {{"suite", r.suite},   {"params", r.params},
          {"cases", r.cases},   {"failures", failures},
          {"failures_total", r.failures_total},
          {"pass", r.pass},     {"millis", r.millis}};
}

}  // namespace duality
