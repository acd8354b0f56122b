#include "duality/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace duality {

long int_of(const std::string& u) {
  if (u.empty()) throw std::invalid_argument("int_of: empty word");
  long v = 0;
  for (char c : u) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("int_of: non-binary symbol");
    v = 2 * v + (c - '0');
  }
  return v;
}

const std::vector<std::string>& forbidden_windows() {
  static const std::vector<std::string> f = {"0010", "0011", "0100", "0111",
                                            "1001", "1000", "1110", "1101"};
  return f;
}

namespace {

bool forbidden(char b1, char b2, char c1, char c2) {
  static const std::set<std::string> f(forbidden_windows().begin(),
                                       forbidden_windows().end());
  return f.count(std::string{b1, b2, c1, c2}) > 0;
}

bool over(const std::string& w, const std::string& allowed) {
  return w.find_first_not_of(allowed) == std::string::npos;
}

// Maximal binary runs, i.e. the a-separated segments of w (empty runs kept).
std::vector<std::string> runs_of(const std::string& w) {
  std::vector<std::string> runs;
  size_t start = 0;
  for (size_t i = 0; i <= w.size(); ++i)
    if (i == w.size() || w[i] == 'a') {
      runs.push_back(w.substr(start, i - start));
      start = i + 1;
    }
  return runs;
}

}  // namespace

bool successor_window_check(const std::string& u, const std::string& v) {
  if (u.empty() || u.size() != v.size())
    throw std::invalid_argument("successor_window_check: |u| = |v| >= 1");
  if (u.back() == v.back())
    throw std::invalid_argument(
        "successor_window_check: last bits must differ");
  size_t n = u.size();
  for (size_t i = 1; i < n; ++i) {
    // window u_i u_{i-1} v_i v_{i-1}; bit i sits at string index n-1-i
    size_t p = n - 1 - i;
    if (forbidden(u[p], u[p + 1], v[p], v[p + 1])) return false;
  }
  return true;
}

dpda addition_dpda() {
  // States: 0 start, 1 after x1, 2 after x2, 3 after both, 4 after x3,
  // 5 accept.  One counter symbol is pushed per position up to min(a,b) and
  // popped per position from max(a,b)+1 to c; the counts match iff a+b=c.
  dpda p;
  p.num_states = 6;
  p.alphabet = {".",  "x1",    "x2",    "x1+x2",
                "x3", "x1+x3", "x2+x3", "x1+x2+x3"};
  p.stack_alphabet = "Z0";
  p.bottom = 'Z';
  for (char t : {'Z', '0'}) {
    std::string push0 = std::string("0") + t;
    std::string keep(1, t);
    p.add_rule(0, ".", t, 0, push0);
    p.add_rule(0, "x1", t, 1, push0);
    p.add_rule(0, "x2", t, 2, push0);
    p.add_rule(0, "x1+x2", t, 3, push0);
    p.add_rule(1, ".", t, 1, keep);
    p.add_rule(1, "x2", t, 3, keep);
    p.add_rule(2, ".", t, 2, keep);
    p.add_rule(2, "x1", t, 3, keep);
  }
  p.add_rule(3, ".", '0', 3, "");
  p.add_rule(3, "x3", '0', 4, "");
  p.add_rule(4, ".", '0', 4, "0");
  p.add_eps_rule(4, 'Z', 5, "Z");
  p.add_rule(5, ".", 'Z', 5, "Z");
  p.accepting = {5};
  return p;
}

bool immerman_member(const std::string& w) {
  if (!over(w, "01a")) return false;
  std::vector<std::string> blocks = runs_of(w);
  size_t n = blocks[0].size();
  if (n == 0 || n > 25) return false;
  if (blocks.size() != (size_t{1} << n)) return false;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].size() != n || int_of(blocks[i]) != (long)i) return false;
  return true;
}

bool in_A(const std::string& w) {
  if (!over(w, "01a")) return false;
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] != 'a') continue;
    size_t b = p;  // scan back to the start of the maximal run before p
    while (b > 0 && w[b - 1] != 'a') --b;
    size_t n = p - b;
    if (n == 0 || n > 60 || p + 1 + n > w.size()) continue;
    std::string u = w.substr(b, n), v = w.substr(p + 1, n);
    if (v.find('a') != std::string::npos) continue;
    long mod = 1L << n;
    if ((int_of(u) + 1) % mod != int_of(v) % mod) return true;
  }
  return false;
}

npda npda_for_A(int reach) {
  if (reach < 1) throw std::invalid_argument("npda_for_A: reach >= 1");
  int K = reach;
  npda p;
  p.alphabet = {"0", "1", "a"};
  p.stack_alphabet = "ZYXP";
  p.bottom = 'Z';
  auto st = [&p] { return p.num_states++; };
  const std::string bit[2] = {"0", "1"};
  const std::string all[3] = {"0", "1", "a"};

  int q_start = st(), q_wait = st(), q_acc = st(), q_pre = st();
  int q_a0 = st(), q_bot0 = st(), q_top0 = st();
  p.initial = q_start;
  p.accepting = {q_acc};

  for (char t : std::string("ZYXP")) {
    std::string keep(1, t);
    std::string pushY = std::string("Y") + t;
    p.add_eps_rule(q_start, t, q_wait, keep);
    p.add_eps_rule(q_start, t, q_pre, keep);
    for (const auto& s : all) p.add_rule(q_wait, s, t, q_wait, keep);
    p.add_rule(q_wait, "a", t, q_pre, keep);
    p.add_eps_rule(q_pre, t, q_a0, pushY);
    p.add_eps_rule(q_pre, t, q_bot0, pushY);
    p.add_eps_rule(q_pre, t, q_top0, pushY);
    for (const auto& s : all) p.add_rule(q_acc, s, t, q_acc, keep);
  }

  // Branch (a): last bits of u and v agree, so v is not the successor of u.
  // One X per u-bit after the first; pops locate v's last bit above Y.
  int a_run[2] = {st(), st()}, a_v[2] = {st(), st()};
  for (int c = 0; c < 2; ++c) {
    p.add_rule(q_a0, bit[c], 'Y', a_run[c], "Y");
    for (char t : std::string("YX")) {
      std::string keep(1, t);
      for (int c2 = 0; c2 < 2; ++c2)
        p.add_rule(a_run[c], bit[c2], t, a_run[c2], std::string("X") + t);
      p.add_rule(a_run[c], "a", t, a_v[c], keep);
    }
    for (int d = 0; d < 2; ++d) p.add_rule(a_v[c], bit[d], 'X', a_v[c], "");
    p.add_rule(a_v[c], bit[c], 'Y', q_acc, "");
  }

  // Low-offset windows: i-1 = j < K counted in state, the n-1-i high bits
  // of u matched against v's prefix with one P per bit.
  std::vector<int> bot_tail(K);
  bot_tail[0] = q_acc;
  for (int j = 1; j < K; ++j) {
    bot_tail[j] = st();
    for (int d = 0; d < 2; ++d)
      p.add_rule(bot_tail[j], bit[d], 'Z', bot_tail[j - 1], "Z");
  }
  for (int b1 = 0; b1 < 2; ++b1) {
    int bot_b = st();
    for (char t : std::string("YP"))
      p.add_rule(q_bot0, bit[b1], t, bot_b, std::string(1, t));
    for (int b2 = 0; b2 < 2; ++b2) {
      std::vector<int> bb(K), bv(K);
      for (int j = 0; j < K; ++j) bb[j] = st(), bv[j] = st();
      for (char t : std::string("YP")) {
        std::string keep(1, t);
        p.add_rule(bot_b, bit[b2], t, bb[0], keep);
        for (int j = 0; j < K; ++j) {
          if (j + 1 < K)
            for (int d = 0; d < 2; ++d)
              p.add_rule(bb[j], bit[d], t, bb[j + 1], keep);
          p.add_rule(bb[j], "a", t, bv[j], keep);
        }
      }
      for (int j = 0; j < K; ++j) {
        for (int d = 0; d < 2; ++d) p.add_rule(bv[j], bit[d], 'P', bv[j], "");
        for (int c1 = 0; c1 < 2; ++c1) {
          int bc = st();
          p.add_rule(bv[j], bit[c1], 'Y', bc, "");
          for (int c2 = 0; c2 < 2; ++c2)
            if (forbidden('0' + b1, '0' + b2, '0' + c1, '0' + c2))
              p.add_rule(bc, bit[c2], 'Z', bot_tail[j], "Z");
        }
      }
    }
  }
  for (char t : std::string("YP"))
    for (int d = 0; d < 2; ++d)
      p.add_rule(q_bot0, bit[d], t, q_bot0, std::string("P") + t);

  // High-offset windows: s = n-1-i <= K counted in state, the i-1 low bits
  // of u matched against v's suffix with one X per bit.
  int top_tail = st();
  for (int d = 0; d < 2; ++d) p.add_rule(top_tail, bit[d], 'X', top_tail, "");
  p.add_eps_rule(top_tail, 'Y', q_acc, "");
  std::vector<int> top_s(K + 1);
  top_s[0] = q_top0;
  for (int s = 1; s <= K; ++s) top_s[s] = st();
  for (int s = 0; s <= K; ++s) {
    if (s + 1 <= K)
      for (int d = 0; d < 2; ++d)
        p.add_rule(top_s[s], bit[d], 'Y', top_s[s + 1], "Y");
    for (int b1 = 0; b1 < 2; ++b1) {
      int tb = st();
      p.add_rule(top_s[s], bit[b1], 'Y', tb, "Y");
      for (int b2 = 0; b2 < 2; ++b2) {
        int tbb = st();
        p.add_rule(tb, bit[b2], 'Y', tbb, "Y");
        std::vector<int> tv(s + 1);
        for (int k = 0; k <= s; ++k) tv[k] = st();
        for (char t : std::string("YX")) {
          std::string keep(1, t);
          for (int d = 0; d < 2; ++d)
            p.add_rule(tbb, bit[d], t, tbb, std::string("X") + t);
          p.add_rule(tbb, "a", t, tv[0], keep);
          for (int k = 0; k < s; ++k)
            for (int d = 0; d < 2; ++d)
              p.add_rule(tv[k], bit[d], t, tv[k + 1], keep);
        }
        for (int c1 = 0; c1 < 2; ++c1) {
          int tc = st();
          for (char t : std::string("YX")) {
            p.add_rule(tv[s], bit[c1], t, tc, std::string(1, t));
            for (int c2 = 0; c2 < 2; ++c2)
              if (forbidden('0' + b1, '0' + b2, '0' + c1, '0' + c2))
                p.add_rule(tc, bit[c2], t, top_tail, std::string(1, t));
          }
        }
      }
    }
  }
  return p;
}

bool complement_decomposition_member(const std::string& w) {
  if (!over(w, "01a")) return false;
  if (in_A(w)) return true;
  if (over(w, "a")) return true;
  std::vector<std::string> runs = runs_of(w);
  // an all-0 or all-1 run strictly between two a's
  for (size_t i = 1; i + 1 < runs.size(); ++i)
    if (over(runs[i], "0") || over(runs[i], "1")) return true;
  // a 1 before the first a, or a 0 after the last a
  if (runs.front().find('1') != std::string::npos) return true;
  if (runs.back().find('0') != std::string::npos) return true;
  // adjacent runs of unequal length
  for (size_t i = 0; i + 1 < runs.size(); ++i)
    if (runs[i].size() != runs[i + 1].size()) return true;
  return false;
}

nfa unequal_adjacent_runs_nfa(int max_run) {
  if (max_run < 0) throw std::invalid_argument("max_run must be >= 0");
  int R = max_run;
  nfa a;
  a.alphabet = {"0", "1", "a"};
  // pre (anything ending before a boundary), u-chain, v-grid, post
  int pre = 0, post = 1;
  auto u_id = [&](int p) { return 2 + p; };
  auto v_id = [&](int p, int q) { return 2 + (R + 1) + p * (R + 1) + q; };
  a.num_states = 2 + (R + 1) + (R + 1) * (R + 1);
  a.transitions.resize(a.num_states);
  a.epsilon.resize(a.num_states);
  a.initial = {pre, u_id(0)};
  for (const auto& s : a.alphabet) {
    a.add_transition(pre, s, pre);
    a.add_transition(post, s, post);
  }
  a.add_transition(pre, "a", u_id(0));
  for (int p = 0; p <= R; ++p) {
    for (const auto& b : {"0", "1"})
      if (p + 1 <= R) a.add_transition(u_id(p), b, u_id(p + 1));
    a.add_transition(u_id(p), "a", v_id(p, 0));
    for (int q = 0; q <= R; ++q) {
      for (const auto& b : {"0", "1"})
        if (q + 1 <= R) a.add_transition(v_id(p, q), b, v_id(p, q + 1));
      if (q != p) {
        a.accepting.insert(v_id(p, q));
        a.add_transition(v_id(p, q), "a", post);
      }
    }
  }
  a.accepting.insert(post);
  return a;
}

bool modified_immerman_member(const std::string& w) {
  if (!over(w, "01a")) return false;
  std::vector<std::string> blocks = runs_of(w);
  size_t n = blocks[0].size();
  if (n == 0 || n > 25) return false;
  if (blocks.size() != (size_t{1} << n)) return false;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != n) return false;
    std::string b = blocks[i];
    if (i % 2 == 1) std::reverse(b.begin(), b.end());  // even 1-based index
    if (int_of(b) != (long)i) return false;
  }
  return true;
}

bool wotschke_member(const std::string& w) {
  if (!over(w, "ab")) return false;
  size_t n = (size_t)std::count(w.begin(), w.end(), 'b');
  if (w.size() != n * (n + 1)) return false;
  std::string block = std::string(n, 'a') + "b";
  for (size_t i = 0; i < n; ++i)
    if (w.compare(i * (n + 1), n + 1, block) != 0) return false;
  return true;
}

std::vector<formula> build_tuple_transformation(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<formula> out;
  for (unsigned v = 1; v < (1u << n); ++v) {
    std::vector<formula> parts;
    for (int j = 1; j <= n; ++j) {
      formula eq = f_equal("y", "x" + std::to_string(j));
      parts.push_back(v & (1u << (j - 1)) ? eq : f_not(eq));
    }
    out.push_back(f_all(parts));
  }
  return out;
}

}  // namespace duality
