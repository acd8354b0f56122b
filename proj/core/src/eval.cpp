#include "duality/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace duality {

word_structure word_structure::blank(int m) {
  word_structure s;
  s.alphabet = {"_"};
  s.word.assign(m, "_");
  return s;
}

word_structure word_structure::from_chars(const std::string& chars,
                                          const std::string& alphabet) {
  word_structure s;
  for (char c : alphabet) s.alphabet.push_back(std::string(1, c));
  for (char c : chars) {
    std::string sym(1, c);
    if (std::find(s.alphabet.begin(), s.alphabet.end(), sym) ==
        s.alphabet.end())
      throw std::invalid_argument("word symbol outside alphabet: " + sym);
    s.word.push_back(sym);
  }
  return s;
}

word_structure word_structure::from_gamma(const gamma_word& w, int n) {
  word_structure s;
  s.alphabet = gamma_alphabet(n);
  for (gamma_symbol g : w) s.word.push_back(gamma_token(g));
  return s;
}

void language_registry::add(const std::string& name, language_ref ref) {
  table_[name] = std::move(ref);
}

const language_ref* language_registry::find(const std::string& name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

namespace {

// Variable environment with shadowing; lookup scans from the back.
struct env {
  std::vector<std::pair<std::string, int>> vars;

  int lookup(const std::string& name) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == name) return it->second;
    throw std::runtime_error("unassigned free variable: " + name);
  }
};

bool eval_impl(const formula& f, const word_structure& s, env& e,
               const eval_context& ctx);

std::vector<std::string> transform_impl(const language_ref& lang,
                                        const std::vector<formula>& bodies,
                                        const word_structure& s, env& e,
                                        const std::string& var,
                                        const eval_context& ctx) {
  size_t t = lang.alphabet.size();
  if (bodies.size() + 1 != t)
    throw std::invalid_argument(
        "lindstrom: body count must be |alphabet| - 1");
  std::vector<std::string> v;
  e.vars.emplace_back(var, 0);
  for (int c = 1; c <= s.size(); ++c) {
    e.vars.back().second = c;
    size_t fired = t - 1;  // default letter a_t
    for (size_t j = 0; j < bodies.size(); ++j)
      if (eval_impl(bodies[j], s, e, ctx)) {
        fired = j;
        break;
      }
    v.push_back(lang.alphabet[fired]);
  }
  e.vars.pop_back();
  return v;
}

bool eval_impl(const formula& f, const word_structure& s, env& e,
               const eval_context& ctx) {
  switch (f->kind) {
    case node_kind::truth:
      return true;
    case node_kind::falsity:
      return false;
    case node_kind::letter_at: {
      int c = e.lookup(f->terms[0]);
      return s.word[c - 1] == f->name;
    }
    case node_kind::num_atom: {
      auto pred = ctx.predicates->find(f->name);
      if (!pred)
        throw std::runtime_error("unknown predicate: " + f->name);
      std::vector<int> args;
      args.reserve(f->terms.size());
      for (const auto& t : f->terms) args.push_back(e.lookup(t));
      return pred->eval(args, s.size());
    }
    case node_kind::less:
      return e.lookup(f->terms[0]) < e.lookup(f->terms[1]);
    case node_kind::equal:
      return e.lookup(f->terms[0]) == e.lookup(f->terms[1]);
    case node_kind::not_:
      return !eval_impl(f->children[0], s, e, ctx);
    case node_kind::and_:
      return eval_impl(f->children[0], s, e, ctx) &&
             eval_impl(f->children[1], s, e, ctx);
    case node_kind::or_:
      return eval_impl(f->children[0], s, e, ctx) ||
             eval_impl(f->children[1], s, e, ctx);
    case node_kind::implies:
      return !eval_impl(f->children[0], s, e, ctx) ||
             eval_impl(f->children[1], s, e, ctx);
    case node_kind::iff:
      return eval_impl(f->children[0], s, e, ctx) ==
             eval_impl(f->children[1], s, e, ctx);
    case node_kind::exists:
    case node_kind::forall:
    case node_kind::mod_exists:
    case node_kind::majority: {
      int count = 0;
      e.vars.emplace_back(f->var, 0);
      bool result;
      if (f->kind == node_kind::exists) {
        result = false;
        for (int c = 1; c <= s.size(); ++c) {
          e.vars.back().second = c;
          if (eval_impl(f->children[0], s, e, ctx)) {
            result = true;
            break;
          }
        }
      } else if (f->kind == node_kind::forall) {
        result = true;
        for (int c = 1; c <= s.size(); ++c) {
          e.vars.back().second = c;
          if (!eval_impl(f->children[0], s, e, ctx)) {
            result = false;
            break;
          }
        }
      } else {
        for (int c = 1; c <= s.size(); ++c) {
          e.vars.back().second = c;
          if (eval_impl(f->children[0], s, e, ctx)) ++count;
        }
        result = f->kind == node_kind::mod_exists
                     ? count % f->q == f->r
                     : 2 * count > s.size();
      }
      e.vars.pop_back();
      return result;
    }
    case node_kind::lindstrom: {
      if (!ctx.languages)
        throw std::runtime_error("no language registry for lind[" + f->name +
                                 "]");
      const language_ref* lang = ctx.languages->find(f->name);
      if (!lang)
        throw std::runtime_error("unknown language: " + f->name);
      auto v = transform_impl(*lang, f->children, s, e, f->var, ctx);
      return lang->member(v);
    }
  }
  throw std::logic_error("unreachable formula kind");
}

env env_of(const assignment& a) {
  env e;
  for (const auto& [name, value] : a) e.vars.emplace_back(name, value);
  return e;
}

}  // namespace

bool eval(const formula& f, const word_structure& s, const assignment& a,
          const eval_context& ctx) {
  for (const auto& [name, value] : a)
    if (value < 1 || value > s.size())
      throw std::invalid_argument("assignment of " + name +
                                  " outside universe 1.." +
                                  std::to_string(s.size()));
  env e = env_of(a);
  return eval_impl(f, s, e, ctx);
}

std::set<std::vector<std::string>> language_of(
    const formula& f, const std::vector<std::string>& alphabet, int max_len,
    const eval_context& ctx) {
  if (!free_variables(f).empty())
    throw std::invalid_argument("language_of requires a sentence");
  std::set<std::vector<std::string>> out;
  std::vector<std::string> w;
  word_structure s;
  s.alphabet = alphabet;
  auto rec = [&](auto&& self) -> void {
    s.word = w;
    env e;
    if (eval_impl(f, s, e, ctx)) out.insert(w);
    if ((int)w.size() == max_len) return;
    for (const auto& sym : alphabet) {
      w.push_back(sym);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

num_relation relation_of(const formula& f,
                         const std::vector<std::string>& vars, int bound,
                         int window, const eval_context& ctx) {
  if (bound < 1 || window < 1)
    throw std::invalid_argument("relation_of: bound and window must be >= 1");
  if (contains_letter_atoms(f))
    throw std::invalid_argument(
        "relation_of: letter atoms are not allowed (letter-free evaluation)");
  std::set<std::string> free = free_variables(f);
  std::set<std::string> declared(vars.begin(), vars.end());
  if (free != declared)
    throw std::invalid_argument(
        "relation_of: free variables must match the declared tuple");
  int n = (int)vars.size();
  num_relation rel;
  rel.arity = n;
  rel.bound = bound;
  std::vector<int> t(n, 1);
  auto scan = [&](auto&& self, int i) -> void {
    if (i == n) {
      int cmax = 1;
      for (int c : t) cmax = std::max(cmax, c);
      bool ok = true;
      for (int m = cmax; ok && m <= cmax + window; ++m) {
        word_structure s = word_structure::blank(m);
        env e;
        for (int j = 0; j < n; ++j) e.vars.emplace_back(vars[j], t[j]);
        ok = eval_impl(f, s, e, ctx);
      }
      if (ok) rel.tuples.insert(t);
      return;
    }
    for (t[i] = 1; t[i] <= bound; ++t[i]) self(self, i + 1);
    t[i] = 1;
  };
  scan(scan, 0);
  return rel;
}

std::vector<std::string> lindstrom_transform(
    const language_ref& lang, const std::vector<formula>& bodies,
    const word_structure& s, const assignment& a, const std::string& var,
    const eval_context& ctx) {
  env e = env_of(a);
  return transform_impl(lang, bodies, s, e, var, ctx);
}

bool eval_lindstrom(const language_ref& lang,
                    const std::vector<formula>& bodies,
                    const word_structure& s, const assignment& a,
                    const std::string& var, const eval_context& ctx) {
  return lang.member(lindstrom_transform(lang, bodies, s, a, var, ctx));
}

formula rewrite_letter_to_equalities(const formula& f, int n) {
  if (f->kind == node_kind::letter_at) {
    gamma_symbol v;
    try {
      v = f->name == "." ? 0 : parse_gamma_token(f->name, n);
    } catch (const std::exception&) {
      throw std::invalid_argument("letter atom over a non-Gamma_n symbol: " +
                                  f->name);
    }
    std::vector<formula> parts;
    for (int i = 1; i <= n; ++i) {
      formula eq = f_equal(f->terms[0], "x" + std::to_string(i));
      parts.push_back(v & (1u << (i - 1)) ? eq : f_not(eq));
    }
    return f_all(parts);
  }
  formula_node copy = *f;
  for (auto& c : copy.children) c = rewrite_letter_to_equalities(c, n);
  return std::make_shared<const formula_node>(std::move(copy));
}

formula build_chi(int n) {
  if (n < 1) throw std::invalid_argument("build_chi requires n >= 1");
  std::vector<formula> conjuncts;
  for (int i = 1; i <= n; ++i) {
    std::string xi = "x" + std::to_string(i);
    std::vector<formula> disjuncts;
    for (gamma_symbol v = 1; v < (1u << n); ++v) {
      if (!(v & (1u << (i - 1)))) continue;
      std::vector<formula> z_any;
      for (gamma_symbol v2 = 1; v2 < (1u << n); ++v2)
        if (v2 & (1u << (i - 1))) z_any.push_back(f_letter(gamma_token(v2), "z"));
      formula uniqueness =
          f_forall("z", f_iff(f_any(z_any), f_equal("z", xi)));
      disjuncts.push_back(f_and(f_letter(gamma_token(v), xi), uniqueness));
    }
    conjuncts.push_back(f_any(disjuncts));
  }
  return f_all(conjuncts);
}

}  // namespace duality
