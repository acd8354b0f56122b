#include "duality/formula.hpp"

#include <cctype>
#include <stdexcept>

namespace duality {

namespace {
formula make(formula_node n) {
  return std::make_shared<const formula_node>(std::move(n));
}
}  // namespace

formula f_true() { return make({node_kind::truth}); }
formula f_false() { return make({node_kind::falsity}); }

formula f_letter(const std::string& symbol, const std::string& term) {
  return make({node_kind::letter_at, symbol, {term}});
}

formula f_atom(const std::string& pred,
               const std::vector<std::string>& terms) {
  return make({node_kind::num_atom, pred, terms});
}

formula f_less(const std::string& a, const std::string& b) {
  return make({node_kind::less, "", {a, b}});
}

formula f_equal(const std::string& a, const std::string& b) {
  return make({node_kind::equal, "", {a, b}});
}

formula f_not(formula a) {
  return make({node_kind::not_, "", {}, "", 0, 0, {std::move(a)}});
}

formula f_and(formula a, formula b) {
  return make({node_kind::and_, "", {}, "", 0, 0, {std::move(a), std::move(b)}});
}

formula f_or(formula a, formula b) {
  return make({node_kind::or_, "", {}, "", 0, 0, {std::move(a), std::move(b)}});
}

formula f_implies(formula a, formula b) {
  return make(
      {node_kind::implies, "", {}, "", 0, 0, {std::move(a), std::move(b)}});
}

formula f_iff(formula a, formula b) {
  return make({node_kind::iff, "", {}, "", 0, 0, {std::move(a), std::move(b)}});
}

formula f_exists(const std::string& var, formula body) {
  return make({node_kind::exists, "", {}, var, 0, 0, {std::move(body)}});
}

formula f_forall(const std::string& var, formula body) {
  return make({node_kind::forall, "", {}, var, 0, 0, {std::move(body)}});
}

formula f_mod_exists(int q, int r, const std::string& var, formula body) {
  if (q <= 0 || r < 0 || r >= q)
    throw std::invalid_argument("existsmod requires 0 <= r < q");
  return make({node_kind::mod_exists, "", {}, var, q, r, {std::move(body)}});
}

formula f_majority(const std::string& var, formula body) {
  return make({node_kind::majority, "", {}, var, 0, 0, {std::move(body)}});
}

formula f_lindstrom(const std::string& lang, const std::string& var,
                    std::vector<formula> bodies) {
  return make({node_kind::lindstrom, lang, {}, var, 0, 0, std::move(bodies)});
}

formula f_all(const std::vector<formula>& fs) {
  if (fs.empty()) return f_true();
  formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = f_and(acc, fs[i]);
  return acc;
}

formula f_any(const std::vector<formula>& fs) {
  if (fs.empty()) return f_false();
  formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = f_or(acc, fs[i]);
  return acc;
}

void num_predicate_registry::add(const std::string& name, num_predicate pred) {
  table_[name] = std::move(pred);
}

std::optional<num_predicate> num_predicate_registry::find(
    const std::string& name) const {
  auto it = table_.find(name);
  if (it != table_.end()) return it->second;
  // modq[q,r] is a predicate family, synthesized on demand.
  if (name.rfind("modq[", 0) == 0 && name.back() == ']') {
    auto comma = name.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
      int q = std::stoi(name.substr(5, comma - 5));
      int r = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
      if (q <= 0 || r < 0 || r >= q) return std::nullopt;
      return num_predicate{
          1, [q, r](const std::vector<int>& a, int) { return a[0] % q == r; }};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

const num_predicate_registry& num_predicate_registry::builtins() {
  static const num_predicate_registry reg = [] {
    num_predicate_registry r;
    r.add("<", {2, [](const std::vector<int>& a, int) { return a[0] < a[1]; }});
    r.add("=",
          {2, [](const std::vector<int>& a, int) { return a[0] == a[1]; }});
    r.add("plus", {3, [](const std::vector<int>& a, int) {
                     return a[0] + a[1] == a[2];
                   }});
    r.add("times", {3, [](const std::vector<int>& a, int) {
                      return a[0] * a[1] == a[2];
                    }});
    r.add("bit", {2, [](const std::vector<int>& a, int) {
                    return a[1] >= 0 && a[1] < 31 && ((a[0] >> a[1]) & 1);
                  }});
    r.add("even",
          {1, [](const std::vector<int>& a, int) { return a[0] % 2 == 0; }});
    return r;
  }();
  return reg;
}

parse_error::parse_error(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
      position(pos) {}

namespace {

class parser {
 public:
  parser(const std::string& text, const num_predicate_registry& registry)
      : text_(text), reg_(registry) {}

  formula parse() {
    formula f = parse_formula_rule();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  const std::string& text_;
  const num_predicate_registry& reg_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat_char(char c) {
    if (!peek_char(c)) return false;
    ++pos_;
    return true;
  }

  void expect_char(char c) {
    if (!eat_char(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_str(const std::string& s) {
    skip_ws();
    return text_.compare(pos_, s.size(), s) == 0;
  }

  bool eat_str(const std::string& s) {
    if (!peek_str(s)) return false;
    pos_ += s.size();
    return true;
  }

  static bool ident_char(char c) {
    return isalnum((unsigned char)c) || c == '_';
  }

  bool peek_keyword(const std::string& kw) {
    skip_ws();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    size_t after = pos_ + kw.size();
    return after >= text_.size() || !ident_char(text_[after]);
  }

  bool eat_keyword(const std::string& kw) {
    if (!peek_keyword(kw)) return false;
    pos_ += kw.size();
    return true;
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() &&
        (isalpha((unsigned char)text_[pos_]) || text_[pos_] == '_'))
      ++pos_;
    else
      fail("expected identifier");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int parse_num() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && isdigit((unsigned char)text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected number");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  bool at_quantifier() {
    return peek_keyword("exists") || peek_keyword("forall") ||
           peek_keyword("maj") || peek_keyword("existsmod") ||
           peek_keyword("lind");
  }

  formula parse_formula_rule() {
    if (at_quantifier()) return parse_quant();
    return parse_iff();
  }

  formula parse_quant() {
    if (eat_keyword("existsmod")) {
      expect_char('[');
      int q = parse_num();
      expect_char(',');
      int r = parse_num();
      expect_char(']');
      std::string var = parse_ident();
      expect_char('.');
      if (q <= 0 || r < 0 || r >= q) fail("existsmod requires 0 <= r < q");
      return f_mod_exists(q, r, var, parse_formula_rule());
    }
    if (eat_keyword("lind")) {
      expect_char('[');
      skip_ws();
      size_t close = text_.find(']', pos_);
      if (close == std::string::npos) fail("unterminated language name");
      std::string lang = text_.substr(pos_, close - pos_);
      while (!lang.empty() && isspace((unsigned char)lang.back()))
        lang.pop_back();
      if (lang.empty()) fail("empty language name");
      pos_ = close;
      expect_char(']');
      std::string var = parse_ident();
      expect_char('.');
      expect_char('[');
      std::vector<formula> bodies;
      bodies.push_back(parse_formula_rule());
      while (eat_char(';')) bodies.push_back(parse_formula_rule());
      expect_char(']');
      return f_lindstrom(lang, var, std::move(bodies));
    }
    node_kind kind;
    if (eat_keyword("exists"))
      kind = node_kind::exists;
    else if (eat_keyword("forall"))
      kind = node_kind::forall;
    else if (eat_keyword("maj"))
      kind = node_kind::majority;
    else
      fail("expected quantifier");
    std::string var = parse_ident();
    expect_char('.');
    formula body = parse_formula_rule();
    switch (kind) {
      case node_kind::exists:
        return f_exists(var, body);
      case node_kind::forall:
        return f_forall(var, body);
      default:
        return f_majority(var, body);
    }
  }

  formula parse_iff() {
    formula f = parse_imp();
    while (eat_str("<->")) f = f_iff(f, parse_imp());
    return f;
  }

  formula parse_imp() {
    formula f = parse_or();
    while (eat_str("->")) f = f_implies(f, parse_or());
    return f;
  }

  formula parse_or() {
    formula f = parse_and();
    while (peek_char('|')) {
      ++pos_;
      f = f_or(f, parse_and());
    }
    return f;
  }

  formula parse_and() {
    formula f = parse_unary();
    while (peek_char('&')) {
      ++pos_;
      f = f_and(f, parse_unary());
    }
    return f;
  }

  formula parse_unary() {
    // Permit a quantifier wherever an operand may start, e.g. after "!" or
    // "&"; its body extends maximally to the right.
    if (at_quantifier()) return parse_quant();
    if (eat_char('!')) {
      if (at_quantifier()) return f_not(parse_quant());
      return f_not(parse_unary());
    }
    if (eat_char('(')) {
      formula f = parse_formula_rule();
      expect_char(')');
      return f;
    }
    return parse_atom();
  }

  static bool symbol_char(char c) {
    return isalnum((unsigned char)c) || c == '+' || c == '.' || c == '_';
  }

  formula parse_atom() {
    skip_ws();
    size_t save = pos_;
    if (pos_ < text_.size() && text_[pos_] == 'Q') {
      // Try a letter atom: Q SYMBOL ( IDENT )
      ++pos_;
      size_t start = pos_;
      while (pos_ < text_.size() && symbol_char(text_[pos_])) ++pos_;
      std::string symbol = text_.substr(start, pos_ - start);
      if (!symbol.empty() && pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        std::string term = parse_ident();
        expect_char(')');
        return f_letter(symbol, term);
      }
      pos_ = save;  // fall through: an identifier that merely starts with Q
    }
    if (eat_keyword("true")) return f_true();
    if (eat_keyword("false")) return f_false();
    std::string name = parse_ident();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      // Predicate-family name such as modq[3,1].
      size_t close = text_.find(']', pos_);
      if (close == std::string::npos) fail("unterminated predicate name");
      name += text_.substr(pos_, close - pos_ + 1);
      pos_ = close + 1;
      skip_ws();
    }
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<std::string> args;
      args.push_back(parse_ident());
      while (eat_char(',')) args.push_back(parse_ident());
      expect_char(')');
      auto pred = reg_.find(name);
      if (!pred) fail("unknown predicate: " + name);
      if ((size_t)pred->arity != args.size())
        fail("arity mismatch for predicate " + name);
      return f_atom(name, args);
    }
    if (pos_ < text_.size() && text_[pos_] == '<' &&
        (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '-')) {
      ++pos_;
      return f_less(name, parse_ident());
    }
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      return f_equal(name, parse_ident());
    }
    fail("expected atom");
  }
};

void print(const formula& f, std::string& out) {
  switch (f->kind) {
    case node_kind::truth:
      out += "true";
      break;
    case node_kind::falsity:
      out += "false";
      break;
    case node_kind::letter_at:
      out += "Q" + f->name + "(" + f->terms[0] + ")";
      break;
    case node_kind::num_atom: {
      out += f->name + "(";
      for (size_t i = 0; i < f->terms.size(); ++i) {
        if (i) out += ",";
        out += f->terms[i];
      }
      out += ")";
      break;
    }
    case node_kind::less:
      out += f->terms[0] + " < " + f->terms[1];
      break;
    case node_kind::equal:
      out += f->terms[0] + " = " + f->terms[1];
      break;
    case node_kind::not_:
      out += "!(";
      print(f->children[0], out);
      out += ")";
      break;
    case node_kind::and_:
    case node_kind::or_:
    case node_kind::implies:
    case node_kind::iff: {
      const char* op = f->kind == node_kind::and_     ? " & "
                       : f->kind == node_kind::or_    ? " | "
                       : f->kind == node_kind::implies ? " -> "
                                                       : " <-> ";
      out += "(";
      print(f->children[0], out);
      out += op;
      print(f->children[1], out);
      out += ")";
      break;
    }
    case node_kind::exists:
    case node_kind::forall:
    case node_kind::majority: {
      const char* kw = f->kind == node_kind::exists   ? "exists "
                       : f->kind == node_kind::forall ? "forall "
                                                      : "maj ";
      out += "(";
      out += kw;
      out += f->var + ". ";
      print(f->children[0], out);
      out += ")";
      break;
    }
    case node_kind::mod_exists:
      out += "(existsmod[" + std::to_string(f->q) + "," +
             std::to_string(f->r) + "] " + f->var + ". ";
      print(f->children[0], out);
      out += ")";
      break;
    case node_kind::lindstrom: {
      out += "(lind[" + f->name + "] " + f->var + ". [";
      for (size_t i = 0; i < f->children.size(); ++i) {
        if (i) out += "; ";
        print(f->children[i], out);
      }
      out += "])";
      break;
    }
  }
}

}  // namespace

formula parse_formula(const std::string& text,
                      const num_predicate_registry& registry) {
  return parser(text, registry).parse();
}

std::string pretty_print(const formula& f) {
  std::string out;
  print(f, out);
  return out;
}

namespace {
void collect_free(const formula& f, std::set<std::string>& bound,
                  std::set<std::string>& free) {
  switch (f->kind) {
    case node_kind::letter_at:
    case node_kind::num_atom:
    case node_kind::less:
    case node_kind::equal:
      for (const auto& t : f->terms)
        if (!bound.count(t)) free.insert(t);
      break;
    case node_kind::exists:
    case node_kind::forall:
    case node_kind::mod_exists:
    case node_kind::majority:
    case node_kind::lindstrom: {
      bool fresh = bound.insert(f->var).second;
      for (const auto& c : f->children) collect_free(c, bound, free);
      if (fresh) bound.erase(f->var);
      break;
    }
    default:
      for (const auto& c : f->children) collect_free(c, bound, free);
  }
}
}  // namespace

std::set<std::string> free_variables(const formula& f) {
  std::set<std::string> bound, free;
  collect_free(f, bound, free);
  return free;
}

bool contains_letter_atoms(const formula& f) {
  if (f->kind == node_kind::letter_at) return true;
  for (const auto& c : f->children)
    if (contains_letter_atoms(c)) return true;
  return false;
}

bool contains_lindstrom(const formula& f) {
  if (f->kind == node_kind::lindstrom) return true;
  for (const auto& c : f->children)
    if (contains_lindstrom(c)) return true;
  return false;
}

}  // namespace duality
