#pragma once

// Textual dialect for schematic action descriptions (`.bc` files):
//
//   file       := (sortdecl | fluentdecl | actiondecl | law)*
//   sortdecl   := "sort" NAME "=" (INT ".." INT | "{" value ("," value)* "}") "."
//   fluentdecl := "fluent" schema ("," schema)* ":" ("regular" | "defined") "."
//   actiondecl := "action" schema ("agent" term)? "."
//   schema     := NAME ("(" param ("," param)* ")")?      param := SORT | VAR ":" SORT
//   law        := "impossible" items tail
//               | "nonexecutable" items ("if" items)? tail
//               | "inertial" items tail
//               | "default" lit tail
//               | lit ("if" items)? ("after" items?)? ("ifcons" items)? tail
//   tail       := ("where" cond ("," cond)*)? ("label" term)? "."
//   item       := lit | "all" VAR "in" SORT ":" lit
//   cond       := expr ("="|"=="|"!="|"<"|"<="|">"|">=") expr | VAR "in" SORT
//
// `-` negates a literal, `%` starts a comment. Variables start with an
// upper-case letter. The names `ab` and `ab'` are reserved for abnormality
// fluents and need no declaration.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bcmas/error.hpp"
#include "bcmas/model.hpp"

namespace bcmas {

struct Expr {
  enum class Kind : std::uint8_t { integer, constant, variable, compound, negated, add, sub };

  Kind kind = Kind::integer;
  std::int64_t value = 0;
  std::string name;
  std::vector<Expr> args;

  static Expr integer(std::int64_t v) { return {Kind::integer, v, {}, {}}; }
  static Expr constant(std::string n) { return {Kind::constant, 0, std::move(n), {}}; }
  static Expr variable(std::string n) { return {Kind::variable, 0, std::move(n), {}}; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct AtomPattern {
  bool negative = false;
  std::string name;
  std::vector<Expr> args;
  SourceLoc loc;

  friend bool operator==(const AtomPattern&, const AtomPattern&) = default;
};

// A literal, or the bounded conjunction `all VAR in SORT : literal`.
struct BodyItem {
  std::string all_var;
  std::string all_sort;
  AtomPattern literal;

  bool is_all() const { return !all_var.empty(); }
  friend bool operator==(const BodyItem&, const BodyItem&) = default;
};

struct Condition {
  enum class Op : std::uint8_t { eq, ne, lt, le, gt, ge, in };

  Op op = Op::eq;
  Expr lhs;
  Expr rhs;
  std::string sort;  // Op::in only
  SourceLoc loc;

  friend bool operator==(const Condition&, const Condition&) = default;
};

enum class LawKind : std::uint8_t { static_law, dynamic_law, impossible, nonexecutable, inertial, default_law };

struct SchemaLaw {
  LawKind kind = LawKind::static_law;
  std::optional<AtomPattern> head;
  std::vector<BodyItem> if_part;
  std::vector<BodyItem> after_part;
  std::vector<BodyItem> ifcons_part;
  std::vector<BodyItem> items;  // impossible / nonexecutable / inertial payload
  std::vector<Condition> where;
  std::optional<Expr> label;
  SourceLoc loc;

  friend bool operator==(const SchemaLaw&, const SchemaLaw&) = default;
};

struct SortDecl {
  std::string name;
  bool is_range = false;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<std::string> values;  // enumerated sorts
  SourceLoc loc;

  friend bool operator==(const SortDecl&, const SortDecl&) = default;
};

struct Param {
  std::string var;  // may be empty
  std::string sort;

  friend bool operator==(const Param&, const Param&) = default;
};

struct SymbolDecl {
  SymbolKind kind = SymbolKind::regular_fluent;
  std::string name;
  std::vector<Param> params;
  std::optional<Expr> agent;  // actions only
  SourceLoc loc;

  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

struct SpecFile {
  std::vector<SortDecl> sorts;
  std::vector<SymbolDecl> decls;
  std::vector<SchemaLaw> laws;

  const SortDecl* find_sort(const std::string& name) const {
    for (const auto& s : sorts)
      if (s.name == name) return &s;
    return nullptr;
  }
  const SymbolDecl* find_decl(const std::string& name, std::size_t arity) const {
    for (const auto& d : decls)
      if (d.name == name && d.params.size() == arity) return &d;
    return nullptr;
  }

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

inline bool is_reserved_symbol(std::string_view name) { return name == "ab" || name == "ab'"; }

namespace detail {

struct Token {
  enum class Kind : std::uint8_t { name, var, integer, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::int64_t value = 0;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      SourceLoc loc{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back({Token::Kind::end, "", 0, loc});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          word += advance();
        while (pos_ < text_.size() && text_[pos_] == '\'') word += advance();
        bool upper = std::isupper(static_cast<unsigned char>(word[0]));
        out.push_back({upper ? Token::Kind::var : Token::Kind::name, word, 0, loc});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += advance();
        if (digits.size() > 17) throw ParseError(loc, "integer literal too large");
        out.push_back({Token::Kind::integer, digits, std::stoll(digits), loc});
      } else {
        static constexpr std::string_view two[] = {"..", "==", "!=", "<=", ">="};
        std::string p;
        for (auto t : two)
          if (text_.substr(pos_, 2) == t) p = std::string(t);
        if (p.empty()) {
          static constexpr std::string_view one = "(),.{}=<>+-:";
          if (one.find(c) == std::string_view::npos)
            throw ParseError(loc, std::string("unexpected character '") + c + "'");
          p = std::string(1, c);
        }
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        out.push_back({Token::Kind::punct, p, 0, loc});
      }
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SpecFile file() {
    SpecFile spec;
    while (peek().kind != Token::Kind::end) {
      const Token& t = peek();
      if (is_word("sort")) {
        spec.sorts.push_back(sort_decl());
      } else if (is_word("fluent")) {
        fluent_decl(spec.decls);
      } else if (is_word("action")) {
        spec.decls.push_back(action_decl());
      } else if (t.kind == Token::Kind::name || is_punct("-")) {
        spec.laws.push_back(law());
      } else {
        fail(t, "expected a declaration or a law");
      }
    }
    return spec;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool is_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::name && peek(k).text == w;
  }
  bool is_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::punct && peek(k).text == p;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    std::string got = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.loc, msg + " (got " + got + ")");
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
    next();
  }
  std::string expect_name() {
    if (peek().kind != Token::Kind::name) fail(peek(), "expected a name");
    return next().text;
  }
  std::string expect_var() {
    if (peek().kind != Token::Kind::var) fail(peek(), "expected a variable");
    return next().text;
  }
  std::int64_t expect_int() {
    bool negative = false;
    if (is_punct("-")) {
      next();
      negative = true;
    }
    if (peek().kind != Token::Kind::integer) fail(peek(), "expected an integer");
    std::int64_t v = next().value;
    return negative ? -v : v;
  }

  SortDecl sort_decl() {
    SortDecl s;
    s.loc = next().loc;
    s.name = expect_name();
    expect_punct("=");
    if (is_punct("{")) {
      next();
      for (;;) {
        if (peek().kind == Token::Kind::name || peek().kind == Token::Kind::integer)
          s.values.push_back(next().text);
        else
          fail(peek(), "expected a sort value");
        if (is_punct(",")) {
          next();
          continue;
        }
        break;
      }
      expect_punct("}");
    } else {
      s.is_range = true;
      s.lo = expect_int();
      expect_punct("..");
      s.hi = expect_int();
    }
    expect_punct(".");
    return s;
  }

  std::vector<Param> params() {
    std::vector<Param> ps;
    if (!is_punct("(")) return ps;
    next();
    for (;;) {
      Param p;
      if (peek().kind == Token::Kind::var) {
        p.var = next().text;
        expect_punct(":");
      }
      p.sort = expect_name();
      ps.push_back(std::move(p));
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct(")");
    return ps;
  }

  void fluent_decl(std::vector<SymbolDecl>& out) {
    next();
    std::vector<SymbolDecl> batch;
    for (;;) {
      SymbolDecl d;
      d.loc = peek().loc;
      d.name = expect_name();
      d.params = params();
      batch.push_back(std::move(d));
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct(":");
    SymbolKind kind;
    if (is_word("regular"))
      kind = SymbolKind::regular_fluent;
    else if (is_word("defined"))
      kind = SymbolKind::defined_fluent;
    else
      fail(peek(), "expected 'regular' or 'defined'");
    next();
    expect_punct(".");
    for (auto& d : batch) {
      d.kind = kind;
      out.push_back(std::move(d));
    }
  }

  SymbolDecl action_decl() {
    SymbolDecl d;
    next();
    d.kind = SymbolKind::action;
    d.loc = peek().loc;
    d.name = expect_name();
    d.params = params();
    if (is_word("agent")) {
      next();
      d.agent = primary();
    }
    expect_punct(".");
    return d;
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::integer) return Expr::integer(next().value);
    if (t.kind == Token::Kind::var) return Expr::variable(next().text);
    if (is_punct("-")) {
      next();
      if (peek().kind == Token::Kind::integer) return Expr::integer(-next().value);
      Expr e{Expr::Kind::negated, 0, {}, {}};
      e.args.push_back(primary());
      return e;
    }
    if (t.kind == Token::Kind::name) {
      std::string n = next().text;
      if (!is_punct("(")) return Expr::constant(std::move(n));
      Expr e{Expr::Kind::compound, 0, std::move(n), {}};
      e.args = arguments();
      return e;
    }
    fail(t, "expected a term");
  }

  Expr expr() {
    Expr lhs = primary();
    while (is_punct("+") || is_punct("-")) {
      bool plus = next().text == "+";
      Expr e{plus ? Expr::Kind::add : Expr::Kind::sub, 0, {}, {}};
      e.args.push_back(std::move(lhs));
      e.args.push_back(primary());
      lhs = std::move(e);
    }
    return lhs;
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    expect_punct("(");
    for (;;) {
      args.push_back(expr());
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct(")");
    return args;
  }

  AtomPattern literal() {
    AtomPattern a;
    a.loc = peek().loc;
    if (is_punct("-")) {
      next();
      a.negative = true;
    }
    a.name = expect_name();
    if (is_keyword(a.name)) throw ParseError(a.loc, "keyword '" + a.name + "' cannot be used as a symbol");
    if (is_punct("(")) a.args = arguments();
    return a;
  }

  static bool is_keyword(std::string_view w) {
    static const std::set<std::string_view> kw = {"if", "after", "ifcons", "where", "label", "impossible",
                                                   "nonexecutable", "inertial", "default", "all"};
    return kw.contains(w);
  }

  bool at_clause_end() const {
    return is_punct(".") || is_word("if") || is_word("after") || is_word("ifcons") || is_word("where") ||
           is_word("label");
  }

  std::vector<BodyItem> items(bool allow_empty = false) {
    std::vector<BodyItem> out;
    if (allow_empty && at_clause_end()) return out;
    for (;;) {
      BodyItem item;
      if (is_word("all") && peek(1).kind == Token::Kind::var) {
        next();
        item.all_var = expect_var();
        expect_word("in");
        item.all_sort = expect_name();
        expect_punct(":");
      }
      item.literal = literal();
      out.push_back(std::move(item));
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    return out;
  }

  Condition condition() {
    Condition c;
    c.loc = peek().loc;
    if (peek().kind == Token::Kind::var && is_word("in", 1)) {
      c.op = Condition::Op::in;
      c.lhs = Expr::variable(next().text);
      next();
      c.sort = expect_name();
      return c;
    }
    c.lhs = expr();
    static const std::map<std::string, Condition::Op, std::less<>> ops = {
        {"=", Condition::Op::eq}, {"==", Condition::Op::eq}, {"!=", Condition::Op::ne}, {"<", Condition::Op::lt},
        {"<=", Condition::Op::le}, {">", Condition::Op::gt}, {">=", Condition::Op::ge}};
    if (peek().kind != Token::Kind::punct || !ops.contains(peek().text)) fail(peek(), "expected a comparison");
    c.op = ops.find(next().text)->second;
    c.rhs = expr();
    return c;
  }

  void tail(SchemaLaw& law) {
    if (is_word("where")) {
      next();
      for (;;) {
        law.where.push_back(condition());
        if (is_punct(",")) {
          next();
          continue;
        }
        break;
      }
    }
    if (is_word("label")) {
      next();
      law.label = primary();
    }
    expect_punct(".");
  }

  SchemaLaw law() {
    SchemaLaw law;
    law.loc = peek().loc;
    if (is_word("impossible")) {
      next();
      law.kind = LawKind::impossible;
      law.items = items();
    } else if (is_word("nonexecutable")) {
      next();
      law.kind = LawKind::nonexecutable;
      law.items = items();
      if (is_word("if")) {
        next();
        law.if_part = items();
      }
    } else if (is_word("inertial")) {
      next();
      law.kind = LawKind::inertial;
      law.items = items();
    } else if (is_word("default")) {
      next();
      law.kind = LawKind::default_law;
      law.head = literal();
    } else {
      law.kind = LawKind::static_law;
      law.head = literal();
      bool has_if = false;
      if (is_word("if")) {
        next();
        has_if = true;
        law.if_part = items(true);
      }
      if (is_word("after")) {
        if (has_if) fail(peek(), "a law cannot have both 'if' and 'after' parts");
        next();
        law.kind = LawKind::dynamic_law;
        law.after_part = items(true);
      }
      if (is_word("ifcons")) {
        next();
        law.ifcons_part = items(true);
      }
    }
    tail(law);
    return law;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// Semantic checks that need the whole file: sorts exist, atom arities match
// their declarations and every variable is bound.
class Checker {
 public:
  explicit Checker(const SpecFile& spec) : spec_(spec) {}

  void run() {
    std::set<std::string> seen;
    for (const auto& s : spec_.sorts) {
      if (!seen.insert(s.name).second) throw ParseError(s.loc, "sort '" + s.name + "' declared twice");
      if (s.is_range ? s.hi < s.lo : s.values.empty()) throw ParseError(s.loc, "sort '" + s.name + "' is empty");
    }
    for (const auto& d : spec_.decls) {
      for (const auto& p : d.params)
        if (!spec_.find_sort(p.sort)) throw ParseError(d.loc, "unknown sort '" + p.sort + "'");
      if (is_reserved_symbol(d.name)) throw ParseError(d.loc, "'" + d.name + "' is reserved for abnormality fluents");
      if (d.agent && d.agent->kind == Expr::Kind::variable) {
        bool found = false;
        for (const auto& p : d.params) found = found || p.var == d.agent->name;
        if (!found) throw ParseError(d.loc, "unbound variable '" + d.agent->name + "' in agent clause");
      }
    }
    for (const auto& law : spec_.laws) check_law(law);
  }

 private:
  void atom(const AtomPattern& a, std::set<std::string>& bound, const std::string& local = {}) const {
    if (is_reserved_symbol(a.name)) return;
    const SymbolDecl* d = spec_.find_decl(a.name, a.args.size());
    if (!d) {
      for (const auto& other : spec_.decls)
        if (other.name == a.name)
          throw ParseError(a.loc, "arity mismatch for '" + a.name + "': declared with " +
                                      std::to_string(other.params.size()) + " argument(s), used with " +
                                      std::to_string(a.args.size()));
      throw ParseError(a.loc, "undeclared symbol '" + a.name + "/" + std::to_string(a.args.size()) + "'");
    }
    for (const auto& arg : a.args)
      if (arg.kind == Expr::Kind::variable && arg.name != local) bound.insert(arg.name);
  }

  static void vars_of(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == Expr::Kind::variable) out.push_back(e.name);
    for (const auto& a : e.args) vars_of(a, out);
  }

  void check_law(const SchemaLaw& law) const {
    std::set<std::string> bound;
    std::vector<std::pair<std::string, SourceLoc>> used;
    auto use_atom = [&](const AtomPattern& a, const std::string& local) {
      std::vector<std::string> vs;
      for (const auto& arg : a.args) vars_of(arg, vs);
      for (const auto& v : vs)
        if (v != local) used.emplace_back(v, a.loc);
    };
    auto visit = [&](const std::vector<BodyItem>& items) {
      for (const auto& it : items) {
        if (it.is_all() && !spec_.find_sort(it.all_sort))
          throw ParseError(it.literal.loc, "unknown sort '" + it.all_sort + "'");
        atom(it.literal, bound, it.all_var);
        use_atom(it.literal, it.all_var);
      }
    };
    if (law.head) {
      atom(*law.head, bound);
      use_atom(*law.head, {});
    }
    visit(law.if_part);
    visit(law.after_part);
    visit(law.ifcons_part);
    visit(law.items);
    for (const auto& c : law.where) {
      if (c.op == Condition::Op::in) {
        if (!spec_.find_sort(c.sort)) throw ParseError(c.loc, "unknown sort '" + c.sort + "'");
        bound.insert(c.lhs.name);
        continue;
      }
      std::vector<std::string> vs;
      vars_of(c.lhs, vs);
      vars_of(c.rhs, vs);
      for (const auto& v : vs) used.emplace_back(v, c.loc);
    }
    if (law.label) {
      std::vector<std::string> vs;
      vars_of(*law.label, vs);
      for (const auto& v : vs) used.emplace_back(v, law.loc);
    }
    for (const auto& [v, loc] : used)
      if (!bound.contains(v)) throw ParseError(loc, "unbound variable '" + v + "'");
  }

  const SpecFile& spec_;
};

inline std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer: return std::to_string(e.value);
    case Expr::Kind::constant:
    case Expr::Kind::variable: return e.name;
    case Expr::Kind::negated: return "-" + print_expr(e.args[0]);
    case Expr::Kind::add: return print_expr(e.args[0]) + "+" + print_expr(e.args[1]);
    case Expr::Kind::sub: return print_expr(e.args[0]) + "-" + print_expr(e.args[1]);
    case Expr::Kind::compound: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? "," : "") + print_expr(e.args[i]);
      return s + ")";
    }
  }
  return {};
}

inline std::string print_atom(const AtomPattern& a) {
  std::string s = a.negative ? "-" + a.name : a.name;
  if (!a.args.empty()) {
    s += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) s += (i ? "," : "") + print_expr(a.args[i]);
    s += ")";
  }
  return s;
}

inline std::string print_items(const std::vector<BodyItem>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    if (items[i].is_all()) s += "all " + items[i].all_var + " in " + items[i].all_sort + " : ";
    s += print_atom(items[i].literal);
  }
  return s;
}

inline std::string print_condition(const Condition& c) {
  static constexpr const char* ops[] = {" == ", " != ", " < ", " <= ", " > ", " >= "};
  if (c.op == Condition::Op::in) return print_expr(c.lhs) + " in " + c.sort;
  return print_expr(c.lhs) + ops[static_cast<int>(c.op)] + print_expr(c.rhs);
}

inline std::string print_schema(const std::string& name, const std::vector<Param>& params) {
  std::string s = name;
  if (params.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    if (!params[i].var.empty()) s += params[i].var + ":";
    s += params[i].sort;
  }
  return s + ")";
}

}  // namespace detail

inline SpecFile parse(std::string_view text) {
  detail::Parser p(detail::Lexer(text).run());
  SpecFile spec = p.file();
  detail::Checker(spec).run();
  return spec;
}

inline std::string pretty_print(const SpecFile& spec) {
  using namespace detail;
  std::string out = "% action description\n";
  for (const auto& s : spec.sorts) {
    out += "sort " + s.name + " = ";
    if (s.is_range) {
      out += std::to_string(s.lo) + ".." + std::to_string(s.hi);
    } else {
      out += "{";
      for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? ", " : "") + s.values[i];
      out += "}";
    }
    out += ".\n";
  }
  for (const auto& d : spec.decls) {
    if (d.kind == SymbolKind::action) {
      out += "action " + print_schema(d.name, d.params);
      if (d.agent) out += " agent " + print_expr(*d.agent);
      out += ".\n";
    } else {
      out += "fluent " + print_schema(d.name, d.params) +
             (d.kind == SymbolKind::regular_fluent ? " : regular.\n" : " : defined.\n");
    }
  }
  for (const auto& law : spec.laws) {
    std::string s;
    switch (law.kind) {
      case LawKind::impossible: s = "impossible " + print_items(law.items); break;
      case LawKind::nonexecutable:
        s = "nonexecutable " + print_items(law.items);
        if (!law.if_part.empty()) s += " if " + print_items(law.if_part);
        break;
      case LawKind::inertial: s = "inertial " + print_items(law.items); break;
      case LawKind::default_law: s = "default " + print_atom(*law.head); break;
      case LawKind::static_law:
        s = print_atom(*law.head);
        if (!law.if_part.empty()) s += " if " + print_items(law.if_part);
        if (!law.ifcons_part.empty()) s += " ifcons " + print_items(law.ifcons_part);
        break;
      case LawKind::dynamic_law:
        s = print_atom(*law.head) + " after";
        if (!law.after_part.empty()) s += " " + print_items(law.after_part);
        if (!law.ifcons_part.empty()) s += " ifcons " + print_items(law.ifcons_part);
        break;
    }
    if (!law.where.empty()) {
      s += " where ";
      for (std::size_t i = 0; i < law.where.size(); ++i) s += (i ? ", " : "") + print_condition(law.where[i]);
    }
    if (law.label) s += " label " + print_expr(*law.label);
    out += s + ".\n";
  }
  return out;
}

}  // namespace bcmas
