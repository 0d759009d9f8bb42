#pragma once

// Instantiates a parsed SpecFile over its sorts and hands the ground laws to
// expand_abbreviations.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bcmas/error.hpp"
#include "bcmas/model.hpp"
#include "bcmas/parser.hpp"

namespace bcmas {

struct GroundingStats {
  std::size_t schematic_laws = 0;
  std::size_t ground_laws = 0;
  std::size_t eliminated = 0;

  friend bool operator==(const GroundingStats&, const GroundingStats&) = default;
};

struct GroundOptions {
  // Prepended to generated law ids (not to explicit labels), so that files
  // composed together do not share fresh fluents by accident.
  std::string id_prefix;
};

struct GroundResult {
  ActionDescription desc;
  GroundingStats stats;
};

namespace detail {

struct Value {
  std::string text;
  std::optional<std::int64_t> num;

  static Value of_int(std::int64_t v) { return {std::to_string(v), v}; }
  friend bool operator==(const Value& a, const Value& b) { return a.text == b.text; }
};

using Binding = std::map<std::string, Value>;

// Thrown when a computed argument leaves its sort; the instance is dropped.
struct OutOfSort {};

class Grounder {
 public:
  Grounder(const SpecFile& spec, GroundOptions opts) : spec_(spec), opts_(std::move(opts)) {
    for (const auto& s : spec_.sorts) {
      auto& vals = sorts_[s.name];
      if (s.is_range) {
        for (auto v = s.lo; v <= s.hi; ++v) vals.push_back(Value::of_int(v));
      } else {
        for (const auto& v : s.values) {
          Value val{v, std::nullopt};
          if (!v.empty() && std::isdigit(static_cast<unsigned char>(v[0]))) val.num = std::stoll(v);
          vals.push_back(val);
        }
      }
      if (vals.empty()) throw GroundError(s.loc, "sort '" + s.name + "' is empty");
    }
  }

  GroundResult run() {
    Signature sig;
    for (const auto& d : spec_.decls) declare(d, sig);

    std::vector<Law> laws;
    GroundingStats stats;
    stats.schematic_laws = spec_.laws.size();
    for (std::size_t i = 0; i < spec_.laws.size(); ++i) ground_law(i, spec_.laws[i], sig, laws, stats);

    try {
      return {expand_abbreviations(laws, std::move(sig)), stats};
    } catch (const ModelError& e) {
      throw GroundError(SourceLoc{}, e.what());
    }
  }

 private:
  const std::vector<Value>& sort_values(const std::string& name, SourceLoc loc) const {
    auto it = sorts_.find(name);
    if (it == sorts_.end()) throw GroundError(loc, "unknown sort '" + name + "'");
    return it->second;
  }

  bool in_sort(const Value& v, const std::string& sort) const {
    for (const auto& x : sorts_.at(sort))
      if (x == v) return true;
    return false;
  }

  static std::string apply(const std::string& name, const std::vector<Value>& args) {
    if (args.empty()) return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].text;
    return s + ")";
  }

  void declare(const SymbolDecl& d, Signature& sig) const {
    std::vector<std::string> vars;
    std::vector<const std::vector<Value>*> domains;
    for (const auto& p : d.params) domains.push_back(&sort_values(p.sort, d.loc));
    std::vector<std::size_t> idx(domains.size(), 0);
    for (;;) {
      std::vector<Value> args;
      Binding b;
      for (std::size_t k = 0; k < domains.size(); ++k) {
        args.push_back((*domains[k])[idx[k]]);
        if (!d.params[k].var.empty()) b[d.params[k].var] = args.back();
      }
      std::string name = apply(d.name, args);
      try {
        if (d.kind == SymbolKind::action) {
          std::optional<std::string> agent;
          if (d.agent) agent = eval(*d.agent, b, d.loc).text;
          sig.declare_action(name, agent);
        } else {
          sig.declare_fluent(name, d.kind);
        }
      } catch (const ModelError& e) {
        throw GroundError(d.loc, e.what());
      }
      std::size_t k = domains.size();
      while (k > 0 && ++idx[k - 1] == domains[k - 1]->size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }

  Value eval(const Expr& e, const Binding& b, SourceLoc loc) const {
    switch (e.kind) {
      case Expr::Kind::integer: return Value::of_int(e.value);
      case Expr::Kind::constant: {
        Value v{e.name, std::nullopt};
        return v;
      }
      case Expr::Kind::variable: {
        auto it = b.find(e.name);
        if (it == b.end()) throw GroundError(loc, "unbound variable '" + e.name + "'");
        return it->second;
      }
      case Expr::Kind::negated: return {"-" + eval(e.args[0], b, loc).text, std::nullopt};
      case Expr::Kind::add:
      case Expr::Kind::sub: {
        Value l = eval(e.args[0], b, loc), r = eval(e.args[1], b, loc);
        if (!l.num || !r.num) throw GroundError(loc, "arithmetic over non-integer values '" + l.text + "', '" + r.text + "'");
        return Value::of_int(e.kind == Expr::Kind::add ? *l.num + *r.num : *l.num - *r.num);
      }
      case Expr::Kind::compound: {
        std::vector<Value> args;
        for (const auto& a : e.args) args.push_back(eval(a, b, loc));
        return {apply(e.name, args), std::nullopt};
      }
    }
    return {};
  }

  bool holds(const Condition& c, const Binding& b) const {
    if (c.op == Condition::Op::in) return in_sort(eval(c.lhs, b, c.loc), c.sort);
    Value l = eval(c.lhs, b, c.loc), r = eval(c.rhs, b, c.loc);
    if (c.op == Condition::Op::eq) return l == r;
    if (c.op == Condition::Op::ne) return !(l == r);
    if (!l.num || !r.num) throw GroundError(c.loc, "ordering comparison over non-integer sort");
    switch (c.op) {
      case Condition::Op::lt: return *l.num < *r.num;
      case Condition::Op::le: return *l.num <= *r.num;
      case Condition::Op::gt: return *l.num > *r.num;
      case Condition::Op::ge: return *l.num >= *r.num;
      default: return false;
    }
  }

  // A term naming a declared symbol, e.g. at(A,L+1) inside ab'(...), must
  // stay within that symbol's sorts.
  void check_term(const Expr& e, const Binding& b, const SourceLoc& loc) const {
    if (e.kind == Expr::Kind::negated) return check_term(e.args[0], b, loc);
    if (e.kind != Expr::Kind::compound) return;
    const SymbolDecl* d = spec_.find_decl(e.name, e.args.size());
    if (!d) return;
    for (std::size_t k = 0; k < e.args.size(); ++k)
      if (!in_sort(eval(e.args[k], b, loc), d->params[k].sort)) throw OutOfSort{};
  }

  Literal atom(const AtomPattern& a, const Binding& b, Signature& sig) const {
    std::vector<Value> args;
    for (const auto& e : a.args) args.push_back(eval(e, b, a.loc));
    std::string name = apply(a.name, args);
    if (is_reserved_symbol(a.name))
      for (const auto& e : a.args) check_term(e, b, a.loc);
    if (a.name == "ab") {
      sig.declare_fluent(name, SymbolKind::defined_fluent, FluentRole::abnormal_static);
    } else if (a.name == "ab'") {
      sig.declare_fluent(name, SymbolKind::regular_fluent, FluentRole::abnormal_dynamic);
    } else {
      const SymbolDecl* d = spec_.find_decl(a.name, a.args.size());
      if (!d) throw GroundError(a.loc, "undeclared symbol '" + a.name + "'");
      for (std::size_t k = 0; k < args.size(); ++k)
        if (!in_sort(args[k], d->params[k].sort)) throw OutOfSort{};
    }
    return {name, !a.negative};
  }

  std::vector<Literal> items(const std::vector<BodyItem>& its, Binding& b, Signature& sig) const {
    std::vector<Literal> out;
    for (const auto& it : its) {
      if (!it.is_all()) {
        out.push_back(atom(it.literal, b, sig));
        continue;
      }
      auto saved = b.find(it.all_var) == b.end() ? std::nullopt : std::optional<Value>(b[it.all_var]);
      for (const auto& v : sort_values(it.all_sort, it.literal.loc)) {
        b[it.all_var] = v;
        out.push_back(atom(it.literal, b, sig));
      }
      if (saved)
        b[it.all_var] = *saved;
      else
        b.erase(it.all_var);
    }
    return out;
  }

  // Variables of a law with the sort they range over, in first-occurrence
  // order. An explicit `X in S` condition wins over an argument position.
  std::vector<std::pair<std::string, std::string>> variables(const SchemaLaw& law) const {
    std::vector<std::pair<std::string, std::string>> vars;
    std::map<std::string, std::string> in_sorts;
    for (const auto& c : law.where)
      if (c.op == Condition::Op::in) in_sorts.try_emplace(c.lhs.name, c.sort);
    auto note = [&](const std::string& v, const std::string& sort) {
      for (const auto& [n, s] : vars)
        if (n == v) return;
      auto it = in_sorts.find(v);
      vars.emplace_back(v, it != in_sorts.end() ? it->second : sort);
    };
    auto visit_atom = [&](const AtomPattern& a, const std::string& local) {
      if (is_reserved_symbol(a.name)) return;
      const SymbolDecl* d = spec_.find_decl(a.name, a.args.size());
      if (!d) return;
      for (std::size_t k = 0; k < a.args.size(); ++k)
        if (a.args[k].kind == Expr::Kind::variable && a.args[k].name != local) note(a.args[k].name, d->params[k].sort);
    };
    auto visit = [&](const std::vector<BodyItem>& its) {
      for (const auto& it : its) visit_atom(it.literal, it.all_var);
    };
    if (law.head) visit_atom(*law.head, {});
    visit(law.items);
    visit(law.if_part);
    visit(law.after_part);
    visit(law.ifcons_part);
    for (const auto& [v, s] : in_sorts) note(v, s);
    return vars;
  }

  void ground_law(std::size_t index, const SchemaLaw& law, Signature& sig, std::vector<Law>& out,
                  GroundingStats& stats) const {
    auto vars = variables(law);
    std::vector<const std::vector<Value>*> domains;
    for (const auto& [v, s] : vars) domains.push_back(&sort_values(s, law.loc));
    std::vector<std::size_t> idx(domains.size(), 0);
    for (;;) {
      Binding b;
      std::vector<Value> tuple;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        tuple.push_back((*domains[k])[idx[k]]);
        b[vars[k].first] = tuple.back();
      }
      bool ok = true;
      for (const auto& c : law.where) ok = ok && holds(c, b);
      if (ok) {
        try {
          // Declarations from a dropped instance must not leak.
          Signature scratch = sig;
          out.push_back(instantiate(index, law, b, tuple, scratch));
          sig = std::move(scratch);
          ++stats.ground_laws;
        } catch (const OutOfSort&) {
          ++stats.eliminated;
        }
      } else {
        ++stats.eliminated;
      }
      std::size_t k = domains.size();
      while (k > 0 && ++idx[k - 1] == domains[k - 1]->size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }

  Law instantiate(std::size_t index, const SchemaLaw& law, Binding& b, const std::vector<Value>& tuple,
                  Signature& sig) const {
    LawId id;
    if (law.label) {
      id.name = eval(*law.label, b, law.loc).text;
    } else {
      id.name = opts_.id_prefix + "l" + std::to_string(index + 1);
      if (!tuple.empty()) id.name = apply(id.name, tuple);
    }
    auto require = [&](const Literal& l, bool action_ok, const char* where) {
      if (!sig.contains(l.symbol)) throw GroundError(law.loc, "undeclared symbol '" + l.symbol + "'");
      if (!action_ok && sig.is_action(l.symbol))
        throw GroundError(law.loc, "action '" + l.symbol + "' not allowed in " + std::string(where));
    };
    auto fluents = [&](const std::vector<BodyItem>& its, const char* where) {
      auto lits = items(its, b, sig);
      for (const auto& l : lits) require(l, false, where);
      return lits;
    };
    switch (law.kind) {
      case LawKind::static_law: {
        StaticLaw s{id, atom(*law.head, b, sig), fluents(law.if_part, "an if-part"),
                    fluents(law.ifcons_part, "an ifcons-part")};
        require(s.head, false, "a law head");
        return s;
      }
      case LawKind::dynamic_law: {
        DynamicLaw d{id, atom(*law.head, b, sig), items(law.after_part, b, sig),
                     fluents(law.ifcons_part, "an ifcons-part")};
        require(d.head, false, "a law head");
        for (const auto& l : d.after) require(l, true, "");
        if (sig.is_defined(d.head.symbol))
          throw GroundError(law.loc, "dynamic law head '" + d.head.to_string() + "' is a defined fluent");
        return d;
      }
      case LawKind::impossible:
        return AbbreviationLaw{AbbreviationLaw::Kind::impossible, id, fluents(law.items, "an impossible law"), {}};
      case LawKind::nonexecutable: {
        auto acts = items(law.items, b, sig);
        for (const auto& l : acts) {
          require(l, true, "");
          if (!sig.is_action(l.symbol))
            throw GroundError(law.loc, "nonexecutable law lists fluent '" + l.symbol + "'");
        }
        return AbbreviationLaw{AbbreviationLaw::Kind::nonexecutable, id, acts, items(law.if_part, b, sig)};
      }
      case LawKind::inertial: {
        auto lits = fluents(law.items, "an inertial law");
        for (const auto& l : lits)
          if (sig.is_defined(l.symbol))
            throw GroundError(law.loc, "inertial law over defined fluent '" + l.symbol + "'");
        return AbbreviationLaw{AbbreviationLaw::Kind::inertial, id, lits, {}};
      }
      case LawKind::default_law: {
        Literal l = atom(*law.head, b, sig);
        require(l, false, "a default law");
        return AbbreviationLaw{AbbreviationLaw::Kind::default_law, id, {l}, {}};
      }
    }
    throw GroundError(law.loc, "unknown law kind");
  }

  const SpecFile& spec_;
  GroundOptions opts_;
  std::map<std::string, std::vector<Value>> sorts_;
};

}  // namespace detail

inline GroundResult ground(const SpecFile& spec, const GroundOptions& opts = {}) {
  return detail::Grounder(spec, opts).run();
}

inline GroundResult ground_text(std::string_view text, const GroundOptions& opts = {}) {
  return ground(parse(text), opts);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses and grounds a `.bc` file; parse errors are prefixed with the path.
inline ActionDescription load_description(const std::string& path, const GroundOptions& opts = {}) {
  std::string text = read_file(path);
  try {
    return ground_text(text, opts).desc;
  } catch (const ParseError& e) {
    throw ParseError(e.where(), path + ": " + e.diagnostic().message);
  }
}

}  // namespace bcmas
