#pragma once

// Signature, literals, static/dynamic laws and action descriptions of the
// Boolean action language, plus expansion of the abbreviation laws
// (impossible, nonexecutable, inertial, default) into core laws.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bcmas/error.hpp"

namespace bcmas {

enum class SymbolKind : std::uint8_t { regular_fluent, defined_fluent, action };

// Where a fluent came from. Only `domain` fluents are written by modelers;
// the others are introduced by abbreviation expansion (auxiliary) or by the
// abnormality transformations.
enum class FluentRole : std::uint8_t {
  domain,
  auxiliary,
  abnormal_static,
  abnormal_dynamic
};

struct Literal {
  std::string symbol;
  bool positive = true;

  Literal complement() const { return {symbol, !positive}; }
  std::string to_string() const { return positive ? symbol : "-" + symbol; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(std::string s) { return {std::move(s), true}; }
inline Literal neg(std::string s) { return {std::move(s), false}; }

// Accepts "f", "-f", "~f" and "¬f"; surrounding blanks are ignored.
inline Literal literal_from_string(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  bool positive = true;
  if (text.starts_with("-") || text.starts_with("~")) {
    positive = false;
    text.remove_prefix(1);
  } else if (text.starts_with("\xC2\xAC")) {
    positive = false;
    text.remove_prefix(2);
  }
  text = trim(text);
  if (text.empty()) throw ModelError("empty literal");
  return {std::string(text), positive};
}

// Splits "a(1,2), -b, c" at top-level commas.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.push_back(cur);
  std::erase_if(out, [](const std::string& s) {
    return s.find_first_not_of(" \t{}") == std::string::npos;
  });
  for (auto& s : out) {
    auto b = s.find_first_not_of(" \t{");
    auto e = s.find_last_not_of(" \t}");
    s = s.substr(b, e - b + 1);
  }
  return out;
}

struct SymbolInfo {
  SymbolKind kind = SymbolKind::regular_fluent;
  FluentRole role = FluentRole::domain;

  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

class Signature {
 public:
  void declare_fluent(const std::string& name, SymbolKind kind,
                      FluentRole role = FluentRole::domain) {
    if (kind == SymbolKind::action) throw ModelError("fluent declared with action kind: " + name);
    auto [it, fresh] = symbols_.try_emplace(name, SymbolInfo{kind, role});
    if (fresh) return;
    if (it->second.kind == SymbolKind::action)
      throw ModelError("symbol '" + name + "' declared both as action and fluent");
    if (it->second.kind != kind)
      throw ModelError("fluent '" + name + "' declared both regular and defined");
    if (it->second.role == FluentRole::domain) it->second.role = role;
  }

  void declare_action(const std::string& name,
                      const std::optional<std::string>& agent = std::nullopt) {
    auto [it, fresh] = symbols_.try_emplace(name, SymbolInfo{SymbolKind::action, FluentRole::domain});
    if (!fresh && it->second.kind != SymbolKind::action)
      throw ModelError("symbol '" + name + "' declared both as action and fluent");
    if (agent) owners_[name].insert(*agent);
  }

  void merge(const Signature& other) {
    for (const auto& [name, info] : other.symbols_) {
      if (info.kind == SymbolKind::action)
        declare_action(name);
      else
        declare_fluent(name, info.kind, info.role);
    }
    for (const auto& [name, agents] : other.owners_) owners_[name].insert(agents.begin(), agents.end());
  }

  const SymbolInfo* find(const std::string& name) const {
    auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
  }
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  bool is_action(const std::string& name) const {
    auto* i = find(name);
    return i && i->kind == SymbolKind::action;
  }
  bool is_fluent(const std::string& name) const {
    auto* i = find(name);
    return i && i->kind != SymbolKind::action;
  }
  bool is_regular(const std::string& name) const {
    auto* i = find(name);
    return i && i->kind == SymbolKind::regular_fluent;
  }
  bool is_defined(const std::string& name) const {
    auto* i = find(name);
    return i && i->kind == SymbolKind::defined_fluent;
  }
  FluentRole role(const std::string& name) const {
    auto* i = find(name);
    return i ? i->role : FluentRole::domain;
  }

  std::vector<std::string> fluents() const { return select([](const SymbolInfo& i) { return i.kind != SymbolKind::action; }); }
  std::vector<std::string> regular_fluents() const { return select([](const SymbolInfo& i) { return i.kind == SymbolKind::regular_fluent; }); }
  std::vector<std::string> actions() const { return select([](const SymbolInfo& i) { return i.kind == SymbolKind::action; }); }
  std::vector<std::string> fluents_with_role(FluentRole r) const {
    return select([r](const SymbolInfo& i) { return i.kind != SymbolKind::action && i.role == r; });
  }

  // The owning agent, when exactly one agent claims the action.
  std::optional<std::string> agent_of(const std::string& action) const {
    auto it = owners_.find(action);
    if (it == owners_.end() || it->second.size() != 1) return std::nullopt;
    return *it->second.begin();
  }
  const std::map<std::string, std::set<std::string>>& action_owners() const { return owners_; }

  const std::map<std::string, SymbolInfo>& symbols() const { return symbols_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  template <class Pred>
  std::vector<std::string> select(Pred pred) const {
    std::vector<std::string> out;
    for (const auto& [name, info] : symbols_)
      if (pred(info)) out.push_back(name);
    return out;
  }

  std::map<std::string, SymbolInfo> symbols_;
  std::map<std::string, std::set<std::string>> owners_;
};

enum class LawOrigin : std::uint8_t { core, inertial, default_law, nonexecutable, impossible };

// Identifies a law, or the group of core laws one abbreviation expands into.
struct LawId {
  std::string name;
  LawOrigin origin = LawOrigin::core;

  friend auto operator<=>(const LawId&, const LawId&) = default;
};

struct StaticLaw {
  LawId id;
  Literal head;
  std::vector<Literal> if_part;
  std::vector<Literal> ifcons;
  // Pins an auxiliary fluent; ignored by the abnormality transformations.
  bool auxiliary = false;

  friend bool operator==(const StaticLaw&, const StaticLaw&) = default;
};

struct DynamicLaw {
  LawId id;
  Literal head;
  std::vector<Literal> after;
  std::vector<Literal> ifcons;
  bool auxiliary = false;

  friend bool operator==(const DynamicLaw&, const DynamicLaw&) = default;
};

struct AbbreviationLaw {
  enum class Kind : std::uint8_t { impossible, nonexecutable, inertial, default_law };

  Kind kind = Kind::inertial;
  LawId id;
  // impossible: the forbidden conjunction; nonexecutable: the action
  // literals; inertial: the fluents; default: exactly one literal.
  std::vector<Literal> literals;
  // nonexecutable only: the "if" condition.
  std::vector<Literal> condition;

  friend bool operator==(const AbbreviationLaw&, const AbbreviationLaw&) = default;
};

using Law = std::variant<StaticLaw, DynamicLaw, AbbreviationLaw>;

namespace detail {

inline std::string join_literals(const std::vector<Literal>& lits, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) out += sep;
    out += lits[i].to_string();
  }
  return out;
}

inline std::string sorted_key(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return join_literals(lits, ",");
}

inline std::string law_key(const StaticLaw& l) {
  return std::string(l.auxiliary ? "S*|" : "S|") + l.head.to_string() + "|" +
         sorted_key(l.if_part) + "|" + sorted_key(l.ifcons);
}

inline std::string law_key(const DynamicLaw& l) {
  return std::string(l.auxiliary ? "D*|" : "D|") + l.head.to_string() + "|" +
         sorted_key(l.after) + "|" + sorted_key(l.ifcons);
}

}  // namespace detail

inline std::string to_string(const StaticLaw& l) {
  std::string s = l.head.to_string();
  if (!l.if_part.empty()) s += " if " + detail::join_literals(l.if_part);
  if (!l.ifcons.empty()) s += " ifcons " + detail::join_literals(l.ifcons);
  return s + ".";
}

inline std::string to_string(const DynamicLaw& l) {
  std::string s = l.head.to_string() + " after";
  if (!l.after.empty()) s += " " + detail::join_literals(l.after);
  if (!l.ifcons.empty()) s += " ifcons " + detail::join_literals(l.ifcons);
  return s + ".";
}

// Structural equality: same kind, head and literal sets (ids are ignored).
inline bool same_structure(const StaticLaw& a, const StaticLaw& b) {
  return detail::law_key(a) == detail::law_key(b);
}
inline bool same_structure(const DynamicLaw& a, const DynamicLaw& b) {
  return detail::law_key(a) == detail::law_key(b);
}

// A finite set of ground static and dynamic laws over a signature. Laws keep
// insertion order; structurally equal duplicates are dropped on insertion.
class ActionDescription {
 public:
  ActionDescription() = default;
  explicit ActionDescription(Signature sig) : sig_(std::move(sig)) {}

  const Signature& signature() const { return sig_; }
  Signature& signature() { return sig_; }

  const std::vector<StaticLaw>& statics() const { return statics_; }
  const std::vector<DynamicLaw>& dynamics() const { return dynamics_; }

  // Returns false when a structurally equal law is already present.
  bool add(StaticLaw law) {
    require_fluent(law.head, "static law head");
    for (const auto& l : law.if_part) require_fluent(l, "static law if-part");
    for (const auto& l : law.ifcons) require_fluent(l, "static law ifcons-part");
    if (!keys_.insert(detail::law_key(law)).second) return false;
    statics_.push_back(std::move(law));
    return true;
  }

  bool add(DynamicLaw law) {
    require_fluent(law.head, "dynamic law head");
    for (const auto& l : law.after)
      if (!sig_.contains(l.symbol)) throw ModelError("undeclared symbol '" + l.symbol + "' in dynamic law after-part");
    for (const auto& l : law.ifcons) require_fluent(l, "dynamic law ifcons-part");
    if (!keys_.insert(detail::law_key(law)).second) return false;
    dynamics_.push_back(std::move(law));
    return true;
  }

  // Union of two descriptions; signatures are merged (conflicting
  // declarations throw ModelError).
  void absorb(const ActionDescription& other) {
    sig_.merge(other.sig_);
    for (const auto& l : other.statics_) add(l);
    for (const auto& l : other.dynamics_) add(l);
  }

  std::size_t size() const { return statics_.size() + dynamics_.size(); }

  std::string to_string() const {
    std::string out;
    for (const auto& l : statics_) out += bcmas::to_string(l) + "\n";
    for (const auto& l : dynamics_) out += bcmas::to_string(l) + "\n";
    return out;
  }

  friend bool operator==(const ActionDescription& a, const ActionDescription& b) {
    return a.sig_ == b.sig_ && a.statics_ == b.statics_ && a.dynamics_ == b.dynamics_;
  }

 private:
  void require_fluent(const Literal& l, const char* where) const {
    if (!sig_.contains(l.symbol)) throw ModelError(std::string("undeclared symbol '") + l.symbol + "' in " + where);
    if (!sig_.is_fluent(l.symbol)) throw ModelError(std::string("action '") + l.symbol + "' used in " + where);
  }

  Signature sig_;
  std::vector<StaticLaw> statics_;
  std::vector<DynamicLaw> dynamics_;
  std::set<std::string> keys_;
};

// Fresh fluent names are pure functions of the law id.
inline std::string nonexecutable_fluent(const LawId& id) { return "nx(" + id.name + ")"; }
inline std::string impossible_fluent(const LawId& id) { return "im(" + id.name + ")"; }

inline ActionDescription expand_abbreviations(std::span<const Law> laws, Signature sig) {
  // Fresh symbols first, so that every law below only mentions declared ones.
  for (const auto& law : laws) {
    const auto* ab = std::get_if<AbbreviationLaw>(&law);
    if (!ab) continue;
    if (ab->kind == AbbreviationLaw::Kind::nonexecutable)
      sig.declare_fluent(nonexecutable_fluent(ab->id), SymbolKind::regular_fluent, FluentRole::auxiliary);
    else if (ab->kind == AbbreviationLaw::Kind::impossible)
      sig.declare_fluent(impossible_fluent(ab->id), SymbolKind::defined_fluent, FluentRole::auxiliary);
  }

  ActionDescription desc(std::move(sig));
  const Signature& s = desc.signature();
  auto check_declared = [&](const Literal& l) {
    if (!s.contains(l.symbol)) throw ModelError("undeclared symbol '" + l.symbol + "'");
  };

  for (const auto& law : laws) {
    if (const auto* st = std::get_if<StaticLaw>(&law)) {
      desc.add(*st);
    } else if (const auto* dy = std::get_if<DynamicLaw>(&law)) {
      check_declared(dy->head);
      if (s.is_defined(dy->head.symbol))
        throw ModelError("dynamic law head '" + dy->head.to_string() + "' is a defined fluent");
      desc.add(*dy);
    } else {
      const auto& ab = std::get<AbbreviationLaw>(law);
      for (const auto& l : ab.literals) check_declared(l);
      for (const auto& l : ab.condition) check_declared(l);
      LawId id = ab.id;
      switch (ab.kind) {
        case AbbreviationLaw::Kind::inertial:
          id.origin = LawOrigin::inertial;
          for (const auto& l : ab.literals) {
            if (!s.is_fluent(l.symbol)) throw ModelError("inertial law over non-fluent '" + l.symbol + "'");
            if (s.is_defined(l.symbol))
              throw ModelError("inertial law over defined fluent '" + l.symbol + "'");
            Literal f = pos(l.symbol);
            desc.add(DynamicLaw{id, f, {f}, {f}});
            desc.add(DynamicLaw{id, f.complement(), {f.complement()}, {f.complement()}});
          }
          break;
        case AbbreviationLaw::Kind::default_law:
          id.origin = LawOrigin::default_law;
          if (ab.literals.size() != 1) throw ModelError("default law needs exactly one literal");
          desc.add(StaticLaw{id, ab.literals[0], {}, {ab.literals[0]}});
          break;
        case AbbreviationLaw::Kind::nonexecutable: {
          id.origin = LawOrigin::nonexecutable;
          for (const auto& l : ab.literals)
            if (!s.is_action(l.symbol)) throw ModelError("nonexecutable law over non-action '" + l.symbol + "'");
          std::vector<Literal> body = ab.literals;
          body.insert(body.end(), ab.condition.begin(), ab.condition.end());
          Literal fresh = pos(nonexecutable_fluent(id));
          desc.add(DynamicLaw{id, fresh, body, {}});
          desc.add(DynamicLaw{id, fresh.complement(), body, {}});
          desc.add(StaticLaw{id, fresh.complement(), {}, {}, true});
          break;
        }
        case AbbreviationLaw::Kind::impossible: {
          id.origin = LawOrigin::impossible;
          for (const auto& l : ab.literals)
            if (!s.is_fluent(l.symbol)) throw ModelError("impossible law over non-fluent '" + l.symbol + "'");
          Literal fresh = pos(impossible_fluent(id));
          desc.add(StaticLaw{id, fresh, ab.literals, {}});
          desc.add(StaticLaw{id, fresh.complement(), ab.literals, {}});
          desc.add(StaticLaw{id, fresh.complement(), {}, {}, true});
          break;
        }
      }
    }
  }
  return desc;
}

inline std::vector<Diagnostic> validate(const ActionDescription& desc) {
  std::vector<Diagnostic> out;
  const Signature& sig = desc.signature();
  for (const auto& l : desc.dynamics())
    if (sig.is_defined(l.head.symbol))
      out.push_back({Severity::error, std::nullopt,
                     "dynamic law '" + to_string(l) + "' has defined fluent head " + l.head.symbol});
  std::set<std::string> static_heads;
  for (const auto& l : desc.statics()) static_heads.insert(l.head.symbol);
  for (const auto& f : sig.fluents())
    if (sig.is_defined(f) && !static_heads.contains(f))
      out.push_back({Severity::warning, std::nullopt,
                     "defined fluent " + f + " is the head of no static law; no stable model can assign it"});
  for (const auto& [action, agents] : sig.action_owners())
    if (agents.size() > 1) {
      std::string who;
      for (const auto& a : agents) who += (who.empty() ? "" : ", ") + a;
      out.push_back({Severity::error, std::nullopt,
                     "action " + action + " is shared by agents {" + who + "}; agent actions must be disjoint"});
    }
  return out;
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

}  // namespace bcmas
