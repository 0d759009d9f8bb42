#pragma once

// Logic programs with default and double default negation, and the
// translation of an action description into the program P_l(D) whose stable
// models are the paths of length l.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcmas/error.hpp"
#include "bcmas/model.hpp"

namespace bcmas {

using AtomId = std::uint32_t;

struct LabeledAtom {
  int time = 0;
  Literal literal;
  bool action = false;

  std::string to_string() const { return std::to_string(time) + ":" + literal.to_string(); }
  friend auto operator<=>(const LabeledAtom&, const LabeledAtom&) = default;
};

struct Rule {
  std::optional<AtomId> head;  // empty for constraints
  std::vector<AtomId> pos;
  std::vector<AtomId> naf;
  std::vector<AtomId> nnaf;

  bool is_constraint() const { return !head.has_value(); }
  bool is_positive() const { return naf.empty() && nnaf.empty(); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

class LogicProgram {
 public:
  int horizon = 0;
  std::vector<Rule> rules;
  std::vector<std::pair<AtomId, AtomId>> exactly_one_groups;

  AtomId add_atom(const LabeledAtom& a) {
    auto key = a.to_string();
    auto [it, fresh] = index_.try_emplace(key, static_cast<AtomId>(atoms_.size()));
    if (fresh) atoms_.push_back(a);
    return it->second;
  }
  // Plain propositional atom, for programs not built by translate().
  AtomId add_atom(const std::string& name) { return add_atom(LabeledAtom{0, pos(name), false}); }

  std::optional<AtomId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<AtomId> find(int time, const Literal& l) const {
    return find(std::to_string(time) + ":" + l.to_string());
  }
  AtomId at(int time, const Literal& l) const {
    auto id = find(time, l);
    if (!id) throw ModelError("atom " + std::to_string(time) + ":" + l.to_string() + " not in program");
    return *id;
  }

  const std::vector<LabeledAtom>& atoms() const { return atoms_; }
  const LabeledAtom& atom(AtomId id) const { return atoms_.at(id); }
  std::string name(AtomId id) const {
    const auto& a = atoms_.at(id);
    // Plain atoms print without the time label.
    return (a.time == 0 && !a.action && raw_) ? a.literal.to_string() : a.to_string();
  }
  std::size_t size() const { return atoms_.size(); }

  void set_raw(bool raw) { raw_ = raw; }
  bool raw() const { return raw_; }

 private:
  std::vector<LabeledAtom> atoms_;
  std::map<std::string, AtomId> index_;
  bool raw_ = false;
};

// P_l(D). Atom order: by time, then fluents (positive before negative, in
// symbol order), then actions.
inline LogicProgram translate(const ActionDescription& desc, int horizon) {
  if (horizon < 0) throw ModelError("negative horizon " + std::to_string(horizon));
  const Signature& sig = desc.signature();
  const auto fluents = sig.fluents();
  const auto actions = sig.actions();

  LogicProgram p;
  p.horizon = horizon;
  for (int i = 0; i <= horizon; ++i) {
    for (const auto& f : fluents) {
      p.add_atom({i, pos(f), false});
      p.add_atom({i, neg(f), false});
    }
    if (i < horizon)
      for (const auto& a : actions) {
        p.add_atom({i, pos(a), true});
        p.add_atom({i, neg(a), true});
      }
  }
  auto at = [&](int i, const Literal& l) { return p.at(i, l); };

  for (const auto& law : desc.statics())
    for (int i = 0; i <= horizon; ++i) {
      Rule r{at(i, law.head), {}, {}, {}};
      for (const auto& l : law.if_part) r.pos.push_back(at(i, l));
      for (const auto& l : law.ifcons) r.nnaf.push_back(at(i, l));
      p.rules.push_back(std::move(r));
    }
  for (const auto& law : desc.dynamics())
    for (int i = 0; i < horizon; ++i) {
      Rule r{at(i + 1, law.head), {}, {}, {}};
      for (const auto& l : law.after) r.pos.push_back(at(i, l));
      for (const auto& l : law.ifcons) r.nnaf.push_back(at(i + 1, l));
      p.rules.push_back(std::move(r));
    }
  for (const auto& f : sig.regular_fluents())
    for (const auto& l : {pos(f), neg(f)}) p.rules.push_back({at(0, l), {}, {}, {at(0, l)}});
  for (int i = 0; i < horizon; ++i)
    for (const auto& a : actions) p.rules.push_back({at(i, pos(a)), {}, {}, {at(i, pos(a))}});
  for (int i = 0; i <= horizon; ++i)
    for (const auto& f : fluents) {
      AtomId t = at(i, pos(f)), n = at(i, neg(f));
      p.exactly_one_groups.emplace_back(t, n);
      p.rules.push_back({std::nullopt, {t, n}, {}, {}});
      p.rules.push_back({std::nullopt, {}, {t, n}, {}});
    }
  for (int i = 0; i < horizon; ++i)
    for (const auto& a : actions) p.rules.push_back({at(i, neg(a)), {}, {at(i, pos(a))}, {}});
  return p;
}

inline std::string rule_to_string(const LogicProgram& p, const Rule& r) {
  std::string s = r.head ? p.name(*r.head) : "";
  std::vector<std::string> body;
  for (auto a : r.pos) body.push_back(p.name(a));
  for (auto a : r.naf) body.push_back("not " + p.name(a));
  for (auto a : r.nnaf) body.push_back("not not " + p.name(a));
  if (!body.empty()) {
    s += r.head ? " :- " : ":- ";
    for (std::size_t i = 0; i < body.size(); ++i) s += (i ? ", " : "") + body[i];
  }
  return s + ".";
}

inline std::string emit_text(const LogicProgram& p) {
  std::string out = "% logic program (horizon " + std::to_string(p.horizon) + ", " +
                    std::to_string(p.rules.size()) + " rules)\n";
  for (const auto& r : p.rules) out += rule_to_string(p, r) + "\n";
  return out;
}

inline nlohmann::json program_to_json(const LogicProgram& p) {
  using nlohmann::json;
  json atoms = json::array();
  for (AtomId i = 0; i < p.size(); ++i) atoms.push_back(p.name(i));
  json rules = json::array();
  auto names = [&](const std::vector<AtomId>& ids) {
    json a = json::array();
    for (auto id : ids) a.push_back(p.name(id));
    return a;
  };
  for (const auto& r : p.rules)
    rules.push_back({{"head", r.head ? json(p.name(*r.head)) : json(nullptr)},
                     {"pos", names(r.pos)},
                     {"not", names(r.naf)},
                     {"not_not", names(r.nnaf)}});
  json groups = json::array();
  for (auto [a, b] : p.exactly_one_groups) groups.push_back({p.name(a), p.name(b)});
  return {{"horizon", p.horizon}, {"atoms", atoms}, {"rules", rules}, {"exactly_one", groups}};
}

}  // namespace bcmas
