#pragma once

// States and transitions of an action description, read off the stable
// models of P_0(D) and P_1(D), plus DOT and JSON renderings.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcmas/engine.hpp"
#include "bcmas/model.hpp"
#include "bcmas/program.hpp"

namespace bcmas {

// One literal per fluent, sorted by symbol.
using State = std::vector<Literal>;
// The actions performed.
using CompoundAction = std::set<std::string>;

struct Transition {
  State from;
  CompoundAction actions;
  State to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct TransitionSystem {
  std::vector<State> states;
  std::vector<Transition> transitions;

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
};

inline void canonicalize(State& s) {
  std::sort(s.begin(), s.end(), [](const Literal& a, const Literal& b) { return a.symbol < b.symbol; });
}

inline std::optional<bool> value_in(const State& s, const std::string& symbol) {
  auto it = std::lower_bound(s.begin(), s.end(), symbol,
                             [](const Literal& l, const std::string& n) { return l.symbol < n; });
  if (it == s.end() || it->symbol != symbol) return std::nullopt;
  return it->positive;
}

inline bool holds_in(const State& s, const Literal& l) { return value_in(s, l.symbol) == l.positive; }

// Literals given as strings; any order.
inline State make_state(const std::vector<std::string>& lits) {
  State s;
  for (const auto& t : lits) s.push_back(literal_from_string(t));
  canonicalize(s);
  return s;
}

inline std::string to_string(const State& s, bool positives_only = false) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : s) {
    if (positives_only && !l.positive) continue;
    out += (first ? "" : ", ") + l.to_string();
    first = false;
  }
  return out + "}";
}

inline std::string to_string(const CompoundAction& c) {
  std::string out = "{";
  for (const auto& a : c) out += (out.size() > 1 ? ", " : "") + a;
  return out + "}";
}

// Completes a partial state with the given polarity for every listed fluent
// it does not mention.
inline State complete(State s, const std::vector<std::string>& fluents, bool value) {
  canonicalize(s);
  const std::size_t given = s.size();
  for (const auto& f : fluents)
    if (!std::binary_search(s.begin(), s.begin() + given, Literal{f, true},
                            [](const Literal& a, const Literal& b) { return a.symbol < b.symbol; }))
      s.push_back({f, value});
  canonicalize(s);
  return s;
}

inline std::vector<CompoundAction> all_compound_actions(const std::vector<std::string>& actions,
                                                        std::optional<std::size_t> max_size = std::nullopt) {
  std::vector<CompoundAction> out;
  const std::size_t n = actions.size();
  if (n > 30) throw ResourceLimit("too many actions to enumerate compound actions");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    CompoundAction c;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) c.insert(actions[i]);
    if (!max_size || c.size() <= *max_size) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CompoundAction& a, const CompoundAction& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Answers state/transition questions about one description, translating it
// once per horizon. Queries fix atoms up front so only the relevant part of
// P_1 is searched.
class TransitionOracle {
 public:
  explicit TransitionOracle(ActionDescription desc, EngineOptions opts = {})
      : desc_(std::move(desc)), opts_(std::move(opts)), p0_(translate(desc_, 0)), p1_(translate(desc_, 1)) {
    fluents_ = desc_.signature().fluents();
    actions_ = desc_.signature().actions();
  }

  const ActionDescription& description() const { return desc_; }
  const LogicProgram& p0() const { return p0_; }
  const LogicProgram& p1() const { return p1_; }
  const std::vector<std::string>& fluents() const { return fluents_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const EngineOptions& options() const { return opts_; }

  std::vector<State> states() const {
    std::vector<State> out;
    for_each_model(p0_, opts_, [&](const Interpretation& x) {
      out.push_back(project(p0_, x, 0));
      return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // States agreeing with a partial state.
  std::vector<State> states_matching(const State& partial, std::size_t limit = 0) const {
    EngineOptions o = opts_;
    fix_state(o, p0_, partial, 0);
    std::vector<State> out;
    for_each_model(p0_, o, [&](const Interpretation& x) {
      out.push_back(project(p0_, x, 0));
      return limit == 0 || out.size() < limit;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_state(const State& s) const { return !states_matching(s, 1).empty(); }

  // Transitions whose source agrees with `from`, whose action set is `c`
  // (or any, when absent) and whose target agrees with `to`.
  std::vector<Transition> transitions_matching(const State& from, const std::optional<CompoundAction>& c,
                                               const State& to, std::size_t limit = 0) const {
    EngineOptions o = opts_;
    fix_state(o, p1_, from, 0);
    fix_state(o, p1_, to, 1);
    if (c) {
      for (const auto& a : *c)
        if (!desc_.signature().is_action(a)) throw ModelError("unknown action '" + a + "'");
      for (const auto& a : actions_) o.assumptions[p1_.at(0, pos(a))] = c->contains(a);
    }
    std::vector<Transition> out;
    for_each_model(p1_, o, [&](const Interpretation& x) {
      out.push_back(transition_of(x));
      return limit == 0 || out.size() < limit;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<State> successors(const State& s, const CompoundAction& c) const {
    std::vector<State> out;
    for (auto& t : transitions_matching(s, c, {})) out.push_back(std::move(t.to));
    return out;
  }

  bool has_transition(const State& s, const CompoundAction& c, const State& to) const {
    return !transitions_matching(s, c, to, 1).empty();
  }

  // Compound actions that have a successor from s.
  std::set<CompoundAction> executable(const State& s) const {
    std::set<CompoundAction> out;
    for (const auto& t : transitions_matching(s, std::nullopt, {})) out.insert(t.actions);
    return out;
  }

  TransitionSystem system() const {
    TransitionSystem ts;
    ts.states = states();
    for_each_model(p1_, opts_, [&](const Interpretation& x) {
      ts.transitions.push_back(transition_of(x));
      return true;
    });
    std::sort(ts.transitions.begin(), ts.transitions.end());
    ts.transitions.erase(std::unique(ts.transitions.begin(), ts.transitions.end()), ts.transitions.end());
    return ts;
  }

 private:
  static State project(const LogicProgram& p, const Interpretation& x, int time) {
    State s;
    for (auto a : x) {
      const auto& la = p.atom(a);
      if (la.time == time && !la.action) s.push_back(la.literal);
    }
    canonicalize(s);
    return s;
  }

  Transition transition_of(const Interpretation& x) const {
    Transition t{project(p1_, x, 0), {}, project(p1_, x, 1)};
    for (auto a : x) {
      const auto& la = p1_.atom(a);
      if (la.action && la.literal.positive) t.actions.insert(la.literal.symbol);
    }
    return t;
  }

  void fix_state(EngineOptions& o, const LogicProgram& p, const State& s, int time) const {
    for (const auto& l : s) {
      if (!desc_.signature().is_fluent(l.symbol)) throw ModelError("unknown fluent '" + l.symbol + "'");
      o.assumptions[p.at(time, l)] = true;
      o.assumptions[p.at(time, l.complement())] = false;
    }
  }

  ActionDescription desc_;
  EngineOptions opts_;
  LogicProgram p0_;
  LogicProgram p1_;
  std::vector<std::string> fluents_;
  std::vector<std::string> actions_;
};

inline std::vector<State> states(const ActionDescription& desc, const EngineOptions& opts = {}) {
  return TransitionOracle(desc, opts).states();
}

inline TransitionSystem transitions(const ActionDescription& desc, const EngineOptions& opts = {}) {
  return TransitionOracle(desc, opts).system();
}

struct DotOptions {
  bool show_negative = false;
  bool show_abnormal = false;
  bool show_empty_loops = false;
};

inline std::string export_dot(const TransitionSystem& ts, const Signature& sig = {}, const DotOptions& opts = {}) {
  auto hidden = [&](const Literal& l) {
    FluentRole r = sig.role(l.symbol);
    if (r == FluentRole::auxiliary) return true;
    if ((r == FluentRole::abnormal_static || r == FluentRole::abnormal_dynamic) && !opts.show_abnormal) return true;
    return !l.positive && !opts.show_negative;
  };
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::map<State, std::size_t> index;
  std::string out = "digraph transitions {\n";
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    index[ts.states[i]] = i;
    std::string label;
    for (const auto& l : ts.states[i])
      if (!hidden(l)) label += (label.empty() ? "" : "\\n") + l.to_string();
    out += "  s" + std::to_string(i) + " [label=" + quote(label) + "];\n";
  }
  for (const auto& t : ts.transitions) {
    if (t.actions.empty() && t.from == t.to && !opts.show_empty_loops) continue;
    auto f = index.find(t.from), g = index.find(t.to);
    if (f == index.end() || g == index.end()) continue;
    std::string label;
    for (const auto& a : t.actions) label += (label.empty() ? "" : ", ") + a;
    out += "  s" + std::to_string(f->second) + " -> s" + std::to_string(g->second) + " [label=" + quote(label) +
           "];\n";
  }
  return out + "}\n";
}

inline nlohmann::json system_to_json(const TransitionSystem& ts) {
  using nlohmann::json;
  std::map<State, std::size_t> index;
  json states = json::array();
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    index[ts.states[i]] = i;
    json lits = json::array();
    for (const auto& l : ts.states[i]) lits.push_back(l.to_string());
    states.push_back(lits);
  }
  json trans = json::array();
  for (const auto& t : ts.transitions) {
    auto f = index.find(t.from), g = index.find(t.to);
    if (f == index.end() || g == index.end()) throw ModelError("transition endpoint is not a state");
    trans.push_back({{"from", f->second}, {"actions", json(std::vector<std::string>(t.actions.begin(), t.actions.end()))},
                     {"to", g->second}});
  }
  return {{"states", states}, {"transitions", trans}};
}

inline std::string export_json(const TransitionSystem& ts) { return system_to_json(ts).dump(2) + "\n"; }

}  // namespace bcmas
