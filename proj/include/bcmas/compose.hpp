#pragma once

// Composition of single-agent descriptions: abnormality transformations,
// union and global descriptions, potential conflicts, covered laws, the two
// lemma checkers and the constructive conflict resolver.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcmas/engine.hpp"
#include "bcmas/model.hpp"
#include "bcmas/program.hpp"
#include "bcmas/transition.hpp"

namespace bcmas {

struct AbPolicy {
  // Key every abnormality fluent by law id instead of by head literal.
  bool per_law = false;
};

inline std::string static_ab_fluent(const std::string& key) { return "ab(" + key + ")"; }
inline std::string dynamic_ab_fluent(const std::string& key) { return "ab'(" + key + ")"; }

inline std::string static_ab_key(const StaticLaw& l, const AbPolicy& policy = {}) {
  return policy.per_law || l.id.origin == LawOrigin::impossible ? l.id.name : l.head.to_string();
}
inline std::string dynamic_ab_key(const DynamicLaw& l, const AbPolicy& policy = {}) {
  return policy.per_law || l.id.origin == LawOrigin::nonexecutable ? l.id.name : l.head.to_string();
}

inline ActionDescription tau(const ActionDescription& desc, const AbPolicy& policy = {}) {
  ActionDescription out(desc.signature());
  std::vector<std::string> introduced;
  for (const auto& law : desc.statics()) {
    if (law.auxiliary) {
      out.add(law);
      continue;
    }
    std::string ab = static_ab_fluent(static_ab_key(law, policy));
    if (std::find(introduced.begin(), introduced.end(), ab) == introduced.end()) {
      out.signature().declare_fluent(ab, SymbolKind::defined_fluent, FluentRole::abnormal_static);
      introduced.push_back(ab);
    }
    StaticLaw t = law;
    t.ifcons.push_back(neg(ab));
    out.add(std::move(t));
  }
  for (const auto& ab : introduced) out.add(StaticLaw{{ab, LawOrigin::default_law}, neg(ab), {}, {neg(ab)}});
  for (const auto& law : desc.dynamics()) out.add(law);
  return out;
}

inline ActionDescription beta(const ActionDescription& desc, const AbPolicy& policy = {}) {
  ActionDescription out(desc.signature());
  std::vector<std::string> introduced;
  for (const auto& law : desc.statics()) out.add(law);
  for (const auto& law : desc.dynamics()) {
    if (law.auxiliary) {
      out.add(law);
      continue;
    }
    std::string ab = dynamic_ab_fluent(dynamic_ab_key(law, policy));
    if (std::find(introduced.begin(), introduced.end(), ab) == introduced.end()) {
      out.signature().declare_fluent(ab, SymbolKind::regular_fluent, FluentRole::abnormal_dynamic);
      introduced.push_back(ab);
    }
    DynamicLaw t = law;
    t.ifcons.push_back(neg(ab));
    out.add(std::move(t));
  }
  for (const auto& ab : introduced) out.add(StaticLaw{{ab, LawOrigin::default_law}, neg(ab), {}, {neg(ab)}});
  return out;
}

// The ab' fluents beta adds to desc.
inline std::vector<std::string> beta_fluents(const ActionDescription& desc, const AbPolicy& policy = {}) {
  std::set<std::string> out;
  for (const auto& law : desc.dynamics())
    if (!law.auxiliary) out.insert(dynamic_ab_fluent(dynamic_ab_key(law, policy)));
  return {out.begin(), out.end()};
}

struct MasSpec {
  std::map<std::string, ActionDescription> agents;
  ActionDescription conflict;
  ActionDescription resolution;
};

inline void check_disjoint_agents(const MasSpec& spec) {
  std::map<std::string, std::string> owner;
  for (const auto& [agent, d] : spec.agents)
    for (const auto& a : d.signature().actions()) {
      auto [it, fresh] = owner.try_emplace(a, agent);
      if (!fresh)
        throw ModelError("action " + a + " belongs to both agent " + it->second + " and agent " + agent +
                         "; agent actions must be disjoint");
    }
}

namespace detail {

inline void require_known_abnormal(const ActionDescription& part, const Signature& base, const char* what) {
  for (const auto& [name, info] : part.signature().symbols()) {
    if (info.role != FluentRole::abnormal_static && info.role != FluentRole::abnormal_dynamic) continue;
    const SymbolInfo* known = base.find(name);
    if (!known || known->role != info.role)
      throw ModelError(std::string(what) + " references unknown abnormality fluent " + name);
  }
}

}  // namespace detail

// U = union of tau(D_a) over agents, plus D_c.
inline ActionDescription compose_union(const MasSpec& spec, const AbPolicy& policy = {}) {
  check_disjoint_agents(spec);
  ActionDescription u;
  for (const auto& [agent, d] : spec.agents) {
    ActionDescription t = tau(d, policy);
    for (const auto& a : d.signature().actions()) t.signature().declare_action(a, agent);
    u.absorb(t);
  }
  detail::require_known_abnormal(spec.conflict, u.signature(), "conflict component");
  u.absorb(spec.conflict);
  return u;
}

// M = beta(U) plus D_r.
inline ActionDescription compose_global(const ActionDescription& u, const ActionDescription& dr,
                                        const AbPolicy& policy = {}) {
  ActionDescription m = beta(u, policy);
  detail::require_known_abnormal(dr, m.signature(), "resolution component");
  m.absorb(dr);
  return m;
}

struct StateConflicts {
  State state;
  std::vector<CompoundAction> conflicts;
};

struct ConflictReport {
  std::vector<StateConflicts> entries;

  const StateConflicts* find(const State& s) const {
    for (const auto& e : entries)
      if (e.state == s) return &e;
    return nullptr;
  }
  bool contains(const State& s, const CompoundAction& c) const {
    const auto* e = find(s);
    return e && std::find(e->conflicts.begin(), e->conflicts.end(), c) != e->conflicts.end();
  }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.conflicts.size();
    return n;
  }
};

inline ConflictReport potential_conflicts(const TransitionSystem& ts, const std::vector<std::string>& actions,
                                          std::optional<std::size_t> max_size = std::nullopt) {
  std::map<State, std::set<CompoundAction>> done;
  for (const auto& t : ts.transitions) done[t.from].insert(t.actions);
  const auto all = all_compound_actions(actions, max_size);
  ConflictReport r;
  for (const auto& s : ts.states) {
    StateConflicts e{s, {}};
    const auto& ok = done[s];
    for (const auto& c : all)
      if (!ok.contains(c)) e.conflicts.push_back(c);
    r.entries.push_back(std::move(e));
  }
  return r;
}

inline ConflictReport potential_conflicts(const ActionDescription& desc, std::optional<std::size_t> max_size = std::nullopt,
                                          const EngineOptions& opts = {}) {
  TransitionOracle o(desc, opts);
  return potential_conflicts(o.system(), o.actions(), max_size);
}

inline nlohmann::json conflicts_to_json(const ConflictReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json lits = nlohmann::json::array(), cs = nlohmann::json::array();
    for (const auto& l : e.state) lits.push_back(l.to_string());
    for (const auto& c : e.conflicts) cs.push_back(std::vector<std::string>(c.begin(), c.end()));
    out.push_back({{"state", lits}, {"conflicts", cs}});
  }
  return {{"states", out}};
}

inline bool is_covered(const DynamicLaw& law, const CompoundAction& c, const State& s, const Signature& sig) {
  for (const auto& l : law.after) {
    if (sig.is_action(l.symbol)) {
      if (c.contains(l.symbol) != l.positive) return false;
    } else if (!holds_in(s, l)) {
      return false;
    }
  }
  return true;
}

struct PropertyReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

struct Sample {
  State state;
  CompoundAction actions;
};

struct LemmaOptions {
  AbPolicy policy;
  EngineOptions engine;
  std::uint64_t seed = 1;
  // Empty: every state of the description with every compound action.
  std::vector<Sample> samples;
  std::size_t exhaustive_limit = 4096;
  std::size_t random_extensions = 16;
};

namespace detail {

// ab' fluents whose time-0 atoms are only mentioned by rules over those two
// atoms (their choice, default and uniqueness rules). Such a fluent's initial
// value cannot influence anything else in P_1.
inline std::set<std::string> independent_fluents(const LogicProgram& p1, const std::vector<std::string>& fluents) {
  std::map<AtomId, std::string> owner;
  for (const auto& f : fluents) {
    owner[p1.at(0, pos(f))] = f;
    owner[p1.at(0, neg(f))] = f;
  }
  std::set<std::string> bad;
  for (const auto& r : p1.rules) {
    std::vector<AtomId> all = r.pos;
    all.insert(all.end(), r.naf.begin(), r.naf.end());
    all.insert(all.end(), r.nnaf.begin(), r.nnaf.end());
    if (r.head) all.push_back(*r.head);
    std::set<std::string> mentioned;
    bool foreign = false;
    for (auto a : all) {
      auto it = owner.find(a);
      if (it == owner.end())
        foreign = true;
      else
        mentioned.insert(it->second);
    }
    if (foreign || mentioned.size() > 1) bad.insert(mentioned.begin(), mentioned.end());
  }
  std::set<std::string> out;
  for (const auto& f : fluents)
    if (!bad.contains(f)) out.insert(f);
  return out;
}

inline std::vector<std::vector<bool>> assignments(std::size_t n, std::size_t exhaustive_limit, std::size_t randoms,
                                                  std::mt19937_64& rng) {
  std::vector<std::vector<bool>> out;
  if (n < 63 && (std::uint64_t{1} << n) <= exhaustive_limit) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      std::vector<bool> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (m >> i) & 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  out.emplace_back(n, false);
  out.emplace_back(n, true);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < randoms; ++k) {
    std::vector<bool> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = coin(rng);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// For each sample (s, c) and each extension s* of s over the ab' fluents of
// beta(desc) that is a state of beta(desc): c is a potential conflict at s
// in desc iff it is one at s* in beta(desc).
inline PropertyReport check_lemma1(const ActionDescription& desc, const LemmaOptions& opts = {}) {
  PropertyReport rep;
  TransitionOracle d(desc, opts.engine);
  ActionDescription bd = beta(desc, opts.policy);
  TransitionOracle b(bd, opts.engine);

  std::vector<std::string> abs;
  for (const auto& f : beta_fluents(desc, opts.policy))
    if (!desc.signature().contains(f)) abs.push_back(f);
  auto independent = detail::independent_fluents(b.p1(), abs);
  std::vector<std::string> dep, ind;
  for (const auto& f : abs) (independent.contains(f) ? ind : dep).push_back(f);

  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<Literal>> extensions;
  if (abs.size() < 63 && (std::uint64_t{1} << abs.size()) <= opts.exhaustive_limit) {
    for (const auto& v : detail::assignments(abs.size(), opts.exhaustive_limit, 0, rng)) {
      std::vector<Literal> e;
      for (std::size_t i = 0; i < abs.size(); ++i) e.push_back({abs[i], v[i]});
      extensions.push_back(std::move(e));
    }
  } else {
    auto dv = detail::assignments(dep.size(), opts.exhaustive_limit, opts.random_extensions, rng);
    auto iv = detail::assignments(ind.size(), 1, opts.random_extensions, rng);
    for (const auto& x : dv)
      for (const auto& y : iv) {
        std::vector<Literal> e;
        for (std::size_t i = 0; i < dep.size(); ++i) e.push_back({dep[i], x[i]});
        for (std::size_t i = 0; i < ind.size(); ++i) e.push_back({ind[i], y[i]});
        extensions.push_back(std::move(e));
      }
  }

  std::vector<Sample> samples = opts.samples;
  if (samples.empty())
    for (const auto& s : d.states())
      for (const auto& c : all_compound_actions(d.actions())) samples.push_back({s, c});

  std::map<State, std::set<CompoundAction>> exec_d;
  for (const auto& smp : samples) {
    if (!exec_d.contains(smp.state)) exec_d[smp.state] = d.executable(smp.state);
  }
  std::map<State, std::set<CompoundAction>> exec_b;
  std::map<State, bool> state_b;
  for (const auto& smp : samples) {
    bool conflict_d = !exec_d[smp.state].contains(smp.actions);
    for (const auto& e : extensions) {
      State star = smp.state;
      star.insert(star.end(), e.begin(), e.end());
      canonicalize(star);
      auto it = state_b.find(star);
      if (it == state_b.end()) it = state_b.emplace(star, b.is_state(star)).first;
      if (!it->second) {
        ++rep.skipped;
        continue;
      }
      auto ex = exec_b.find(star);
      if (ex == exec_b.end()) ex = exec_b.emplace(star, b.executable(star)).first;
      bool conflict_b = !ex->second.contains(smp.actions);
      ++rep.checked;
      if (conflict_b != conflict_d)
        rep.counterexamples.push_back("c = " + to_string(smp.actions) + ", s = " + to_string(smp.state) +
                                      ", s* = " + to_string(star) + ": conflict in D is " +
                                      (conflict_d ? "true" : "false") + ", in beta(D) is " +
                                      (conflict_b ? "true" : "false"));
    }
  }
  return rep;
}

// desc without the dynamic laws that c does not cover at s.
inline ActionDescription covered_part(const ActionDescription& desc, const CompoundAction& c, const State& s) {
  ActionDescription out(desc.signature());
  for (const auto& l : desc.statics()) out.add(l);
  for (const auto& l : desc.dynamics())
    if (is_covered(l, c, s, desc.signature())) out.add(l);
  return out;
}

// For each sample (s, c): the successors of s under c are the same in desc
// and in desc restricted to the laws covered by c at s.
inline PropertyReport check_lemma2(const ActionDescription& desc, const LemmaOptions& opts = {}) {
  PropertyReport rep;
  TransitionOracle d(desc, opts.engine);
  std::vector<Sample> samples = opts.samples;
  if (samples.empty())
    for (const auto& s : d.states())
      for (const auto& c : all_compound_actions(d.actions())) samples.push_back({s, c});

  std::map<std::vector<std::size_t>, std::unique_ptr<TransitionOracle>> cache;
  for (const auto& smp : samples) {
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i < desc.dynamics().size(); ++i)
      if (is_covered(desc.dynamics()[i], smp.actions, smp.state, desc.signature())) key.push_back(i);
    auto& o = cache[key];
    if (!o) o = std::make_unique<TransitionOracle>(covered_part(desc, smp.actions, smp.state), opts.engine);
    auto full = d.successors(smp.state, smp.actions);
    auto part = o->successors(smp.state, smp.actions);
    ++rep.checked;
    if (full != part) {
      std::string msg = "s = " + to_string(smp.state) + ", c = " + to_string(smp.actions) + ": " +
                        std::to_string(full.size()) + " successor(s) in D, " + std::to_string(part.size()) +
                        " with covered laws only";
      rep.counterexamples.push_back(msg);
    }
  }
  return rep;
}

struct ResolutionSet {
  CompoundAction actions;
  State state;
  State target;
  std::vector<DynamicLaw> laws;
  std::vector<Literal> d;
  // The transitions <s*, c, target + d> that were confirmed.
  std::vector<State> verified_from;

  std::string to_bc() const {
    std::string out = "% resolution of " + to_string(actions) + " at " + to_string(state, true) + "\n";
    for (const auto& l : laws) out += bcmas::to_string(l) + "\n";
    return out;
  }
};

inline nlohmann::json resolution_to_json(const ResolutionSet& r) {
  using nlohmann::json;
  auto lits = [](const std::vector<Literal>& ls) {
    json a = json::array();
    for (const auto& l : ls) a.push_back(l.to_string());
    return a;
  };
  json laws = json::array();
  for (const auto& l : r.laws) laws.push_back(to_string(l));
  json from = json::array();
  for (const auto& s : r.verified_from) from.push_back(lits(s));
  return {{"actions", std::vector<std::string>(r.actions.begin(), r.actions.end())},
          {"state", lits(r.state)},
          {"target", lits(r.target)},
          {"laws", laws},
          {"d", lits(r.d)},
          {"verified_from", from}};
}

struct ResolveOptions {
  AbPolicy policy;
  EngineOptions engine;
};

// Builds R and d for the potential conflict c at s with intended successor
// target, and confirms the transition in beta(desc) + R from the all-false
// and the all-true ab' extensions of s.
inline ResolutionSet auto_resolve(const ActionDescription& desc, const CompoundAction& c, const State& s,
                                  const State& target, const ResolveOptions& opts = {}) {
  const Signature& sig = desc.signature();
  TransitionOracle d(desc, opts.engine);
  if (!d.is_state(s)) throw ModelError("not a state: " + to_string(s));
  if (!d.is_state(target)) throw ModelError("target is not a state: " + to_string(target));
  if (s.size() != d.fluents().size() || target.size() != d.fluents().size())
    throw ModelError("states must assign every fluent");
  if (d.has_transition(s, c, {}))
    throw ModelError(to_string(c) + " is not a potential conflict at " + to_string(s, true));

  ResolutionSet r{c, s, target, {}, {}, {}};
  std::vector<Literal> body;
  for (const auto& a : d.actions()) body.push_back({a, c.contains(a)});
  for (const auto& l : s)
    if (sig.role(l.symbol) != FluentRole::auxiliary) body.push_back(l);

  std::set<std::string> defeated;
  for (const auto& law : desc.dynamics()) {
    if (law.auxiliary || !is_covered(law, c, s, sig)) continue;
    std::string ab = dynamic_ab_fluent(dynamic_ab_key(law, opts.policy));
    if (defeated.insert(ab).second) r.laws.push_back({{"defeat:" + ab, LawOrigin::core}, pos(ab), body, {}});
  }
  for (const auto& l : target)
    if (sig.is_regular(l.symbol) && sig.role(l.symbol) != FluentRole::auxiliary)
      r.laws.push_back({{"cause:" + l.to_string(), LawOrigin::core}, l, body, {}});

  ActionDescription m = beta(desc, opts.policy);
  std::vector<std::string> abs;
  for (const auto& f : beta_fluents(desc, opts.policy))
    if (!sig.contains(f)) abs.push_back(f);
  for (const auto& f : abs) r.d.push_back({f, defeated.contains(f)});
  for (const auto& l : r.laws) m.add(l);

  TransitionOracle mo(m, opts.engine);
  State to = target;
  to.insert(to.end(), r.d.begin(), r.d.end());
  canonicalize(to);
  std::string failures;
  for (bool v : {false, true}) {
    State star = complete(s, abs, v);
    if (!mo.is_state(star)) continue;
    if (mo.has_transition(star, c, to))
      r.verified_from.push_back(star);
    else
      failures += " <" + to_string(star, true) + ", " + to_string(c) + ", " + to_string(to, true) + ">";
  }
  if (r.verified_from.empty() || !failures.empty())
    throw ModelError("resolution could not be verified; missing transition(s):" + failures);
  return r;
}

}  // namespace bcmas
