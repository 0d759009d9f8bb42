#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bcmas/bcmas.hpp"

#ifndef BCMAS_CORPUS_DIR
#define BCMAS_CORPUS_DIR "corpus"
#endif

namespace bcmas::test {

inline std::string corpus(const std::string& name) { return std::string(BCMAS_CORPUS_DIR) + "/" + name; }

inline ActionDescription load(const std::string& name) { return load_description(corpus(name)); }

inline ActionDescription stage(const std::string& manifest, Stage st, AbPolicy policy = {}) {
  return build_stage(load_manifest(corpus(manifest)), st, policy);
}

// Positive domain literals of a state (no auxiliary or abnormality fluents).
inline std::vector<std::string> domain_positives(const State& s, const Signature& sig) {
  std::vector<std::string> out;
  for (const auto& l : s)
    if (l.positive && sig.role(l.symbol) == FluentRole::domain) out.push_back(l.symbol);
  return out;
}

inline bool aux_all_false(const State& s, const Signature& sig) {
  return std::all_of(s.begin(), s.end(), [&](const Literal& l) {
    return sig.role(l.symbol) != FluentRole::auxiliary || !l.positive;
  });
}

// The state of `desc` whose positive domain literals are exactly `positives`.
inline std::vector<State> find_states(const std::vector<State>& states, const Signature& sig,
                                      std::vector<std::string> positives) {
  std::sort(positives.begin(), positives.end());
  std::vector<State> out;
  for (const auto& s : states) {
    auto p = domain_positives(s, sig);
    std::sort(p.begin(), p.end());
    if (p == positives) out.push_back(s);
  }
  return out;
}

// Reads export_json output back; only used to check the round trip.
inline TransitionSystem system_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  TransitionSystem ts;
  for (const auto& s : j.at("states")) ts.states.push_back(make_state(s.get<std::vector<std::string>>()));
  for (const auto& t : j.at("transitions")) {
    auto acts = t.at("actions").get<std::vector<std::string>>();
    ts.transitions.push_back({ts.states.at(t.at("from").get<std::size_t>()), CompoundAction(acts.begin(), acts.end()),
                              ts.states.at(t.at("to").get<std::size_t>())});
  }
  return ts;
}

// Naive oracle: all subsets filtered by is_stable.
inline ModelSet brute_force_models(const LogicProgram& p) {
  EngineOptions o;
  o.naive = true;
  return enumerate(p, o);
}

}  // namespace bcmas::test
