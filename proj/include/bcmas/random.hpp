#pragma once

// Seeded generators of small descriptions and programs for property tests.

#include <random>
#include <string>
#include <vector>

#include "bcmas/model.hpp"
#include "bcmas/program.hpp"

namespace bcmas {

struct RandomDescriptionOptions {
  int max_fluents = 3;
  int max_actions = 2;
  int max_laws = 6;  // besides inertia
};

// Regular fluents f0.., actions a0..; every fluent is inertial.
inline ActionDescription random_description(std::mt19937_64& rng, const RandomDescriptionOptions& o = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&](double p = 0.5) { return std::bernoulli_distribution(p)(rng); };

  const int nf = pick(1, o.max_fluents), na = pick(1, o.max_actions);
  Signature sig;
  std::vector<std::string> fl, ac;
  for (int i = 0; i < nf; ++i) {
    fl.push_back("f" + std::to_string(i));
    sig.declare_fluent(fl.back(), SymbolKind::regular_fluent);
  }
  for (int i = 0; i < na; ++i) {
    ac.push_back("a" + std::to_string(i));
    sig.declare_action(ac.back());
  }
  auto fluent_lit = [&] { return Literal{fl[pick(0, nf - 1)], coin()}; };
  auto fluent_lits = [&](int max) {
    std::vector<Literal> v;
    for (int k = pick(0, max); k > 0; --k) v.push_back(fluent_lit());
    return v;
  };
  auto action_lit = [&](double positive) { return Literal{ac[pick(0, na - 1)], coin(positive)}; };

  std::vector<Law> laws;
  laws.push_back(AbbreviationLaw{AbbreviationLaw::Kind::inertial, {"inertia", LawOrigin::core},
                                 std::vector<Literal>(), {}});
  for (const auto& f : fl) std::get<AbbreviationLaw>(laws.back()).literals.push_back(pos(f));

  const int n = pick(0, o.max_laws);
  for (int i = 0; i < n; ++i) {
    LawId id{"g" + std::to_string(i), LawOrigin::core};
    switch (pick(0, 5)) {
      case 0:
      case 1: {
        StaticLaw s{id, fluent_lit(), fluent_lits(2), {}};
        if (coin(0.25)) s.ifcons.push_back(fluent_lit());
        laws.push_back(s);
        break;
      }
      case 2:
      case 3: {
        DynamicLaw d{id, fluent_lit(), {}, {}};
        d.after.push_back(action_lit(0.8));
        for (auto& l : fluent_lits(1)) d.after.push_back(l);
        if (coin(0.3)) d.after.push_back(action_lit(0.5));
        if (coin(0.25)) d.ifcons.push_back(fluent_lit());
        laws.push_back(d);
        break;
      }
      case 4: {
        AbbreviationLaw a{AbbreviationLaw::Kind::nonexecutable, id, {pos(ac[pick(0, na - 1)])}, fluent_lits(1)};
        if (na > 1 && coin(0.3)) a.literals.push_back(pos(ac[pick(0, na - 1)]));
        laws.push_back(a);
        break;
      }
      default: {
        auto body = fluent_lits(2);
        if (body.empty()) body.push_back(fluent_lit());
        laws.push_back(AbbreviationLaw{AbbreviationLaw::Kind::impossible, id, body, {}});
        break;
      }
    }
  }
  return expand_abbreviations(laws, sig);
}

struct RandomProgramOptions {
  int max_atoms = 16;
  int max_rules = 24;
};

// Arbitrary normal rules with `not`, `not not` and constraints.
inline LogicProgram random_program(std::mt19937_64& rng, const RandomProgramOptions& o = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  LogicProgram p;
  p.set_raw(true);
  const int n = pick(1, o.max_atoms);
  for (int i = 0; i < n; ++i) p.add_atom("p" + std::to_string(i));
  auto atom = [&] { return static_cast<AtomId>(pick(0, n - 1)); };
  const int m = pick(0, o.max_rules);
  for (int i = 0; i < m; ++i) {
    Rule r;
    if (pick(0, 5) != 0) r.head = atom();
    for (int k = pick(0, 2); k > 0; --k) r.pos.push_back(atom());
    for (int k = pick(0, 2); k > 0; --k) r.naf.push_back(atom());
    if (pick(0, 3) == 0) r.nnaf.push_back(r.head && pick(0, 1) ? *r.head : atom());
    p.rules.push_back(std::move(r));
  }
  return p;
}

}  // namespace bcmas
