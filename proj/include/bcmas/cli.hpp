#pragma once

// Command-line front end. `run` returns the exit code: 0 success, 1 domain
// error (bad input, failed check, resource limit), 2 usage error.

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcmas/compose.hpp"
#include "bcmas/engine.hpp"
#include "bcmas/grounder.hpp"
#include "bcmas/manifest.hpp"
#include "bcmas/model.hpp"
#include "bcmas/program.hpp"
#include "bcmas/transition.hpp"

namespace bcmas::cli {

struct Config {
  std::string input;
  std::string manifest;
  std::string stage;
  int horizon = 0;
  bool json = false;
  bool dot = false;
  bool naive = false;
  bool ab_per_law = false;
  bool all_loops = false;
  bool negatives = false;
  std::optional<std::size_t> max_size;
  std::optional<std::uint64_t> max_candidates;
  std::string action_set;
  std::string state;
  std::string target;
  int lemma = 0;
  std::uint64_t seed = 1;
};

namespace detail {

inline ActionDescription load_input(const Config& cfg) {
  if (!cfg.manifest.empty()) {
    Manifest m = load_manifest(cfg.manifest);
    std::optional<Stage> st;
    if (cfg.stage == "union") st = Stage::union_stage;
    if (cfg.stage == "global") st = Stage::global_stage;
    return build_stage(m, st, AbPolicy{cfg.ab_per_law});
  }
  if (cfg.input.empty()) throw CLI::ValidationError("input", "a .bc file or --manifest is required");
  return load_description(cfg.input);
}

inline EngineOptions engine_options(const Config& cfg) {
  EngineOptions o;
  o.max_candidates = cfg.max_candidates.value_or(max_candidates_from_env());
  o.naive = cfg.naive;
  return o;
}

inline CompoundAction parse_actions(const std::string& text, const Signature& sig) {
  CompoundAction c;
  for (const auto& a : split_top_level(text)) {
    if (!sig.is_action(a)) throw ModelError("unknown action '" + a + "'");
    c.insert(a);
  }
  return c;
}

// Unmentioned fluents are taken false.
inline State parse_state(const std::string& text, const Signature& sig) {
  State s;
  for (const auto& t : split_top_level(text)) {
    Literal l = literal_from_string(t);
    if (!sig.is_fluent(l.symbol)) throw ModelError("unknown fluent '" + l.symbol + "'");
    s.push_back(l);
  }
  canonicalize(s);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].symbol == s[i - 1].symbol) throw ModelError("fluent " + s[i].symbol + " given twice");
  return complete(s, sig.fluents(), false);
}

// Positive literals, without auxiliary fluents.
inline std::string show(const State& s, const Signature& sig) {
  std::string out = "{";
  for (const auto& l : s) {
    if (!l.positive || sig.role(l.symbol) == FluentRole::auxiliary) continue;
    out += (out.size() > 1 ? ", " : "") + l.symbol;
  }
  return out + "}";
}

inline int cmd_check(const Config& cfg, std::ostream& out) {
  ActionDescription d = load_input(cfg);
  auto diags = validate(d);
  for (const auto& x : diags) out << x.to_string() << "\n";
  out << d.statics().size() << " static law(s), " << d.dynamics().size() << " dynamic law(s), "
      << d.signature().fluents().size() << " fluent(s), " << d.signature().actions().size() << " action(s)\n";
  return has_errors(diags) ? 1 : 0;
}

inline int cmd_ground(const Config& cfg, std::ostream& out) {
  if (!cfg.manifest.empty()) {
    out << load_input(cfg).to_string();
    return 0;
  }
  auto r = ground_text(read_file(cfg.input));
  out << "% " << r.stats.schematic_laws << " schematic law(s), " << r.stats.ground_laws << " ground instance(s), "
      << r.stats.eliminated << " eliminated\n";
  out << r.desc.to_string();
  return 0;
}

inline int cmd_translate(const Config& cfg, std::ostream& out) {
  auto p = translate(load_input(cfg), cfg.horizon);
  if (cfg.json)
    out << program_to_json(p).dump(2) << "\n";
  else
    out << emit_text(p);
  return 0;
}

inline int cmd_solve(const Config& cfg, std::ostream& out) {
  auto p = translate(load_input(cfg), cfg.horizon);
  auto models = enumerate(p, engine_options(cfg));
  if (cfg.json)
    out << models_to_json(p, models).dump(2) << "\n";
  else
    out << models_to_text(p, models);
  return 0;
}

inline int cmd_ts(const Config& cfg, std::ostream& out) {
  ActionDescription d = load_input(cfg);
  auto ts = TransitionOracle(d, engine_options(cfg)).system();
  if (cfg.json) {
    out << export_json(ts);
    return 0;
  }
  if (cfg.dot) {
    out << export_dot(ts, d.signature(), {cfg.negatives, true, cfg.all_loops});
    return 0;
  }
  const auto& sig = d.signature();
  std::map<State, std::size_t> index;
  out << "States (" << ts.states.size() << "):\n";
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    index[ts.states[i]] = i;
    out << "  s" << i << ": " << show(ts.states[i], sig) << "\n";
  }
  out << "Transitions (" << ts.transitions.size() << "):\n";
  for (const auto& t : ts.transitions)
    out << "  s" << index[t.from] << " --" << to_string(t.actions) << "--> s" << index[t.to] << "\n";
  return 0;
}

inline int cmd_compose(const Config& cfg, std::ostream& out) {
  if (cfg.manifest.empty()) throw CLI::ValidationError("--manifest", "compose needs --manifest");
  ActionDescription d = load_input(cfg);
  out << "% " << d.statics().size() << " static law(s), " << d.dynamics().size() << " dynamic law(s)\n";
  out << d.to_string();
  return 0;
}

inline int cmd_conflicts(const Config& cfg, std::ostream& out) {
  ActionDescription d = load_input(cfg);
  auto r = potential_conflicts(d, cfg.max_size, engine_options(cfg));
  if (cfg.json) {
    out << conflicts_to_json(r).dump(2) << "\n";
    return 0;
  }
  for (const auto& e : r.entries) {
    if (e.conflicts.empty()) continue;
    out << show(e.state, d.signature()) << ":\n";
    for (const auto& c : e.conflicts) out << "  " << to_string(c) << "\n";
  }
  out << r.total() << " potential conflict(s) over " << r.entries.size() << " state(s)\n";
  return 0;
}

inline int cmd_cover(const Config& cfg, std::ostream& out) {
  ActionDescription d = load_input(cfg);
  CompoundAction c = parse_actions(cfg.action_set, d.signature());
  State s = parse_state(cfg.state, d.signature());
  std::size_t n = 0;
  for (const auto& law : d.dynamics())
    if (is_covered(law, c, s, d.signature())) {
      out << to_string(law) << "\n";
      ++n;
    }
  out << "% " << n << " of " << d.dynamics().size() << " dynamic law(s) covered\n";
  return 0;
}

inline int cmd_resolve(const Config& cfg, std::ostream& out) {
  ActionDescription d = load_input(cfg);
  CompoundAction c = parse_actions(cfg.action_set, d.signature());
  State s = parse_state(cfg.state, d.signature());
  State target = parse_state(cfg.target, d.signature());
  auto r = auto_resolve(d, c, s, target, {AbPolicy{cfg.ab_per_law}, engine_options(cfg)});
  if (cfg.json) {
    out << resolution_to_json(r).dump(2) << "\n";
    return 0;
  }
  out << r.to_bc();
  out << "% d = {";
  bool first = true;
  for (const auto& l : r.d)
    if (l.positive) {
      out << (first ? "" : ", ") << l.to_string();
      first = false;
    }
  out << "} (all other ab' fluents false)\n";
  return 0;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
  ActionDescription d = load_input(cfg);
  LemmaOptions o;
  o.policy.per_law = cfg.ab_per_law;
  o.engine = engine_options(cfg);
  o.seed = cfg.seed;
  PropertyReport r;
  if (cfg.lemma == 1)
    r = check_lemma1(d, o);
  else if (cfg.lemma == 2)
    r = check_lemma2(d, o);
  else
    throw CLI::ValidationError("--lemma", "must be 1 or 2");
  for (const auto& c : r.counterexamples) out << "counterexample: " << c << "\n";
  out << "lemma " << cfg.lemma << ": " << r.checked << " case(s) checked, " << r.skipped << " skipped, "
      << r.counterexamples.size() << " counterexample(s)\n";
  return r.ok() ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Config cfg;
  CLI::App app{"Action descriptions, transition systems and multi-agent composition", "bcmas"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, ".bc action description");
    sub->add_option("--manifest", cfg.manifest, "multi-agent manifest instead of a .bc file");
    sub->add_option("--stage", cfg.stage, "override the manifest stage")->check(CLI::IsMember({"union", "global"}));
    sub->add_flag("--ab-per-law", cfg.ab_per_law, "key abnormality fluents by law id");
    sub->add_option("--max-candidates", cfg.max_candidates, "search cap (default from BCMAS_MAX_CANDIDATES or 2^26)");
  };

  auto* check = app.add_subcommand("check", "parse and validate");
  input(check);
  auto* groundc = app.add_subcommand("ground", "print the ground description");
  input(groundc);
  auto* trans = app.add_subcommand("translate", "emit the logic program for a horizon");
  input(trans);
  trans->add_option("--horizon", cfg.horizon)->required()->check(CLI::NonNegativeNumber);
  trans->add_flag("--json", cfg.json);
  auto* solve = app.add_subcommand("solve", "enumerate stable models");
  input(solve);
  solve->add_option("--horizon", cfg.horizon)->required()->check(CLI::NonNegativeNumber);
  solve->add_flag("--naive", cfg.naive, "enumerate all subsets (tiny programs only)");
  solve->add_flag("--json", cfg.json);
  auto* ts = app.add_subcommand("ts", "states and transitions");
  input(ts);
  auto* fmt = ts->add_option_group("format");
  fmt->add_flag("--dot", cfg.dot);
  fmt->add_flag("--json", cfg.json);
  fmt->require_option(0, 1);
  ts->add_flag("--all-loops", cfg.all_loops, "keep empty-action self-loops in DOT output");
  ts->add_flag("--negatives", cfg.negatives, "show negative literals in DOT output");
  auto* compose = app.add_subcommand("compose", "build the union or global description");
  input(compose);
  auto* conflicts = app.add_subcommand("conflicts", "potential conflicts per state");
  input(conflicts);
  conflicts->add_option("--max-size", cfg.max_size, "largest compound action considered");
  conflicts->add_flag("--json", cfg.json);
  auto* cover = app.add_subcommand("cover", "dynamic laws covered by a compound action at a state");
  input(cover);
  cover->add_option("--action-set", cfg.action_set, "e.g. \"goRight(a), goLeft(b)\"")->required();
  cover->add_option("--state", cfg.state, "positive literals; other fluents are false")->required();
  auto* resolve = app.add_subcommand("resolve", "generate resolution laws for a potential conflict");
  input(resolve);
  resolve->add_option("--conflict", cfg.action_set, "the conflicting compound action")->required();
  resolve->add_option("--state", cfg.state, "state where the conflict occurs")->required();
  resolve->add_option("--target", cfg.target, "intended successor state")->required();
  resolve->add_flag("--json", cfg.json);
  auto* verify = app.add_subcommand("verify", "check the beta-preservation or covered-law property");
  input(verify);
  verify->add_option("--lemma", cfg.lemma)->required()->check(CLI::IsMember({1, 2}));
  verify->add_option("--seed", cfg.seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (check->parsed()) return detail::cmd_check(cfg, out);
    if (groundc->parsed()) return detail::cmd_ground(cfg, out);
    if (trans->parsed()) return detail::cmd_translate(cfg, out);
    if (solve->parsed()) return detail::cmd_solve(cfg, out);
    if (ts->parsed()) return detail::cmd_ts(cfg, out);
    if (compose->parsed()) return detail::cmd_compose(cfg, out);
    if (conflicts->parsed()) return detail::cmd_conflicts(cfg, out);
    if (cover->parsed()) return detail::cmd_cover(cfg, out);
    if (resolve->parsed()) return detail::cmd_resolve(cfg, out);
    if (verify->parsed()) return detail::cmd_verify(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bcmas::cli
