#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bcmas;

namespace {

ActionDescription small() {
  return ground_text(R"(
    fluent p, q : regular.
    action a.
    -q if p.
    p after a label eff.
    inertial p, q.
  )").desc;
}

}  // namespace

TEST_CASE("tau makes static laws defeasible", "[compose]") {
  auto d = tau(small());
  const auto& sig = d.signature();
  CHECK(sig.is_defined("ab(-q)"));
  CHECK(sig.role("ab(-q)") == FluentRole::abnormal_static);
  bool found = false;
  for (const auto& l : d.statics())
    if (l.head == neg("q") && !l.auxiliary) {
      CHECK(l.ifcons == std::vector<Literal>{neg("ab(-q)")});
      found = true;
    }
  CHECK(found);
  // default -ab(-q) is present.
  CHECK(std::any_of(d.statics().begin(), d.statics().end(),
                    [](const StaticLaw& l) { return l.head == neg("ab(-q)") && l.ifcons == std::vector{neg("ab(-q)")}; }));
  // States are unchanged up to the ab fluent, which is false.
  auto st = states(d);
  CHECK(st.size() == states(small()).size());
  for (const auto& s : st) CHECK(holds_in(s, neg("ab(-q)")));
}

TEST_CASE("beta makes dynamic laws defeasible", "[compose]") {
  auto d = beta(small());
  CHECK(d.signature().is_regular("ab'(p)"));
  CHECK(d.signature().is_regular("ab'(-p)"));
  CHECK(d.signature().is_regular("ab'(q)"));
  for (const auto& l : d.dynamics())
    if (!l.auxiliary) CHECK(l.ifcons.back().symbol.starts_with("ab'("));
  CHECK(beta_fluents(small()) == std::vector<std::string>{"ab'(-p)", "ab'(-q)", "ab'(p)", "ab'(q)"});
  auto per = beta(small(), {true});
  CHECK(per.signature().contains("ab'(eff)"));
}

TEST_CASE("covered laws", "[compose]") {
  auto d = small();
  auto s = make_state({"-p", "q"});
  const DynamicLaw* eff = nullptr;
  for (const auto& l : d.dynamics())
    if (l.id.name == "eff") eff = &l;
  REQUIRE(eff);
  CHECK(is_covered(*eff, {"a"}, s, d.signature()));
  CHECK_FALSE(is_covered(*eff, {}, s, d.signature()));
  auto part = covered_part(d, {}, s);
  CHECK(std::none_of(part.dynamics().begin(), part.dynamics().end(), [](const DynamicLaw& l) { return l.id.name == "eff"; }));
  CHECK(part.statics().size() == d.statics().size());
}

TEST_CASE("union checks agents and conflict fluents", "[compose]") {
  MasSpec spec;
  spec.agents.emplace("x", ground_text("fluent p : regular.\naction go agent x.\ninertial p.\n").desc);
  spec.agents.emplace("y", ground_text("fluent p : regular.\naction go agent y.\ninertial p.\n").desc);
  CHECK_THROWS_AS(compose_union(spec), ModelError);

  MasSpec ok;
  ok.agents.emplace("x", ground_text("fluent p : regular.\naction gx agent x.\n-p if p.\n").desc);
  ok.conflict = ground_text("fluent p : regular.\nab(nothing).\n").desc;
  CHECK_THROWS_AS(compose_union(ok), ModelError);
  ok.conflict = ground_text("fluent p : regular.\nab(-p).\n").desc;
  auto u = compose_union(ok);
  CHECK(u.signature().agent_of("gx") == "x");
  CHECK(states(u).size() == 2);

  CHECK_THROWS_AS(compose_global(u, ground_text("fluent p : regular.\naction gx.\nab'(zz) after gx.\n").desc),
                  ModelError);
}

TEST_CASE("manifests", "[compose]") {
  auto m = parse_manifest("agents = [a = x.bc, b = y.bc] % two\nstage = global\n# note\n", "dir");
  REQUIRE(m.agents.size() == 2);
  CHECK(m.agents[1].second == "dir/y.bc");
  CHECK(m.stage == Stage::global_stage);
  CHECK_FALSE(m.conflict);
  CHECK_THROWS_AS(parse_manifest("stage = union\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("agents = [a = x.bc, a = y.bc]\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("agents = [a = x.bc]\nbogus = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("agents = [a = x.bc]\nstage = later\n"), ParseError);

  auto u = test::stage("sumo2_union.mas", Stage::union_stage);
  auto hand = test::load("sumo2_union.bc");
  CHECK(states(u).size() == states(hand).size());
}

TEST_CASE("conflict report on the table union", "[compose]") {
  auto u = test::stage("table_union.mas", Stage::union_stage);
  auto r = potential_conflicts(u);
  CHECK(r.entries.size() == 4);
  auto onfloor = test::find_states(states(u), u.signature(), {"table(onfloor)"});
  REQUIRE(onfloor.size() == 1);
  CHECK(r.contains(onfloor[0], {"lift_l", "lift_r"}));
  CHECK_FALSE(r.contains(onfloor[0], {"lift_l"}));
  auto j = conflicts_to_json(r);
  CHECK(j["states"].size() == 4);
}

TEST_CASE("property checks on small descriptions", "[compose]") {
  CHECK(check_lemma1(test::load("sumo1_l2.bc")).ok());
  CHECK(check_lemma2(test::load("sumo1_l2.bc")).ok());
  CHECK(check_lemma1(test::stage("table_union.mas", Stage::union_stage)).ok());
  auto r = check_lemma2(test::stage("table_union.mas", Stage::union_stage));
  CHECK(r.ok());
  CHECK(r.checked > 0);
}

TEST_CASE("auto_resolve on the table", "[compose]") {
  auto u = test::stage("table_union.mas", Stage::union_stage);
  const auto& sig = u.signature();
  auto st = states(u);
  auto from = test::find_states(st, sig, {"table(onfloor)"}).at(0);
  auto to = test::find_states(st, sig, {"table(lifted)"}).at(0);
  auto r = auto_resolve(u, {"lift_l", "lift_r"}, from, to);
  CHECK_FALSE(r.laws.empty());
  CHECK(r.verified_from.size() == 2);
  CHECK(r.to_bc().starts_with("% resolution of {lift_l, lift_r}"));
  CHECK(resolution_to_json(r)["d"].is_array());
  CHECK_THROWS_AS(auto_resolve(u, {"lift_l"}, from, to), ModelError);
  CHECK_THROWS_AS(auto_resolve(u, {"lift_l", "lift_r"}, make_state({"table(onfloor)"}), to), ModelError);
}
