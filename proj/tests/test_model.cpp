#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bcmas;

TEST_CASE("literals parse and print", "[model]") {
  CHECK(literal_from_string("-at(a,1)") == neg("at(a,1)"));
  CHECK(literal_from_string(" out(b) ") == pos("out(b)"));
  CHECK(neg("p").to_string() == "-p");
  CHECK(pos("p").complement() == neg("p"));
  CHECK(split_top_level("at(a,1), -out(b),lift_l") == std::vector<std::string>{"at(a,1)", "-out(b)", "lift_l"});
}

TEST_CASE("signature tracks kinds, roles and owners", "[model]") {
  Signature sig;
  sig.declare_fluent("p", SymbolKind::regular_fluent);
  sig.declare_fluent("q", SymbolKind::defined_fluent);
  sig.declare_action("go", std::string("a"));
  CHECK(sig.is_regular("p"));
  CHECK(sig.is_defined("q"));
  CHECK(sig.is_action("go"));
  CHECK(sig.agent_of("go") == "a");
  CHECK(sig.fluents() == std::vector<std::string>{"p", "q"});
  CHECK(sig.regular_fluents() == std::vector<std::string>{"p"});
  CHECK_THROWS_AS(sig.declare_fluent("q", SymbolKind::regular_fluent), ModelError);
  CHECK_THROWS_AS(sig.declare_action("p"), ModelError);
  CHECK_THROWS_AS(sig.declare_fluent("go", SymbolKind::regular_fluent), ModelError);

  sig.declare_fluent("nx(g)", SymbolKind::regular_fluent, FluentRole::auxiliary);
  CHECK(sig.fluents_with_role(FluentRole::auxiliary) == std::vector<std::string>{"nx(g)"});
}

TEST_CASE("descriptions drop structural duplicates and reject bad symbols", "[model]") {
  Signature sig;
  sig.declare_fluent("p", SymbolKind::regular_fluent);
  sig.declare_fluent("q", SymbolKind::regular_fluent);
  sig.declare_action("a");
  ActionDescription d(sig);
  CHECK(d.add(StaticLaw{{"x"}, pos("p"), {pos("q"), neg("q")}, {}}));
  CHECK_FALSE(d.add(StaticLaw{{"y"}, pos("p"), {neg("q"), pos("q")}, {}}));
  CHECK(d.add(DynamicLaw{{"z"}, pos("q"), {pos("a"), neg("p")}, {}}));
  CHECK(d.size() == 2);
  CHECK_THROWS_AS(d.add(StaticLaw{{"w"}, pos("a"), {}, {}}), ModelError);
  CHECK_THROWS_AS(d.add(StaticLaw{{"w"}, pos("r"), {}, {}}), ModelError);
  CHECK_THROWS_AS(d.add(StaticLaw{{"w"}, pos("p"), {pos("a")}, {}}), ModelError);
  CHECK(d.to_string() == "p if q, -q.\nq after a, -p.\n");
}

TEST_CASE("abbreviations expand into core laws", "[model]") {
  Signature sig;
  sig.declare_fluent("p", SymbolKind::regular_fluent);
  sig.declare_action("a");
  sig.declare_action("b");
  std::vector<Law> laws{
      AbbreviationLaw{AbbreviationLaw::Kind::inertial, {"in"}, {pos("p")}, {}},
      AbbreviationLaw{AbbreviationLaw::Kind::impossible, {"imp"}, {pos("p")}, {}},
      AbbreviationLaw{AbbreviationLaw::Kind::nonexecutable, {"ne"}, {pos("a"), pos("b")}, {neg("p")}},
  };
  auto d = expand_abbreviations(laws, sig);
  const auto& s = d.signature();
  CHECK(s.is_regular("nx(ne)"));
  CHECK(s.is_defined("im(imp)"));
  CHECK(s.role("nx(ne)") == FluentRole::auxiliary);
  CHECK(s.role("im(imp)") == FluentRole::auxiliary);

  // Inertia: two dynamic laws with ifcons.
  int inertial = 0, aux_static = 0;
  for (const auto& l : d.dynamics())
    if (l.id.origin == LawOrigin::inertial) {
      ++inertial;
      CHECK(l.ifcons == std::vector<Literal>{l.head});
    }
  for (const auto& l : d.statics()) aux_static += l.auxiliary;
  CHECK(inertial == 2);
  CHECK(aux_static == 2);

  // A state with p is impossible; a,b together are not executable when -p.
  TransitionOracle o(d);
  auto st = o.states();
  REQUIRE(st.size() == 1);
  CHECK(holds_in(st[0], neg("p")));
  CHECK_FALSE(o.has_transition(st[0], CompoundAction{"a", "b"}, {}));
  CHECK(o.has_transition(st[0], CompoundAction{"a"}, {}));
}

TEST_CASE("validate reports defined fluents without static support", "[model]") {
  auto d = ground_text("fluent p : defined.\nfluent q : regular.\ninertial q.\n").desc;
  auto diags = validate(d);
  CHECK_FALSE(has_errors(diags));
  REQUIRE_FALSE(diags.empty());
  CHECK(diags[0].severity == Severity::warning);
}
