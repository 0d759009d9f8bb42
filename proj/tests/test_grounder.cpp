#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bcmas;

TEST_CASE("grounding counts match a hand count", "[grounder]") {
  auto r = ground(parse(read_file(test::corpus("sumo1_l2.bc"))));
  const auto& sig = r.desc.signature();
  // at(a,1), at(a,2), out(a) plus the fresh fluents.
  CHECK(sig.fluents_with_role(FluentRole::domain) == std::vector<std::string>{"at(a,1)", "at(a,2)", "out(a)"});
  CHECK(sig.actions() == std::vector<std::string>{"goLeft(a)", "goRight(a)"});
  CHECK(sig.is_defined("im(imp(a))"));
  CHECK(sig.is_regular("nx(nl(a))"));
  CHECK(sig.agent_of("goLeft(a)") == "a");
  CHECK(r.stats.schematic_laws == 11);
  CHECK(r.stats.eliminated > 0);
}

TEST_CASE("variables range over their sort and conditions filter", "[grounder]") {
  auto r = ground_text(R"(
    sort n = 1..4.
    fluent p(X:n) : regular.
    action go.
    p(X) after go, p(Y) where X == Y+1.
    -p(X) if p(Y) where X in n, Y in n, X < Y.
  )");
  // X == Y+1 for Y in 1..3 (Y = 4 leaves the sort): 3 ground laws.
  CHECK(r.desc.dynamics().size() == 3);
  // X < Y over 1..4: 6 pairs.
  CHECK(r.desc.statics().size() == 6);
  CHECK(r.stats.ground_laws == 9);

  // Brute force the dynamic count directly.
  int expect = 0;
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) expect += x == y + 1;
  CHECK(expect == 3);
}

TEST_CASE("out-of-sort arithmetic drops the instance", "[grounder]") {
  auto r = ground_text(R"(
    sort n = 1..2.
    fluent p(X:n) : regular.
    action go.
    p(X+1) after go, p(X).
  )");
  REQUIRE(r.desc.dynamics().size() == 1);
  CHECK(r.desc.dynamics()[0].head == pos("p(2)"));
  CHECK(r.stats.eliminated == 1);
}

TEST_CASE("law ids use labels or a prefixed default", "[grounder]") {
  auto r = ground_text("fluent p : regular.\naction a.\np after a.\nnonexecutable a if p label stop.\n", {"x_"});
  CHECK(r.desc.dynamics()[0].id.name == "x_l1");
  CHECK(r.desc.signature().contains("nx(stop)"));
}

TEST_CASE("bounded conjunctions expand in place", "[grounder]") {
  auto r = ground_text("sort s = {a, b, c}.\nfluent p(X:s) : regular.\nfluent q : defined.\nq if all X in s : p(X).\n");
  REQUIRE(r.desc.statics().size() == 1);
  CHECK(r.desc.statics()[0].if_part.size() == 3);
}

TEST_CASE("abnormality atoms are declared with their roles", "[grounder]") {
  auto d = test::load("table_env.bc");
  CHECK(d.signature().role("ab(imp(l))") == FluentRole::abnormal_static);
  CHECK(d.signature().is_defined("ab(imp(l))"));
  auto r = test::load("sumo_resolve.bc");
  CHECK(r.signature().role("ab'(at(a,3))") == FluentRole::abnormal_dynamic);
  CHECK(r.signature().is_regular("ab'(at(a,3))"));
}

TEST_CASE("grounding errors", "[grounder]") {
  CHECK_THROWS_AS(load_description(test::corpus("missing.bc")), Error);
  CHECK_THROWS_AS(ground_text("sort n = 1..2.\nfluent p(X:n) : regular.\np(X) if p(Y) where X < Y+c."), ParseError);
}

TEST_CASE("terms inside abnormality atoms respect sorts", "[grounder]") {
  auto r = ground_text(R"(
    sort n = 1..2.
    fluent p(X:n) : regular.
    action go.
    ab'(p(X+1)) after go, p(X).
  )");
  REQUIRE(r.desc.dynamics().size() == 1);
  CHECK(r.desc.dynamics()[0].head == pos("ab'(p(2))"));
  CHECK_FALSE(r.desc.signature().contains("ab'(p(3))"));
}

TEST_CASE("dropped instances declare nothing", "[grounder]") {
  auto r = ground_text(R"(
    sort n = 1..2.
    fluent p(X:n) : regular.
    action go.
    ab'(k(X)) after go, p(X), p(X+1).
  )");
  CHECK(r.desc.signature().contains("ab'(k(1))"));
  CHECK_FALSE(r.desc.signature().contains("ab'(k(2))"));
}
