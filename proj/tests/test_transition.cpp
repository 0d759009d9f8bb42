#include <set>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bcmas;

namespace {

using Pos = std::vector<std::string>;

std::set<std::tuple<Pos, CompoundAction, Pos>> edges(const TransitionSystem& ts, const Signature& sig) {
  std::set<std::tuple<Pos, CompoundAction, Pos>> out;
  for (const auto& t : ts.transitions)
    out.insert({test::domain_positives(t.from, sig), t.actions, test::domain_positives(t.to, sig)});
  return out;
}

// Swaps the agents and reverses the ring.
std::string mirror(const std::string& s) {
  auto swap_agent = [](char c) { return c == 'a' ? 'b' : 'a'; };
  if (s.starts_with("at(")) return std::string("at(") + swap_agent(s[3]) + "," + std::to_string(5 - (s[5] - '0')) + ")";
  if (s.starts_with("out(")) return std::string("out(") + swap_agent(s[4]) + ")";
  if (s.starts_with("goLeft(")) return std::string("goRight(") + swap_agent(s[7]) + ")";
  if (s.starts_with("goRight(")) return std::string("goLeft(") + swap_agent(s[8]) + ")";
  return s;
}

template <class C>
C mirror_all(const C& c) {
  C out;
  for (const auto& s : c) out.insert(out.end(), mirror(s));
  if constexpr (std::is_same_v<C, Pos>) std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("single Sumo transition system", "[transition]") {
  auto d = test::load("sumo1_l2.bc");
  const auto& sig = d.signature();
  auto ts = transitions(d);
  CHECK(ts.states.size() == 3);
  auto e = edges(ts, sig);
  const Pos s1{"at(a,1)"}, s2{"at(a,2)"}, s3{"out(a)"};
  const CompoundAction none, l{"goLeft(a)"}, r{"goRight(a)"};
  CHECK(e == std::set<std::tuple<Pos, CompoundAction, Pos>>{
                 {s1, r, s2}, {s2, l, s1}, {s1, l, s3}, {s2, r, s3}, {s1, none, s1}, {s2, none, s2}, {s3, none, s3}});
  for (const auto& s : ts.states) CHECK(test::aux_all_false(s, sig));
}

TEST_CASE("oracle queries agree with the full system", "[transition]") {
  TransitionOracle o(test::load("sumo1_l2.bc"));
  auto ts = o.system();
  for (const auto& s : ts.states) {
    CHECK(o.is_state(s));
    std::set<CompoundAction> ex;
    for (const auto& t : ts.transitions)
      if (t.from == s) ex.insert(t.actions);
    CHECK(o.executable(s) == ex);
  }
  auto partial = make_state({"at(a,1)"});
  REQUIRE(o.states_matching(partial).size() == 1);
  CHECK_FALSE(o.is_state(make_state({"at(a,1)", "at(a,2)"})));
  auto full = o.states_matching(partial)[0];
  CHECK(o.successors(full, {"goLeft(a)", "goRight(a)"}).empty());
  CHECK(o.has_transition(full, {"goRight(a)"}, make_state({"at(a,2)"})));
  CHECK_THROWS_AS(o.successors(full, {"jump"}), ModelError);
  CHECK_THROWS_AS(o.is_state(make_state({"fly"})), ModelError);
}

TEST_CASE("complete fills unmentioned fluents", "[transition]") {
  auto s = complete(make_state({"q", "-p"}), {"p", "q", "r"}, false);
  CHECK(s == make_state({"-p", "q", "-r"}));
  CHECK(all_compound_actions({"x", "y"}) == std::vector<CompoundAction>{{}, {"x"}, {"y"}, {"x", "y"}});
  CHECK(all_compound_actions({"x", "y", "z"}, 1).size() == 4);
}

TEST_CASE("DOT output hides negatives, auxiliaries and empty loops", "[transition]") {
  auto d = test::load("sumo1_l2.bc");
  auto ts = transitions(d);
  auto dot = export_dot(ts, d.signature());
  CHECK(dot.starts_with("digraph transitions {\n"));
  CHECK(dot.ends_with("}\n"));
  CHECK(dot.find("nx(") == std::string::npos);
  CHECK(dot.find("-at") == std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
  CHECK(dot.find("[label=\"goRight(a)\"]") != std::string::npos);
  auto all = export_dot(ts, d.signature(), {true, false, true});
  CHECK(std::count(all.begin(), all.end(), '>') == 7);
  CHECK(all.find("-at(a,2)") != std::string::npos);
  CHECK(export_dot(ts, d.signature()) == dot);
}

TEST_CASE("JSON export reads back to the same system", "[transition]") {
  for (const char* f : {"sumo1_l2.bc", "table_l.bc", "table_env.bc"}) {
    auto ts = transitions(test::load(f));
    CHECK(test::system_from_json(export_json(ts)) == ts);
  }
  CHECK(export_json(transitions(test::load("empty.bc"))).find("\"transitions\"") != std::string::npos);
}

TEST_CASE("two-Sumo union is mirror symmetric", "[transition]") {
  auto d = test::load("sumo2_union.bc");
  auto ts = transitions(d);
  CHECK(ts.states.size() == 21);
  auto e = edges(ts, d.signature());
  for (const auto& [from, c, to] : e) {
    INFO(to_string(c));
    CHECK(e.contains({mirror_all(from), mirror_all(c), mirror_all(to)}));
  }
}

TEST_CASE("the empty description has one empty state", "[transition]") {
  auto ts = transitions(test::load("empty.bc"));
  REQUIRE(ts.states.size() == 1);
  CHECK(ts.states[0].empty());
  CHECK(ts.transitions.size() == 1);
}
