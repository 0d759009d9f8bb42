#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bcmas;

static std::size_t expected_rules(const ActionDescription& d, int l) {
  const auto& sig = d.signature();
  const std::size_t f = sig.fluents().size(), r = sig.regular_fluents().size(), a = sig.actions().size();
  return d.statics().size() * (l + 1) + d.dynamics().size() * l + 2 * r + a * l + 2 * f * (l + 1) + a * l;
}

TEST_CASE("rule count follows the translation scheme", "[translate]") {
  for (const char* f : {"sumo1_l2.bc", "table_l.bc", "table_env.bc", "sumo2_union.bc", "empty.bc"}) {
    auto d = test::load(f);
    for (int l : {0, 1, 2}) {
      INFO(f << " horizon " << l);
      auto p = translate(d, l);
      CHECK(p.rules.size() == expected_rules(d, l));
      CHECK(p.size() == 2 * d.signature().fluents().size() * (l + 1) + 2 * d.signature().actions().size() * l);
      CHECK(p.exactly_one_groups.size() == d.signature().fluents().size() * (l + 1));
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto d = random_description(rng);
    CHECK(translate(d, 1).rules.size() == expected_rules(d, 1));
  }
}

TEST_CASE("emitted text uses the documented rule forms", "[translate]") {
  auto p = translate(test::load("sumo1_l2.bc"), 1);
  auto text = emit_text(p);
  CHECK(text.starts_with("% logic program (horizon 1, " + std::to_string(p.rules.size()) + " rules)\n"));
  CHECK(text.find("\n0:-goLeft(a) :- not 0:goLeft(a).\n") != std::string::npos);
  CHECK(text.find("\n0:goLeft(a) :- not not 0:goLeft(a).\n") != std::string::npos);
  CHECK(text.find("\n0:out(a) :- not not 0:out(a).\n") != std::string::npos);
  CHECK(text.find("\n:- 1:out(a), 1:-out(a).\n") != std::string::npos);
  CHECK(text.find("\n:- not 1:out(a), not 1:-out(a).\n") != std::string::npos);
  CHECK(text.find("\n1:at(a,1) :- 0:goLeft(a), 0:at(a,2).\n") != std::string::npos);
  CHECK(text.find("\n1:at(a,1) :- 0:at(a,1), not not 1:at(a,1).\n") != std::string::npos);
  // Defined fluents get no choice rule.
  CHECK(text.find("0:im(imp(a)) :- not not") == std::string::npos);
}

TEST_CASE("program JSON lists atoms and rules", "[translate]") {
  auto p = translate(test::load("table_l.bc"), 1);
  auto j = program_to_json(p);
  CHECK(j["horizon"] == 1);
  CHECK(j["atoms"].size() == p.size());
  CHECK(j["rules"].size() == p.rules.size());
  CHECK(j["rules"].back()["not"][0] == "0:lift_l");
  CHECK(j["rules"].back()["head"] == "0:-lift_l");
}

TEST_CASE("negative horizon is rejected", "[translate]") {
  CHECK_THROWS_AS(translate(test::load("empty.bc"), -1), ModelError);
}
