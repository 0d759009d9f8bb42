#include <random>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace bcmas;

namespace {

struct Builder {
  LogicProgram p;
  Builder() { p.set_raw(true); }
  AtomId operator()(const std::string& n) { return p.add_atom(n); }
  void rule(std::optional<AtomId> h, std::vector<AtomId> pos, std::vector<AtomId> naf = {},
            std::vector<AtomId> nnaf = {}) {
    p.rules.push_back({h, std::move(pos), std::move(naf), std::move(nnaf)});
  }
};

std::vector<std::vector<std::string>> names(const LogicProgram& p, const ModelSet& ms) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : ms) out.push_back(model_names(p, m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("reduct drops blocked rules and strips negation", "[engine]") {
  Builder b;
  auto p = b("p"), q = b("q"), r = b("r");
  b.rule(p, {}, {q});
  b.rule(q, {}, {p});
  b.rule(r, {p}, {}, {r});
  auto red = reduct(b.p, {p});
  REQUIRE(red.rules.size() == 1);
  CHECK(red.rules[0] == Rule{p, {}, {}, {}});
  auto red2 = reduct(b.p, {p, r});
  CHECK(red2.rules.size() == 2);
  CHECK(least_model(red2) == Interpretation{p, r});
  CHECK_THROWS_AS(least_model(b.p), ModelError);
}

TEST_CASE("small programs have the textbook stable models", "[engine]") {
  SECTION("even loop") {
    Builder b;
    auto p = b("p"), q = b("q");
    b.rule(p, {}, {q});
    b.rule(q, {}, {p});
    CHECK(names(b.p, enumerate(b.p)) == std::vector<std::vector<std::string>>{{"p"}, {"q"}});
  }
  SECTION("odd loop has none") {
    Builder b;
    auto p = b("p");
    b.rule(p, {}, {p});
    CHECK(enumerate(b.p).empty());
  }
  SECTION("double negation is a choice") {
    Builder b;
    auto p = b("p");
    b.rule(p, {}, {}, {p});
    CHECK(enumerate(b.p).size() == 2);
    CHECK(is_stable(b.p, {}));
    CHECK(is_stable(b.p, {p}));
  }
  SECTION("positive loops are unfounded") {
    Builder b;
    auto p = b("p"), q = b("q");
    b.rule(p, {q});
    b.rule(q, {p});
    auto ms = enumerate(b.p);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].empty());
    CHECK_FALSE(is_stable(b.p, {p, q}));
  }
  SECTION("constraints prune") {
    Builder b;
    auto p = b("p"), q = b("q");
    b.rule(p, {}, {q});
    b.rule(q, {}, {p});
    b.rule(std::nullopt, {p});
    CHECK(names(b.p, enumerate(b.p)) == std::vector<std::vector<std::string>>{{"q"}});
  }
}

TEST_CASE("single Sumo initial state is stable", "[engine]") {
  auto p = translate(test::load("sumo1_l2.bc"), 0);
  std::vector<AtomId> x;
  for (const auto& l : {pos("at(a,1)"), neg("at(a,2)"), neg("out(a)"), neg("nx(nl(a))"), neg("nx(nr(a))"),
                        neg("im(imp(a))")})
    x.push_back(p.at(0, l));
  std::sort(x.begin(), x.end());
  CHECK(is_stable(p, x));
  CHECK(enumerate(p).size() == 3);
}

TEST_CASE("structured search equals naive enumeration", "[engine]") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    auto p = random_program(rng, {12, 18});
    INFO(emit_text(p));
    CHECK(enumerate(p) == test::brute_force_models(p));
  }
}

TEST_CASE("assumptions restrict models", "[engine]") {
  Builder b;
  auto p = b("p"), q = b("q");
  b.rule(p, {}, {q});
  b.rule(q, {}, {p});
  EngineOptions o;
  o.assumptions[q] = true;
  auto ms = enumerate(b.p, o);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0] == Interpretation{q});
  o.naive = true;
  CHECK(enumerate(b.p, o) == ms);
}

TEST_CASE("resource caps throw", "[engine]") {
  auto p = translate(test::load("sumo2_union.bc"), 1);
  EngineOptions o;
  o.max_candidates = 10;
  CHECK_THROWS_AS(enumerate(p, o), ResourceLimit);
  o.naive = true;
  CHECK_THROWS_AS(enumerate(p, o), ResourceLimit);
}

TEST_CASE("model output formats", "[engine]") {
  Builder b;
  auto p = b("p"), q = b("q");
  b.rule(p, {}, {q});
  b.rule(q, {}, {p});
  auto ms = enumerate(b.p);
  CHECK(models_to_text(b.p, ms) == "Model 1: p\nModel 2: q\nModels: 2\n");
  CHECK(models_to_json(b.p, ms).dump() == R"([["p"],["q"]])");
}
