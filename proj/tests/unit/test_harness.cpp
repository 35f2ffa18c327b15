#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/harness.hpp"
#include "koszul/io.hpp"

using namespace koszul;

TEST_CASE("suites are deterministic")
{
    HarnessOptions o;
    o.seed = 12345;
    o.size = 8;
    for (const std::string s : {"maps", "remark_b", "piper"}) {
        auto a = run_suite(s, o).to_json().dump();
        auto b = run_suite(s, o).to_json().dump();
        CHECK(a == b);
    }
    HarnessOptions other = o;
    other.seed = 54321;
    CHECK(run_suite("remark_b", o).to_json().dump() != run_suite("remark_b", other).to_json().dump());
}

TEST_CASE("small suites pass")
{
    HarnessOptions o;
    o.seed = 7;
    o.size = 10;
    for (const std::string s : {"signs", "remark_b", "regb", "multi2"}) {
        auto r = run_suite(s, o);
        CHECK(r.verdict() == Verdict::pass);
        CHECK(r.exit_code() == 0);
    }
}

TEST_CASE("every case records a replayable ideal")
{
    HarnessOptions o;
    o.size = 5;
    auto r = run_suite("regb", o);
    REQUIRE(r.cases.size() == 5);
    for (const auto& c : r.cases) {
        MonomialIdeal i = ideal_from_json(c.detail["ideal"]);
        CHECK(containment_power(i).has_value());
        CHECK(c.detail["field"] == "rat");
    }
}

TEST_CASE("suite errors")
{
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    HarnessOptions o;
    o.field = FieldContext::prime(2);
    CHECK_THROWS_AS(run_suite("gen2", o), FieldError);
    CHECK_THROWS_AS(run_suite("maincyc", o), FieldError);
    CHECK(suite_names().size() == 14);
}

TEST_CASE("corpus shapes")
{
    auto rng = case_rng(3, "corpus", 0);
    for (int k = 0; k < 20; ++k) {
        CHECK(monomial_quotient_dim(random_ideal(rng, {2, 3, 3, 4, CorpusShape::artinian})) == 0);
        CHECK(is_strongly_stable(random_ideal(rng, {2, 3, 3, 4, CorpusShape::borel})));
        CHECK(monomial_quotient_dim(random_ideal(rng, {2, 3, 3, 4, CorpusShape::low_dimension})) <= 1);
        CHECK(monomial_quotient_dim(random_ideal(rng, {2, 3, 3, 4, CorpusShape::positive_dimension})) >= 1);
        auto b = random_ideal(rng, {2, 3, 3, 4, CorpusShape::borel_artinian});
        CHECK(is_strongly_stable(b));
        CHECK(monomial_quotient_dim(b) == 0);
    }
}

TEST_CASE("probe on a strongly stable corpus finds nothing")
{
    ProbeOptions p;
    p.size = 6;
    p.strongly_stable = true;
    auto r = probe_q1(p);
    CHECK(r.count(Verdict::violation) == 0);
}

TEST_CASE("ideal json round trip")
{
    auto i = ideal_from_json(Json::parse(R"({"blocks":[2,1],"generators":[[2,0,0],[0,1,1]]})"));
    CHECK(i.ring().blocks() == std::vector<int>{2, 1});
    CHECK(ideal_from_json(ideal_to_json(i)) == i);
    auto p = ideal_from_json(Json::parse(R"({"blocks":[2],"power":[2]})"));
    CHECK(p.size() == 3);
    CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"blocks":[2],"generators":[[1]]})")), IoError);
    CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"blocks":[2]})")), IoError);
}

TEST_CASE("Betti json round trip")
{
    BettiTable t;
    t.cap = 4;
    t.entries[{1, 2}] = BettiEntry{3, true};
    t.entries[{2, 3}] = BettiEntry{2, false};
    Json j = betti_to_json(t);
    CHECK(j["cap"] == 4);
    CHECK(j["entries"].size() == 2);
    CHECK(j["entries"][0]["i"] == 1);
    BettiTable back = betti_from_json(j);
    CHECK(back.at(1, 2) == 3);
    CHECK_FALSE(back.entries.at({2, 3}).certified);
}
