#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/veronese.hpp"
#include "oracle.hpp"

using namespace koszul;

TEST_CASE("quadric relations")
{
    for (auto [n, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        SegreVeroneseSpec spec({n}, {c});
        const long long r = count_monomials(n, c);
        CHECK(veronese_entry(spec, 1, 2) == oracle::binom(r + 1, 2) - count_monomials(n, 2 * c));
    }
    SegreVeroneseSpec segre({2, 2}, {1, 1});
    CHECK(veronese_entry(segre, 1, 2) == 10 - 9);
}

TEST_CASE("rational normal curves have an Eagon-Northcott resolution")
{
    for (int c = 2; c <= 4; ++c) {
        SegreVeroneseSpec spec({2}, {c});
        BettiTable t = veronese_betti(spec, c - 1);
        for (int i = 1; i <= c - 1; ++i) {
            CHECK(t.at(i, i + 1) == i * oracle::binom(c, i + 1));
            for (int j = i + 2; j <= i + 3; ++j)
                CHECK(t.at(i, j) == 0);
        }
        auto idx = green_lazarsfeld_index(spec, c - 1);
        CHECK(idx.status == IndexResult::Status::at_least);
        CHECK(idx.render() == ">= " + std::to_string(c - 1));
    }
    CHECK(veronese_entry(SegreVeroneseSpec({2}, {3}), 2, 3) == 2);
}

TEST_CASE("table entries outside the window vanish")
{
    SegreVeroneseSpec spec({3}, {2});
    BettiTable t = veronese_betti(spec, 3);
    for (int i = 1; i <= 3; ++i) {
        const int v = vanishing_start(i, 2);
        CHECK(veronese_entry(spec, i, v) == 0);
        CHECK(t.at(i, v) == 0);
    }
    for (const auto& [ij, e] : t.entries)
        CHECK(e.certified);
    CHECK(t.at(0, 0) == 1);
}

TEST_CASE("index of small Segre-Veronese rings")
{
    CHECK(green_lazarsfeld_index(SegreVeroneseSpec({3}, {2}), 3).render() == ">= 3");
    CHECK(green_lazarsfeld_index(SegreVeroneseSpec({2, 2}, {1, 1}), 2).render() == ">= 2");
    CHECK(np_check(SegreVeroneseSpec({2}, {2}), 1).holds);
    CHECK(np_check(SegreVeroneseSpec({3}, {2}), 3).holds);

    // the full table of the Veronese surface and the index agree
    SegreVeroneseSpec v({3}, {2});
    BettiTable t = veronese_betti(v, 4);
    int p = 0;
    for (int i = 1; i <= 4; ++i) {
        auto top = t.top_degree(i);
        if (top && *top > i + 1)
            break;
        p = i;
    }
    auto idx = green_lazarsfeld_index(v, 4);
    if (idx.status == IndexResult::Status::exact) {
        CHECK(idx.index == p);
        REQUIRE(idx.witness.has_value());
        CHECK(idx.witness->i == p + 1);
    } else {
        CHECK(p == 4);
    }
}

TEST_CASE("infeasible requests fail fast")
{
    SegreVeroneseSpec spec({3}, {2});
    spec.ceiling = 10;
    CHECK_THROWS_AS(veronese_betti(spec, 3), InfeasibleError);
    CHECK_THROWS(SegreVeroneseSpec({2, 2}, {1}));
    CHECK_THROWS(SegreVeroneseSpec({2}, {0}));
}
