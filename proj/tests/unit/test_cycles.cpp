#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/cycles.hpp"
#include "koszul/homology.hpp"

using namespace koszul;

namespace {

IdealPtr power(std::vector<int> blocks, MultiDegree c)
{
    return std::make_shared<const MonomialIdeal>(power_ideal(RingConfig(std::move(blocks)), c));
}

} // namespace

TEST_CASE("z1 generators")
{
    auto i = power({2}, {2});
    KoszulChain z = z1_generator(i, Monomial({1, 0}), 0, 1);
    KoszulChain expect = KoszulChain::bracket(i, {Monomial({1, 1})}, Monomial({1, 0})) -
                         KoszulChain::bracket(i, {Monomial({2, 0})}, Monomial({0, 1}));
    CHECK(z == expect);
    CHECK(boundary(z).is_zero());
    CHECK(z1_generator(i, Monomial({1, 0}), 1, 0) == z * Rational(-1));
    CHECK_THROWS(z1_generator(i, Monomial({2, 0}), 0, 1));

    std::vector<KoszulChain> all;
    for (const auto& f : z1_generators(i))
        all.push_back(f.chain);
    KoszulComplex k(i);
    CHECK(generated_dim(k, 1, all, {3}) == cycle_dim(k, 1, {3}));
}

TEST_CASE("z1 generators of Segre products stay inside a block")
{
    auto i = power({2, 2}, {1, 1});
    for (const auto& f : z1_generators(i)) {
        CHECK(boundary(f.chain).is_zero());
        for (const auto& [j, k] : f.variables)
            CHECK(i->ring().block_of(j) == i->ring().block_of(k));
    }
}

TEST_CASE("symmetrized cycles")
{
    auto i = power({2}, {1});
    const Monomial x({1, 0}), y({0, 1}), one({0, 0});
    KoszulChain z = symmetrized_cycle(i, {x, y}, {one});
    KoszulChain expect = KoszulChain::bracket(i, {x}, y) - KoszulChain::bracket(i, {y}, x);
    CHECK(z == expect);
    CHECK(boundary(z).is_zero());
    CHECK(symmetrized_cycle(i, {x, x}, {one}).is_zero());

    auto j = power({2}, {2});
    const Monomial x2({2, 0}), xy({1, 1}), y2({0, 2});
    KoszulChain z2 = symmetrized_cycle(j, {x2, xy, y2}, {one, one});
    // six permutations, pairwise equal up to the bracket sign
    CHECK(z2.size() == 3);
    for (const auto& [key, coeff] : z2.terms())
        CHECK(abs(coeff) == 2);
    CHECK(boundary(z2).is_zero());

    auto k = power({3}, {2});
    KoszulChain z3 = symmetrized_cycle(k, {Monomial({1, 0, 0}), Monomial({0, 1, 0}), Monomial({0, 0, 1})},
                                       {Monomial({1, 0, 0}), Monomial({0, 1, 0})});
    CHECK_FALSE(z3.is_zero());
    CHECK(boundary(z3).is_zero());
}

TEST_CASE("powers of Z_1")
{
    auto i = power({2}, {2});
    KoszulComplex k(i);
    CHECK(z1_power_dim(k, 1, {4}) == cycle_dim(k, 1, {4}));
    CHECK(z1_power_dim(k, 2, {6}) == cycle_dim(k, 2, {6}));
    CHECK(z1_power_dim(k, 4, {12}) == 0);
    CHECK(z1_power_generators(i, 4).empty());
    for (const auto& f : z1_power_generators(i, 2))
        CHECK(boundary(f.chain).is_zero());
}

TEST_CASE("multi2 membership")
{
    auto segre = power({2, 2}, {1, 1});
    KoszulComplex k(segre);
    for (int block = 0; block < 2; ++block) {
        auto trials = multi2_trials(segre, block);
        CHECK_FALSE(trials.empty());
        for (const auto& t : trials) {
            auto r = multi2_membership(k, t);
            CHECK(r.member);
            CHECK(r.factor == 2);
        }
    }
    auto m = power({2}, {1});
    KoszulComplex km(m);
    for (const auto& t : multi2_trials(m, 0))
        CHECK(multi2_membership(km, t).member);

    auto v = power({3}, {2});
    KoszulComplex kv(v);
    auto trials = multi2_trials(v, 0);
    REQUIRE(!trials.empty());
    auto r = multi2_membership(kv, trials[trials.size() / 2]);
    CHECK(r.member);
    CHECK(r.factor == 6);

    KoszulComplex small(v, CoefficientModule{}, FieldContext::prime(3));
    CHECK_THROWS_AS(multi2_membership(small, trials[0]), FieldError);
}

TEST_CASE("gen2 families")
{
    for (auto [n, c] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
        auto i = power({n}, {c});
        KoszulComplex k(i);
        std::vector<KoszulChain> chains;
        for (const auto& f : gen2_families(i)) {
            CHECK(boundary(f.chain).is_zero());
            chains.push_back(f.chain);
        }
        CHECK(generates_up_to(k, 2, chains, {2 * c + 2}).generates);
    }
    CHECK_THROWS_AS(gen2_families(power({2}, {2}), FieldContext::prime(2)), FieldError);
}

TEST_CASE("power exponent")
{
    CHECK(power_exponent(*power({2, 2}, {1, 2})) == MultiDegree{1, 2});
    MonomialIdeal j(RingConfig::standard(2), {Monomial({2, 0}), Monomial({0, 2})});
    CHECK_FALSE(power_exponent(j).has_value());
}

TEST_CASE("every enumerated family member is a cycle")
{
    for (int n = 1; n <= 3; ++n)
        for (int c = 1; c <= 3; ++c) {
            auto i = power({n}, {c});
            for (const auto& f : z1_generators(i))
                CHECK(boundary(f.chain).is_zero());
            if (n >= 2)
                for (const auto& f : gen2_families(i))
                    CHECK(boundary(f.chain).is_zero());
        }
}
