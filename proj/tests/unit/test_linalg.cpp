#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koszul/linalg.hpp"
#include "oracle.hpp"

using namespace koszul;

namespace {

SparseMatrix dense(std::vector<std::vector<long>> rows)
{
    std::vector<std::vector<Rational>> r;
    for (auto& row : rows) {
        r.emplace_back();
        for (long x : row)
            r.back().emplace_back(x);
    }
    return SparseMatrix::from_dense(r, rows.empty() ? 0 : rows[0].size());
}

} // namespace

TEST_CASE("rank of small matrices")
{
    CHECK(rank(dense({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(dense({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(SparseMatrix(0, 3)) == 0);
}

TEST_CASE("kernels")
{
    CHECK(kernel_basis(dense({{1, 0}, {0, 1}})).empty());
    auto k = kernel_basis(dense({{1, 0}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{0, 1});
    auto k2 = kernel_basis(dense({{1, 1}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] == -k2[0][1]);
    CHECK(k2[0][0] != 0);
}

TEST_CASE("span membership")
{
    auto r = in_span({{1, 0}}, {2, 0});
    CHECK(r.member);
    CHECK(r.coefficients == Vector{2});
    CHECK_FALSE(in_span({{1, 0}}, {0, 1}).member);
    CHECK(in_span({}, {0, 0}).member);
    CHECK_FALSE(in_span({}, {1, 0}).member);
}

TEST_CASE("random matrices against a dense oracle")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        oracle::Dense d(rows, std::vector<mpq_class>(cols));
        SparseMatrix s(rows, cols);
        // low-rank products keep the kernel nontrivial
        const std::size_t inner = 1 + rng() % 4;
        std::vector<std::vector<long>> a(rows, std::vector<long>(inner)), b(inner, std::vector<long>(cols));
        for (auto& row : a)
            for (auto& x : row)
                x = static_cast<long>(rng() % 7) - 3;
        for (auto& row : b)
            for (auto& x : row)
                x = static_cast<long>(rng() % 7) - 3;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                long v = 0;
                for (std::size_t k = 0; k < inner; ++k)
                    v += a[i][k] * b[k][j];
                d[i][j] = v;
                s.set(i, j, Rational(v));
            }
        const std::size_t r = oracle::rank(d);
        CHECK(rank(s) == r);
        CHECK(rank_with(s, {}, EliminationPath::sparse) == r);
        CHECK(rank_with(s, {}, EliminationPath::dense) == r);
        CHECK(rank(s.transpose()) == r);
        auto ker = kernel_basis(s);
        CHECK(ker.size() == cols - r);
        for (const auto& v : ker)
            CHECK(is_zero_vector(s.multiply(v)));
        CHECK(rank(s, FieldContext::prime(1000003)) <= r);
    }
}

TEST_CASE("rank depends on the characteristic")
{
    auto m = dense({{2, 1}, {1, 2}});
    CHECK(rank(m) == 2);
    CHECK(rank(m, FieldContext::prime(3)) == 1);
    CHECK(rank(m, FieldContext::prime(5)) == 2);
}

TEST_CASE("large entries leave the fast path without losing exactness")
{
    const long big = 3037000493L;
    auto m = dense({{big, 1, 0}, {1, big, 1}, {0, 1, big}});
    CHECK(rank(m) == 3);
    auto singular = dense({{big, big - 1}, {big + 1, big}});
    // det = big^2 - (big^2 - 1) = 1
    CHECK(rank(singular) == 2);
    auto dep = dense({{big, big - 1, 7}, {2 * big, 2 * big - 2, 14}});
    CHECK(rank(dep) == 1);
}

TEST_CASE("row reduction")
{
    auto e = row_reduce(dense({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}}));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(e.rows.size() == 2);
    CHECK(e.rows[1] == Vector{0, 1, 2});
}
