#include <doctest.h>

#include <random>

#include "wspindex/intlin.hpp"

using namespace wspindex;

namespace {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    IntMat c(a.size(), std::vector<long long>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

long long det2(const IntMat& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

} // namespace

TEST_CASE("smith normal form reproduces U*A*V = S with divisibility") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMat a(r, std::vector<long long>(c));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        auto f = smith_normal_form(a);
        auto lhs = mat_mul(mat_mul(f.u, a), f.v);
        CHECK(lhs == f.s);
        for (std::size_t i = 0; i + 1 < f.invariants.size(); ++i) {
            CHECK(f.invariants[i] > 0);
            CHECK(f.invariants[i + 1] % f.invariants[i] == 0);
        }
        // off-diagonal entries vanish
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(f.s[i][j] == 0);
    }
}

TEST_CASE("determinants") {
    CHECK(int_det({{3, 1}, {0, 5}}) == 15);
    CHECK(int_det({{2, 1}, {1, 2}}) == 3);
    CHECK(int_det({{5}}) == 5);
    CHECK(int_det({{1, 2}, {2, 4}}) == 0);
    CHECK(int_det({{2, 0, 0}, {0, 2, 0}, {1, 1, 2}}) == 8);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        IntMat a(2, std::vector<long long>(2));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        CHECK(int_det(a) == det2(a));
    }
}

TEST_CASE("rational solve") {
    using R = Rational;
    SUBCASE("unique") {
        auto s = solve_rational({{R(3), R(1)}, {R(0), R(5)}}, {R(1), R(1)});
        REQUIRE(s.consistent);
        REQUIRE(s.unique);
        CHECK(s.solution == std::vector<R>{R(4, 15), R(1, 5)});
    }
    SUBCASE("inconsistent") {
        auto s = solve_rational({{R(2)}, {R(1)}}, {R(1), R(1)});
        CHECK_FALSE(s.consistent);
    }
    SUBCASE("underdetermined") {
        auto s = solve_rational({{R(2), R(1)}}, {R(1)});
        CHECK(s.consistent);
        CHECK_FALSE(s.unique);
        CHECK(s.rank == 1);
    }
}
