#include <doctest.h>

#include <algorithm>

#include "wspindex/oracle.hpp"
#include "wspindex/svd.hpp"

using namespace wspindex;

TEST_CASE("mode count reproduces the local end index 1 - 2v") {
    for (long long v = 0; v <= 4; ++v) {
        for (auto w : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            auto detail = mode_count_detail(HalfCylinderProblem::make(v, w));
            CHECK(detail.index == 1 - 2 * v);
            CHECK(detail.kernel_dim >= 0);
            CHECK(detail.cokernel_dim >= 0);
            CHECK(detail.kernel_dim - detail.cokernel_dim == detail.index);
        }
    }
    // frozen kernel/cokernel splits
    auto v0 = mode_count_detail(HalfCylinderProblem::make(0, Rational(1, 2)));
    CHECK(v0.kernel_dim == 1);
    CHECK(v0.cokernel_dim == 0);
    auto v1 = mode_count_detail(HalfCylinderProblem::make(1, Rational(1, 2)));
    CHECK(v1.kernel_dim == 0);
    CHECK(v1.cokernel_dim == 1);
}

TEST_CASE("the index is constant between walls") {
    for (long long v = 0; v <= 3; ++v) {
        for (long long wall = -3; wall <= 2; ++wall) {
            long long reference = 0;
            bool first = true;
            for (auto frac : {Rational(1, 7), Rational(2, 5), Rational(1, 2), Rational(9, 10)}) {
                Rational w = Rational(wall) + frac;
                long long index = mode_count_index(HalfCylinderProblem::make(v, w));
                if (first) {
                    reference = index;
                    first = false;
                } else {
                    CHECK(index == reference);
                }
            }
        }
    }
}

TEST_CASE("weights on the walls are rejected") {
    CHECK_THROWS_AS(HalfCylinderProblem::make(0, Rational(1)), OnWallError);
    CHECK_THROWS_AS(HalfCylinderProblem::make(2, Rational(-3)), OnWallError);
    CHECK_THROWS_AS(HalfCylinderProblem::make(-1, Rational(1, 2)), ValidationError);
}

TEST_CASE("reversed orientation flips the winding contribution") {
    for (long long v = 0; v <= 4; ++v) {
        for (auto w : {Rational(1, 2), Rational(-5, 3), Rational(7, 4)}) {
            long long standard = mode_count_index(HalfCylinderProblem::make(v, w));
            long long reversed = mode_count_index(HalfCylinderProblem::make(v, w, true));
            CHECK(reversed == standard + 4 * v);
        }
    }
}

TEST_CASE("jump scan measures the wall multiplicity") {
    auto scan = jump_scan(0, {Rational(1, 2), Rational(3, 2), Rational(5, 2)});
    REQUIRE(scan.entries.size() == 3);
    CHECK(scan.entries[0].index == 1);
    CHECK(scan.entries[1].index == -1);
    CHECK(scan.entries[2].index == -3);
    CHECK(scan.differences == std::vector<long long>{-2, -2});
    CHECK(scan.multiplicity_consistent);
    REQUIRE(scan.per_wall_multiplicity.has_value());
    CHECK(*scan.per_wall_multiplicity == 2);

    auto single = jump_scan(2, {Rational(1, 3)});
    CHECK(single.entries.size() == 1);
    CHECK(single.differences.empty());

    auto within = jump_scan(1, {Rational(1, 5), Rational(1, 2), Rational(4, 5)});
    for (long long d : within.differences) CHECK(d == 0);

    CHECK_THROWS_AS(jump_scan(0, {Rational(1, 2), Rational(1, 3)}), ValidationError);
    CHECK_THROWS_AS(jump_scan(0, {Rational(1), Rational(3, 2)}), OnWallError);
}

TEST_CASE("numeric gluing certificates") {
    auto v1 = glue_numeric(1, Rational(1, 2));
    CHECK(v1.ind_plus == -1);
    CHECK(v1.ind_minus == 1);
    CHECK(v1.ind_glued == 0);
    CHECK(v1.additivity_pass);
    CHECK(v1.closed_form_pass);

    auto v0 = glue_numeric(0, Rational(1, 2));
    CHECK(v0.ind_plus == 1);
    CHECK(v0.ind_minus == 3);
    CHECK(v0.ind_glued == 4);

    for (long long v = 0; v <= 4; ++v) {
        for (auto w : {Rational(1, 2), Rational(7, 3), Rational(-4, 7)}) {
            auto cert = glue_numeric(v, w);
            CHECK(cert.additivity_pass);
            CHECK(cert.closed_form_pass);
        }
    }
}

TEST_CASE("discretization agrees with the exact count") {
    GridConfig grid;
    for (long long v : {0LL, 1LL, 2LL, 4LL}) {
        for (auto w : {Rational(1, 2), Rational(-1, 2), Rational(3, 2), Rational(-3, 2),
                       Rational(5, 2), Rational(3, 4)}) {
            auto problem = HalfCylinderProblem::make(v, w);
            auto result = discrete_index(problem, grid);
            CHECK(result.index == mode_count_index(problem));
            CHECK(result.gap_ratio >= grid.min_gap_ratio);
        }
    }
    auto spot = discrete_index(HalfCylinderProblem::make(2, Rational(1, 2)), grid);
    CHECK(spot.index == -3);
}

TEST_CASE("negative weights discretize too") {
    GridConfig grid;
    auto problem = HalfCylinderProblem::make(1, Rational(-1, 2));
    CHECK(discrete_index(problem, grid).index == mode_count_index(problem));

    auto reversed = HalfCylinderProblem::make(1, Rational(1, 2), true);
    CHECK(discrete_index(reversed, grid).index == mode_count_index(reversed));
}

TEST_CASE("unresolvable grids are reported ill-conditioned") {
    GridConfig grid;
    grid.n_theta = 2;
    CHECK_THROWS_AS(discrete_index(HalfCylinderProblem::make(0, Rational(1, 2)), grid),
                    IllConditionedError);
    GridConfig bad;
    bad.n_theta = 31;
    CHECK_THROWS_AS(discrete_index(HalfCylinderProblem::make(0, Rational(1, 2)), bad),
                    ValidationError);
}

TEST_CASE("blockwise singular values match the assembled operator") {
    GridConfig grid;
    grid.T = 4.0;
    grid.n_t = 6;
    grid.n_theta = 8;
    auto problem = HalfCylinderProblem::make(0, Rational(1, 2));
    auto blocks = discretized_blocks(problem, grid);
    REQUIRE_FALSE(blocks.empty());

    std::vector<double> pooled;
    for (const auto& b : blocks) {
        auto s = singular_values_serial(b);
        pooled.insert(pooled.end(), s.begin(), s.end());
    }
    std::sort(pooled.begin(), pooled.end(), std::greater<double>());

    auto global = singular_values_serial(block_diag(blocks));
    REQUIRE(global.size() == pooled.size());
    for (std::size_t i = 0; i < global.size(); ++i)
        CHECK(global[i] == doctest::Approx(pooled[i]).epsilon(1e-9));
}

TEST_CASE("parallel Jacobi matches the serial reference") {
    GridConfig grid;
    grid.T = 4.0;
    grid.n_t = 8;
    grid.n_theta = 12;
    auto blocks = discretized_blocks(HalfCylinderProblem::make(1, Rational(1, 4)), grid);
    auto global = block_diag(blocks);
    auto serial = singular_values_serial(global);
    auto parallel = singular_values_parallel(global);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(parallel[i] == doctest::Approx(serial[i]).epsilon(1e-9));
}
