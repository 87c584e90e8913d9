#include <doctest.h>

#include <random>

#include "wspindex/index.hpp"

using namespace wspindex;

namespace {

// Independent floor oracle: step an integer toward the value.
long long brute_floor(const Rational& r) {
    long long n = 0;
    while (Rational(n) > r) --n;
    while (Rational(n + 1) <= r) ++n;
    return n;
}

Rational random_offwall(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-40, 40), den(2, 9);
    while (true) {
        Rational r(num(rng), den(rng));
        if (!r.is_integer()) return r;
    }
}

WeightMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    WeightMatrix m;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < cols; ++c) row.push_back(random_offwall(rng));
        m.delta.push_back(row);
    }
    return m;
}

LineBundleData x5_line(std::vector<long long> nus, long long genus = 0) {
    LineBundleData line;
    line.q = Rational(1, 5);
    line.genus = genus;
    for (long long nu : nus) {
        line.a.push_back(Rational(nu, 5));
        line.v.push_back(nu);
        line.m.push_back(5);
    }
    return line;
}

} // namespace

TEST_CASE("local end index") {
    CHECK(local_end_index_smooth(0) == 1);
    CHECK(local_end_index_smooth(1) == -1);
    CHECK(local_end_index_smooth(3) == -5);
    CHECK_THROWS_AS(local_end_index_smooth(-1), ValidationError);
}

TEST_CASE("glued cylinder index") {
    CHECK(glued_cylinder_index(0) == 4);
    CHECK(glued_cylinder_index(1) == 0);
    for (long long v = 0; v <= 10; ++v)
        CHECK(glued_cylinder_index(v) == 2 * local_end_index_smooth(v) + 2);
}

TEST_CASE("index decomposition") {
    CHECK(decompose_index(9, {-1, -3, -5}) == 0);
    CHECK(decompose_index(7, {}) == 7);
    CHECK(decompose_index(0, {1, 1, 1, 1}) == 4);
}

TEST_CASE("transformation correction") {
    CValues census;
    census.c = {Rational(-1, 5), Rational(1, 5)};
    census.negative = 1;
    census.positive = 1;
    CHECK(transform(0, census, Metric::Smooth) == 1);
    CHECK(transform(5, census, Metric::Cylindrical) == 5);
    census.zero = 2;
    CHECK(transform(-2, census, Metric::Cylindrical) == 0);
}

TEST_CASE("smooth total index via three routes") {
    auto report = smooth_total_index(x5_line({1, 2, 3}));
    CHECK(report.total == 0);
    CHECK(report.interior == 9);
    CHECK(report.locals == std::vector<long long>{-1, -3, -5});
    CHECK(report.correction == 0);
    report.check_decomposition();

    // a broad point pushes the census term to 1
    auto broad = smooth_total_index(x5_line({0, 2, 4}));
    CHECK(broad.correction == 1);
    CHECK(broad.total == 1);
    CHECK(broad.locals == std::vector<long long>{1, -3, -7});

    // genus one, no marked points: everything vanishes
    for (auto text : {"x^5", "x^3 + y^3"}) {
        auto poly = make_qpoly(text);
        for (std::size_t j = 0; j < poly.t; ++j) {
            LineBundleData line;
            line.j = j;
            line.q = poly.weights[j];
            line.genus = 1;
            CHECK(smooth_total_index(line).total == 0);
        }
    }

    CHECK_THROWS_AS(smooth_total_index(x5_line({1, 1, 1})), NonIntegralDegreeError);
}

TEST_CASE("cylindrical report assembles reference plus correction") {
    auto line = x5_line({1, 2, 3});
    auto report = cylindrical_total_index(line, {-1, -3, -5});
    CHECK(report.metric == Metric::Cylindrical);
    CHECK(report.interior == 9);
    CHECK(report.correction == 0); // no a = 0 point, so no c = 0 under this metric
    CHECK(report.total == 0);

    auto broad_line = x5_line({0, 2, 4});
    auto broad = cylindrical_total_index(broad_line, {1, -3, -7});
    CHECK(broad.correction == 1);
    CHECK_THROWS_AS(cylindrical_total_index(line, {1}), ShapeMismatchError);
}

TEST_CASE("Lockhart-McOwen jump") {
    auto unit = SpectrumSpec::integers(1);
    CHECK(lm_jump(unit, Rational(1, 2), Rational(5, 2)) == 2);
    CHECK(lm_jump(unit, Rational(1, 5), Rational(4, 5)) == 0);
    auto doubled = SpectrumSpec::integers(2);
    CHECK(lm_jump(doubled, Rational(-1, 2), Rational(1, 2)) == 2);

    auto expl = SpectrumSpec::explicit_points({{Rational(-1), 3}, {Rational(1, 2), 2}});
    CHECK(lm_jump(expl, Rational(-3, 2), Rational(2)) == 5);
    CHECK(lm_jump(expl, Rational(0), Rational(2)) == 2);
    CHECK_THROWS_AS(lm_jump(expl, Rational(1, 2), Rational(2)), OnWallError);
    CHECK_THROWS_AS(lm_jump(unit, Rational(1), Rational(5, 2)), OnWallError);
    CHECK_THROWS_AS(lm_jump(unit, Rational(5, 2), Rational(1, 2)), ValidationError);
}

TEST_CASE("lm_jump on the unit integer lattice matches dbar_jump") {
    std::mt19937_64 rng(3);
    auto unit = SpectrumSpec::integers(1);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = random_offwall(rng), b = random_offwall(rng);
        if (!(a < b)) continue;
        CHECK(lm_jump(unit, a, b) == dbar_jump(a, b));
    }
}

TEST_CASE("dbar jump") {
    CHECK(dbar_jump(Rational(1, 2), Rational(5, 2)) == 2);
    CHECK(dbar_jump(Rational(7, 3), Rational(7, 3)) == 0);
    CHECK(dbar_jump(Rational(-3, 2), Rational(3, 2)) == 3);
    CHECK_THROWS_AS(dbar_jump(Rational(2), Rational(1, 2)), OnWallError);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = random_offwall(rng), b = random_offwall(rng);
        CHECK(dbar_jump(a, b) == brute_floor(b) - brute_floor(a));
    }
}

TEST_CASE("spin jump") {
    WeightMatrix half, three_half;
    for (int r = 0; r < 2; ++r) {
        half.delta.push_back({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
        three_half.delta.push_back({Rational(3, 2), Rational(3, 2), Rational(3, 2)});
    }
    CHECK(spin_jump(half, three_half) == 6);
    CHECK(spin_jump(half, half) == 0);

    // the 1x1 case reduces to the single-end jump
    WeightMatrix a, b;
    a.delta = {{Rational(1, 3)}};
    b.delta = {{Rational(8, 3)}};
    CHECK(spin_jump(a, b) == dbar_jump(Rational(1, 3), Rational(8, 3)));

    WeightMatrix wrong;
    wrong.delta = {{Rational(1, 2)}};
    CHECK_THROWS_AS(spin_jump(half, wrong), ShapeMismatchError);
    WeightMatrix walled = half;
    walled.delta[0][0] = Rational(2);
    CHECK(walled.on_wall_entries().size() == 1);
    CHECK_THROWS_AS(spin_jump(walled, three_half), OnWallError);
}

TEST_CASE("spin jump antisymmetry and additivity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_matrix(rng, 2, 3);
        auto b = random_matrix(rng, 2, 3);
        auto c = random_matrix(rng, 2, 3);
        CHECK(spin_jump(a, b) == -spin_jump(b, a));
        CHECK(spin_jump(a, c) == spin_jump(a, b) + spin_jump(b, c));
    }
}

TEST_CASE("witten index and the broad census") {
    auto poly = make_qpoly("x^3 + y^3");
    DecoratedOrbicurve curve;
    curve.genus = 0;
    GroupElement identity{{Rational(0), Rational(0)}};
    curve.points.push_back(MarkedPoint::make(identity, 3));
    curve.points.push_back(MarkedPoint::make(identity, 3));
    auto lines = validate_structure(curve, poly);
    REQUIRE(lines.ok);
    CHECK(broad_census(lines.lines) == 4);
    CHECK(witten_index(lines.lines, {2, 5}) == 7 - 4);

    // all-narrow decorations leave the plain sum
    DecoratedOrbicurve narrow;
    narrow.genus = 1;
    for (int i = 0; i < 3; ++i)
        narrow.points.push_back(
            MarkedPoint::make(GroupElement{{Rational(1, 3), Rational(1, 3)}}, 3));
    auto narrow_lines = validate_structure(narrow, poly);
    REQUIRE(narrow_lines.ok);
    CHECK(broad_census(narrow_lines.lines) == 0);
    CHECK(witten_index(narrow_lines.lines, {4, -2}) == 2);

    CHECK_THROWS_AS(witten_index(lines.lines, {1}), ShapeMismatchError);
}

TEST_CASE("witten differences equal the matrix jump") {
    std::mt19937_64 rng(29);
    auto poly = make_qpoly("x^3 + y^3");
    DecoratedOrbicurve curve;
    curve.genus = 1;
    GroupElement g1{{Rational(1, 3), Rational(2, 3)}};
    GroupElement g2{{Rational(1, 3), Rational(0)}};
    curve.points.push_back(MarkedPoint::make(g1, 3));
    curve.points.push_back(MarkedPoint::make(g2, 3));
    auto lines = validate_structure(curve, poly);
    REQUIRE(lines.ok);

    std::uniform_int_distribution<long long> base(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        auto reference = random_matrix(rng, 2, 2);
        auto delta = random_matrix(rng, 2, 2);
        auto delta_prime = random_matrix(rng, 2, 2);
        std::vector<long long> at_delta, at_delta_prime;
        for (std::size_t j = 0; j < 2; ++j) {
            long long ref_index = base(rng);
            at_delta.push_back(
                propagate_dbar_index(ref_index, reference.delta[j], delta.delta[j]));
            at_delta_prime.push_back(
                propagate_dbar_index(ref_index, reference.delta[j], delta_prime.delta[j]));
        }
        long long difference = witten_index(lines.lines, at_delta) -
                               witten_index(lines.lines, at_delta_prime);
        CHECK(difference == spin_jump(delta, delta_prime));
    }
}

TEST_CASE("gluing certificates") {
    for (long long v = 0; v <= 10; ++v) {
        auto cert = gluing_check(1 - 2 * v, 3 - 2 * v, 4 - 4 * v);
        CHECK(cert.pass);
    }
    CHECK_FALSE(gluing_check(0, 0, 1).pass);
}
