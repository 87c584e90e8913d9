#include <doctest.h>

#include "wspindex/report.hpp"

using namespace wspindex;

TEST_CASE("canonical dumps are fixed points of parse") {
    auto poly = make_qpoly("x^5");
    DecoratedOrbicurve curve;
    curve.genus = 0;
    for (long long nu : {1, 2, 3})
        curve.points.push_back(MarkedPoint::make(GroupElement{{Rational(nu, 5)}}, 5));
    auto lines = validate_structure(curve, poly);
    REQUIRE(lines.ok);

    Json report;
    report["polynomial"] = to_json(poly);
    report["index"] = to_json(smooth_total_index(lines.lines[0]));
    report["glue"] = to_json(glue_numeric(1, Rational(1, 2)));
    GridConfig grid;
    auto problem = HalfCylinderProblem::make(0, Rational(1, 2));
    report["discrete"] = to_json(discrete_index(problem, grid), problem, grid);
    report["scan"] = to_json(jump_scan(0, {Rational(1, 2), Rational(3, 2)}));

    std::string once = canonical_dump(report);
    std::string twice = canonical_dump(Json::parse(once));
    CHECK(once == twice);
}

TEST_CASE("rationals serialize as p/q strings") {
    CHECK(rational_json(Rational(4, 15)) == "4/15");
    CHECK(rational_from_json(Json("4/15"), "x") == Rational(4, 15));
    CHECK(rational_from_json(Json(-3), "x") == Rational(-3));
    CHECK_THROWS_AS(rational_from_json(Json(1.5), "x"), ValidationError);
}

TEST_CASE("curve loading validates the schema") {
    auto poly = make_qpoly("x^5");

    auto good = Json::parse(R"({"genus": 0, "points": [
        {"decoration": ["1/5"], "order": 5},
        {"decoration": ["2/5"]},
        {"decoration": ["3/5"]}
    ]})");
    auto curve = load_curve(good, poly);
    CHECK(curve.k() == 3);
    CHECK(curve.points[1].m == 5); // defaults to the decoration order

    CHECK_THROWS_AS(load_curve(Json::parse(R"({"points": []})"), poly), ValidationError);
    CHECK_THROWS_AS(load_curve(Json::parse(R"({"genus": -1, "points": []})"), poly),
                    ValidationError);
    CHECK_THROWS_AS(
        load_curve(Json::parse(R"({"genus": 0, "points": [{"decoration": ["1/7"]}]})"), poly),
        ValidationError);
    CHECK_THROWS_AS(
        load_curve(Json::parse(R"({"genus": 0, "points": [{"decoration": ["1/5", "0"]}]})"),
                   poly),
        ValidationError);
    CHECK_THROWS_AS(
        load_curve(
            Json::parse(R"({"genus": 0, "points": [{"decoration": ["1/5"], "order": 7}]})"),
            poly),
        ValidationError);
}

TEST_CASE("weight matrix loading") {
    auto j = Json::parse(R"({
        "delta": [["1/2", "1/2"], ["1/2", "-7/2"]],
        "delta_prime": [["3/2", "3/2"], ["3/2", "3/2"]]
    })");
    auto delta = load_weight_matrix(j, "delta");
    CHECK(delta.rows() == 2);
    CHECK(delta.cols() == 2);
    CHECK(delta.delta[1][1] == Rational(-7, 2));
    CHECK(has_weight_matrix(j, "delta_prime"));
    CHECK_FALSE(has_weight_matrix(j, "delta_double_prime"));
    CHECK_THROWS_AS(load_weight_matrix(j, "missing"), ValidationError);

    auto ragged = Json::parse(R"({"delta": [["1/2"], ["1/2", "1/2"]]})");
    CHECK_THROWS_AS(load_weight_matrix(ragged, "delta"), ValidationError);
}

TEST_CASE("error reports carry machine codes") {
    try {
        make_qpoly("x^2 + x");
        FAIL("expected no_solution");
    } catch (const Error& e) {
        auto j = error_json(e);
        CHECK(j["error"]["code"] == "no_solution");
    }
}
