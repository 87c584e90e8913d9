#include <doctest.h>

#include <random>
#include <set>

#include "wspindex/qpoly.hpp"

using namespace wspindex;

namespace {

// Independent 2x2 weight oracle: Cramer's rule on B q = (1,1).
std::vector<Rational> cramer_weights(long long b11, long long b12, long long b21, long long b22) {
    Rational det = Rational(b11 * b22 - b12 * b21);
    return {(Rational(b22) - Rational(b12)) / det, (Rational(b11) - Rational(b21)) / det};
}

// Brute-force enumeration of H for a 2-variable polynomial: try every phase
// pair with denominator dividing `span`.
std::set<std::vector<Rational>> brute_group(const QPoly& poly, long long span) {
    std::set<std::vector<Rational>> found;
    for (long long a = 0; a < span; ++a) {
        for (long long b = 0; b < span; ++b) {
            GroupElement g{{Rational(a, span), Rational(b, span)}};
            if (is_symmetry(poly, g)) found.insert(g.phases);
        }
    }
    return found;
}

} // namespace

TEST_CASE("parser on the reference inputs") {
    auto p = parse_poly("x^3 + y^3");
    CHECK(p.t == 2);
    REQUIRE(p.monomials.size() == 2);
    CHECK(p.monomials[0].exponents == std::vector<long long>{3, 0});
    CHECK(p.monomials[1].exponents == std::vector<long long>{0, 3});

    auto q = parse_poly("x^3*y + y^5");
    CHECK(q.monomials[0].exponents == std::vector<long long>{3, 1});
    CHECK(q.monomials[1].exponents == std::vector<long long>{0, 5});

    auto juxt = parse_poly("x^2y + xy^2");
    CHECK(juxt.t == 2);
    CHECK(juxt.monomials[0].exponents == std::vector<long long>{2, 1});
    CHECK(juxt.monomials[1].exponents == std::vector<long long>{1, 2});

    auto coeff = parse_poly("2*x^3 + 1/2 * y^3");
    CHECK(coeff.monomials[0].coefficient == Rational(2));
    CHECK(coeff.monomials[1].coefficient == Rational(1, 2));

    auto named = parse_poly("x1^2*x2 + x2^3");
    CHECK(named.variables == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("parser rejects malformed input with a position") {
    try {
        parse_poly("x^3 + + y");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 6); // the second '+'
    }
    CHECK_THROWS_AS(parse_poly(""), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^-2"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("3 + x"), SyntaxError);   // constant term
    CHECK_THROWS_AS(parse_poly("0*x"), SyntaxError);     // zero monomial
    CHECK_THROWS_AS(parse_poly("x + -x"), SyntaxError);  // cancels to zero
    CHECK_THROWS_AS(parse_poly("x*"), SyntaxError);
}

TEST_CASE("weights on the reference inputs") {
    auto fermat = make_qpoly("x^3 + y^3");
    CHECK(fermat.weights == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
    CHECK(fermat.degree == 3);
    CHECK(fermat.degree_numerators == std::vector<long long>{1, 1});

    auto chain = make_qpoly("x^3*y + y^5");
    CHECK(chain.weights == std::vector<Rational>{Rational(4, 15), Rational(1, 5)});
    CHECK(chain.degree == 15);
    CHECK(chain.degree_numerators == std::vector<long long>{4, 3});
    CHECK(chain.weights == cramer_weights(3, 1, 0, 5));

    auto loop = make_qpoly("x^2y + xy^2");
    CHECK(loop.weights == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
    CHECK(loop.weights == cramer_weights(2, 1, 1, 2));
}

TEST_CASE("weight errors") {
    CHECK_THROWS_AS(make_qpoly("x^2*y"), WeightsNotUniqueError);
    CHECK_THROWS_AS(make_qpoly("x^2 + x"), NoSolutionError);
    CHECK_THROWS_AS(make_qpoly("x*y + y"), NonPositiveWeightError);
}

TEST_CASE("every monomial row satisfies sum b_i q_i = 1") {
    for (auto text : {"x^5", "x^3 + y^3", "x^3*y + y^5", "x^2y + xy^2",
                      "x^4 + y^6 + x^2*y^3", "x^3 + x*y^2 + z^2"}) {
        auto poly = make_qpoly(text);
        for (const auto& mono : poly.monomials) {
            Rational dot(0);
            for (std::size_t i = 0; i < poly.t; ++i)
                dot += Rational(mono.exponents[i]) * poly.weights[i];
            CHECK(dot == Rational(1));
        }
    }
}

TEST_CASE("nondegeneracy certification") {
    auto fermat = check_nondegeneracy(parse_poly("x^3 + y^3"));
    CHECK(fermat.weights_unique);
    CHECK(fermat.singularity == Singularity::Verified);

    auto chain = check_nondegeneracy(parse_poly("x^3*y + y^5"));
    CHECK(chain.weights_unique);
    CHECK(chain.singularity == Singularity::Verified);

    auto loop = check_nondegeneracy(parse_poly("x^2y + xy^2"));
    CHECK(loop.singularity == Singularity::Verified);

    auto underdetermined = check_nondegeneracy(parse_poly("x^2*y"));
    CHECK_FALSE(underdetermined.weights_unique);
    CHECK(underdetermined.singularity == Singularity::Assumed);

    // x^2 z + y^2 z + z^2 vanishes to second order along x = iy, z = 0
    auto branched = check_nondegeneracy(parse_poly("x^2*z + y^2*z + z^2"));
    CHECK(branched.weights_unique);
    CHECK(branched.singularity == Singularity::Refuted);

    auto linear = check_nondegeneracy(parse_poly("x"));
    CHECK(linear.singularity == Singularity::Refuted);

    auto wide = check_nondegeneracy(parse_poly("x^2*y^2 + x^5"));
    CHECK(wide.singularity == Singularity::Assumed);
}

TEST_CASE("symmetry group of x^4") {
    auto poly = make_qpoly("x^4");
    auto group = symmetry_group(poly);
    CHECK(group.order == 4);
    REQUIRE(group.elements_materialized);
    std::vector<Rational> phases;
    for (const auto& e : group.elements) phases.push_back(e.phases[0]);
    CHECK(phases == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2),
                                          Rational(3, 4)});
}

TEST_CASE("symmetry group vs brute enumeration") {
    SUBCASE("x^3 + y^3") {
        auto poly = make_qpoly("x^3 + y^3");
        auto group = symmetry_group(poly);
        CHECK(group.order == 9);
        auto brute = brute_group(poly, 3);
        REQUIRE(brute.size() == 9);
        for (const auto& e : group.all_elements()) CHECK(brute.count(e.phases) == 1);
    }
    SUBCASE("x^3*y + y^5") {
        auto poly = make_qpoly("x^3*y + y^5");
        auto group = symmetry_group(poly);
        CHECK(group.order == 15);
        CHECK(group.order == int_det({{3, 1}, {0, 5}}));
        auto brute = brute_group(poly, 15);
        REQUIRE(brute.size() == 15);
        for (const auto& e : group.all_elements()) CHECK(brute.count(e.phases) == 1);
    }
    SUBCASE("x^2y + xy^2") {
        auto poly = make_qpoly("x^2y + xy^2");
        auto group = symmetry_group(poly);
        CHECK(group.order == 3);
        auto brute = brute_group(poly, 3);
        CHECK(brute.size() == 3);
    }
}

TEST_CASE("group axioms and containment") {
    for (auto text : {"x^5", "x^3 + y^3", "x^3*y + y^5", "x^2y + xy^2"}) {
        auto poly = make_qpoly(text);
        auto group = symmetry_group(poly);
        const auto& elements = group.all_elements();
        CHECK((long long)elements.size() == group.order);

        bool identity_found = false;
        for (const auto& e : elements) identity_found = identity_found || e.is_identity();
        CHECK(identity_found);

        std::set<std::vector<Rational>> lookup;
        for (const auto& e : elements) lookup.insert(e.phases);
        for (const auto& a : elements) {
            CHECK(lookup.count(a.inverse().phases) == 1);
            CHECK(phase_containment_holds(poly, a));
            for (const auto& b : elements)
                CHECK(lookup.count(a.add(b).phases) == 1);
        }

        // order divides the product of the reduced weight denominators
        long long product = 1;
        for (const auto& q : poly.weights) product *= q.den();
        CHECK(product % group.order == 0);
    }
}

TEST_CASE("enumeration cap yields generators only") {
    auto poly = make_qpoly("x^3 + y^3");
    auto group = symmetry_group(poly, 5);
    CHECK(group.order == 9);
    CHECK_FALSE(group.elements_materialized);
    CHECK_FALSE(group.generators.empty());
    CHECK_THROWS_AS(group.all_elements(), OrderCapExceededError);
}

TEST_CASE("infinite group is rejected") {
    QPoly poly;
    poly.t = 2;
    poly.variables = {"x", "y"};
    poly.monomials = {Monomial{{2, 1}, Rational(1)}};
    poly.weights = {Rational(1, 4), Rational(1, 2)};
    poly.degree = 4;
    poly.degree_numerators = {1, 2};
    CHECK_THROWS_AS(symmetry_group(poly), InfiniteGroupError);
}

TEST_CASE("parse of render is the identity on exponent matrices") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> tv(1, 4), rows(1, 4), expo(0, 6), coeff(-5, 5),
        den(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        ParsedPoly original;
        original.t = (std::size_t)tv(rng);
        for (std::size_t i = 0; i < original.t; ++i)
            original.variables.push_back("x" + std::to_string(i + 1));
        std::set<std::vector<long long>> seen;
        int r = rows(rng);
        for (int row = 0; row < r; ++row) {
            std::vector<long long> e(original.t, 0);
            bool nonzero = false;
            for (auto& x : e) {
                // the first row touches every variable so first-appearance
                // order survives the round trip
                x = original.monomials.empty() ? expo(rng) + 1 : expo(rng);
                nonzero = nonzero || x > 0;
            }
            if (!nonzero || seen.count(e)) continue;
            seen.insert(e);
            long long c = coeff(rng);
            if (c == 0) c = 1;
            original.monomials.push_back(Monomial{e, Rational(c, den(rng))});
        }
        if (original.monomials.empty()) continue;
        auto round_tripped = parse_poly(render_poly(original));
        REQUIRE(round_tripped.monomials.size() == original.monomials.size());
        for (std::size_t i = 0; i < original.monomials.size(); ++i) {
            CHECK(round_tripped.monomials[i].exponents == original.monomials[i].exponents);
            CHECK(round_tripped.monomials[i].coefficient == original.monomials[i].coefficient);
        }
    }
}
