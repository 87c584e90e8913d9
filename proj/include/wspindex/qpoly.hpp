#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wspindex/intlin.hpp"
#include "wspindex/rational.hpp"

namespace wspindex {

// One monomial c * x1^b1 * ... * xt^bt. The coefficient is carried for
// round-tripping only; no index formula depends on it.
struct Monomial {
    std::vector<long long> exponents;
    Rational coefficient = Rational(1);
};

// Quasi-homogeneous polynomial with solved fractional weights.
// Invariants: every monomial row b satisfies sum_i b_i * q_i = 1 exactly,
// and gcd(d, k_1, ..., k_t) = 1.
struct QPoly {
    std::size_t t = 0;                  // variable count
    std::vector<std::string> variables; // first-appearance order
    std::vector<Monomial> monomials;
    std::vector<Rational> weights;      // q_i = k_i / d, all positive
    long long degree = 0;               // d
    std::vector<long long> degree_numerators; // k_i

    IntMat exponent_matrix() const {
        IntMat b;
        b.reserve(monomials.size());
        for (const auto& m : monomials) b.push_back(m.exponents);
        return b;
    }
};

// Element of the diagonal symmetry group H, stored as rational phases in [0,1);
// the element acts on coordinate j by exp(2*pi*i*phases[j]).
struct GroupElement {
    std::vector<Rational> phases;

    bool operator==(const GroupElement& o) const { return phases == o.phases; }
    bool operator<(const GroupElement& o) const; // lexicographic, for canonical ordering

    GroupElement add(const GroupElement& o) const; // componentwise mod 1
    GroupElement inverse() const;
    long long order() const;                       // lcm of phase denominators
    bool is_identity() const;
    std::string str() const;
};

struct SymmetryGroup {
    long long order = 0;
    std::vector<GroupElement> elements;   // sorted; empty when not materialized
    bool elements_materialized = false;
    std::vector<GroupElement> generators; // one per invariant factor > 1
    std::vector<long long> generator_orders;

    // Full element list; throws OrderCapExceededError when only generators
    // were materialized because the order exceeded the enumeration cap.
    const std::vector<GroupElement>& all_elements() const;
    bool contains(const GroupElement& g, const QPoly& poly) const;
};

// Membership test straight from the defining congruences B * theta in Z^s;
// works regardless of whether the element list was materialized.
bool is_symmetry(const QPoly& poly, const GroupElement& g);

// --- parsing ------------------------------------------------------------

// Parsed sum of monomials before weights are solved.
struct ParsedPoly {
    std::size_t t = 0;
    std::vector<std::string> variables;
    std::vector<Monomial> monomials;
};

// Grammar: poly := term ('+' term)*; term := [coeff '*'] factor ('*' factor)*;
// factor := var ['^' uint]; coeff := int | int '/' uint. Whitespace is
// insignificant and juxtaposition multiplies, so "x^2y" means x^2 * y.
// Variable names are a letter followed by digits ("x", "y", "x1").
ParsedPoly parse_poly(const std::string& text);

// Inverse of parse_poly up to whitespace; round-trips the exponent matrix.
std::string render_poly(const ParsedPoly& poly);
std::string render_poly(const QPoly& poly);

// --- weights ------------------------------------------------------------

// Solve B * q = (1,...,1) exactly and populate weights/degree data.
// Errors: NoSolutionError, WeightsNotUniqueError, NonPositiveWeightError.
QPoly compute_weights(const ParsedPoly& parsed);

// Convenience: parse + solve.
QPoly make_qpoly(const std::string& text);

// --- nondegeneracy ------------------------------------------------------

enum class Singularity { Verified, Assumed, Refuted };

struct NondegeneracyReport {
    bool weights_unique = false;
    Singularity singularity = Singularity::Assumed;
    std::string detail; // e.g. atom decomposition or reason for refutation
};

// Weight uniqueness from the rank test; isolated-singularity certification
// only for invertible polynomials (square exponent matrix) that split into
// Fermat/chain/loop atoms. Everything else is reported Assumed.
NondegeneracyReport check_nondegeneracy(const ParsedPoly& parsed);
NondegeneracyReport check_nondegeneracy(const QPoly& poly);

// --- symmetry group -----------------------------------------------------

inline constexpr long long kDefaultGroupCap = 1000000;

// Enumerate H = {theta : B * theta in Z^s} via the Smith normal form of B.
// Requires unique weights (else InfiniteGroupError). When the order exceeds
// `cap`, only generators and the order are materialized.
SymmetryGroup symmetry_group(const QPoly& poly, long long cap = kDefaultGroupCap);

// Root-of-unity containment: each phase times the reduced denominator of
// the matching weight is an integer.
bool phase_containment_holds(const QPoly& poly, const GroupElement& g);

} // namespace wspindex
