#pragma once

#include <string>
#include <vector>

#include "wspindex/qpoly.hpp"

namespace wspindex {

// Marked point with cyclic orbifold chart of order m and decoration gamma in H.
// Per line j the orbifold action numerator is nu_j = m * Theta_j, an integer
// in [0, m).
struct MarkedPoint {
    GroupElement gamma;
    long long m = 1;

    // Validates m (multiple of ord(gamma), default exactly ord(gamma)).
    static MarkedPoint make(GroupElement gamma, long long m = 0);

    long long nu(std::size_t j) const; // m * Theta_j
    Rational a(std::size_t j) const { return gamma.phases.at(j); } // nu/m = Theta_j
};

struct DecoratedOrbicurve {
    long long genus = 0;
    std::vector<MarkedPoint> points;

    std::size_t k() const { return points.size(); }
};

enum class Metric { Smooth, Cylindrical };

inline const char* metric_name(Metric m) {
    return m == Metric::Smooth ? "smooth" : "cylindrical";
}

enum class PointClass { Broad, Narrow };

// All per-line data the index formulas consume (one instance per variable j).
struct LineBundleData {
    std::size_t j = 0;          // variable index
    Rational q;                 // fractional degree q_j
    long long genus = 0;
    std::vector<Rational> a;    // a_j(h_l) = nu_{j,l} / m_l
    std::vector<long long> v;   // nu_{j,l}
    std::vector<long long> m;   // chart orders m_l

    std::size_t k() const { return a.size(); }
};

// Broad iff the orbifold action on line j at point l is trivial (nu = 0).
PointClass classify_point(const LineBundleData& data, std::size_t l);

struct CValues {
    std::vector<Rational> c;
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;
};

// Smooth metric: c_{jl} = a_j(h_l) - q_j; cylindrical metric: c_{jl} = a_j(h_l).
CValues c_values(const LineBundleData& data, Metric metric);

// deg|L_j| = q_j (2g - 2 + k) - sum_l a_j(h_l). The rational value, before the
// integrality selection rule is applied.
Rational line_degree_rational(const LineBundleData& data);

// Integral degree; throws NonIntegralDegreeError carrying the offending value.
long long line_degree(const LineBundleData& data);

class NonIntegralDegreeError : public Error {
public:
    NonIntegralDegreeError(std::size_t j, Rational value)
        : Error("non_integral_degree",
                "deg|L_" + std::to_string(j + 1) + "| = " + value.str() + " is not an integer"),
          j_(j), value_(value) {}

    std::size_t j() const noexcept { return j_; }
    const Rational& value() const noexcept { return value_; }

private:
    std::size_t j_;
    Rational value_;
};

struct StructureValidation {
    bool ok = false;
    std::vector<LineBundleData> lines;          // populated for all j either way
    std::vector<std::size_t> failing_lines;     // j with non-integral degree
    std::vector<Rational> failing_degrees;      // matching rational degrees
};

// Builds LineBundleData for every j and applies the integrality selection
// rule; never throws, callers inspect `ok` (sweeps need the rejects too).
StructureValidation validate_structure(const DecoratedOrbicurve& curve, const QPoly& poly);

// Monomial-level broadness: some monomial of W has every line occurring in it
// broad at point l. Exposed for completeness; no index formula consumes it.
bool monomial_broad_at(const DecoratedOrbicurve& curve, const QPoly& poly, std::size_t l);

} // namespace wspindex
