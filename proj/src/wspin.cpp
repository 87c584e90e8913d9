#include "wspindex/wspin.hpp"

namespace wspindex {

MarkedPoint MarkedPoint::make(GroupElement gamma, long long m) {
    MarkedPoint p;
    long long ord = gamma.order();
    if (m == 0) m = ord;
    if (m <= 0 || m % ord != 0)
        throw ValidationError("chart order " + std::to_string(m) +
                              " is not a multiple of the decoration order " + std::to_string(ord));
    p.gamma = std::move(gamma);
    p.m = m;
    return p;
}

long long MarkedPoint::nu(std::size_t j) const {
    Rational scaled = gamma.phases.at(j) * Rational(m);
    if (!scaled.is_integer())
        throw InternalInconsistencyError("m * Theta_j is not an integer");
    return scaled.num();
}

PointClass classify_point(const LineBundleData& data, std::size_t l) {
    if (l >= data.v.size())
        throw IndexOutOfRangeError("point index " + std::to_string(l + 1) + " of " +
                                   std::to_string(data.v.size()));
    return data.v[l] == 0 ? PointClass::Broad : PointClass::Narrow;
}

CValues c_values(const LineBundleData& data, Metric metric) {
    CValues out;
    out.c.reserve(data.a.size());
    for (const auto& a : data.a) {
        Rational c = metric == Metric::Smooth ? a - data.q : a;
        if (c.sign() < 0) ++out.negative;
        else if (c.sign() == 0) ++out.zero;
        else ++out.positive;
        out.c.push_back(c);
    }
    return out;
}

Rational line_degree_rational(const LineBundleData& data) {
    Rational sum_a(0);
    for (const auto& a : data.a) sum_a += a;
    long long euler = 2 * data.genus - 2 + (long long)data.k();
    return data.q * Rational(euler) - sum_a;
}

long long line_degree(const LineBundleData& data) {
    Rational deg = line_degree_rational(data);
    if (!deg.is_integer()) throw NonIntegralDegreeError(data.j, deg);
    return deg.num();
}

StructureValidation validate_structure(const DecoratedOrbicurve& curve, const QPoly& poly) {
    StructureValidation out;
    for (const auto& p : curve.points) {
        if (p.gamma.phases.size() != poly.t)
            throw ShapeMismatchError("decoration rank does not match the variable count");
        if (!is_symmetry(poly, p.gamma))
            throw ValidationError("decoration " + p.gamma.str() +
                                  " is not a diagonal symmetry of the polynomial");
    }
    out.lines.reserve(poly.t);
    for (std::size_t j = 0; j < poly.t; ++j) {
        LineBundleData line;
        line.j = j;
        line.q = poly.weights[j];
        line.genus = curve.genus;
        for (const auto& p : curve.points) {
            line.a.push_back(p.a(j));
            line.v.push_back(p.nu(j));
            line.m.push_back(p.m);
        }
        Rational deg = line_degree_rational(line);
        if (!deg.is_integer()) {
            out.failing_lines.push_back(j);
            out.failing_degrees.push_back(deg);
        }
        out.lines.push_back(std::move(line));
    }
    out.ok = out.failing_lines.empty();
    return out;
}

bool monomial_broad_at(const DecoratedOrbicurve& curve, const QPoly& poly, std::size_t l) {
    if (l >= curve.points.size())
        throw IndexOutOfRangeError("point index " + std::to_string(l + 1) + " of " +
                                   std::to_string(curve.points.size()));
    const auto& gamma = curve.points[l].gamma;
    for (const auto& mono : poly.monomials) {
        bool all_broad = true;
        for (std::size_t j = 0; j < poly.t; ++j) {
            if (mono.exponents[j] > 0 && !gamma.phases[j].is_zero()) {
                all_broad = false;
                break;
            }
        }
        if (all_broad) return true;
    }
    return false;
}

} // namespace wspindex
