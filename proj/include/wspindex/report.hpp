#pragma once

#include <string>

#include <json.hpp>

#include "wspindex/index.hpp"
#include "wspindex/oracle.hpp"
#include "wspindex/qpoly.hpp"
#include "wspindex/sweep.hpp"

namespace wspindex {

using Json = nlohmann::json;

// Canonical serialization: keys sorted (the parser's map order), rationals as
// "p/q" strings, two-space indent, trailing newline. parse(dump(x)) re-dumps
// byte-identically.
std::string canonical_dump(const Json& j);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& what);

Json to_json(const GroupElement& g);
Json to_json(const SymmetryGroup& g);
Json to_json(const NondegeneracyReport& r);
Json to_json(const QPoly& p);
Json to_json(const IndexReport& r);
Json to_json(const GluingCertificate& c);
Json to_json(const GlueCertificate& c);
Json to_json(const JumpScanResult& r);
Json to_json(const ModeCountDetail& d, const HalfCylinderProblem& problem);
Json to_json(const DiscreteIndexResult& d, const HalfCylinderProblem& problem,
             const GridConfig& grid);
Json to_json(const SweepSummary& s);

Json error_json(const Error& e);

// Curve description: {"genus": g, "points": [{"decoration": ["p/q", ...],
// "order": m?}, ...]}; decorations are validated against H of the polynomial.
DecoratedOrbicurve load_curve(const Json& j, const QPoly& poly);

// Weight matrix file: {"delta": [["p/q", ...], ...], "delta_prime": optional}.
WeightMatrix load_weight_matrix(const Json& j, const std::string& field);
bool has_weight_matrix(const Json& j, const std::string& field);

} // namespace wspindex
