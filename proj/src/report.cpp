#include "wspindex/report.hpp"

namespace wspindex {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ValidationError(what + ": expected an integer or a \"p/q\" string");
}

Json to_json(const GroupElement& g) {
    Json phases = Json::array();
    for (const auto& p : g.phases) phases.push_back(rational_json(p));
    return phases;
}

Json to_json(const SymmetryGroup& g) {
    Json out;
    out["order"] = g.order;
    out["elements_materialized"] = g.elements_materialized;
    Json generators = Json::array();
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        Json gen;
        gen["phases"] = to_json(g.generators[i]);
        gen["order"] = g.generator_orders[i];
        generators.push_back(gen);
    }
    out["generators"] = generators;
    if (g.elements_materialized) {
        Json elements = Json::array();
        for (const auto& e : g.elements) elements.push_back(to_json(e));
        out["elements"] = elements;
    }
    return out;
}

Json to_json(const NondegeneracyReport& r) {
    Json out;
    out["weights_unique"] = r.weights_unique;
    switch (r.singularity) {
        case Singularity::Verified: out["isolated_singularity"] = "verified"; break;
        case Singularity::Assumed: out["isolated_singularity"] = "assumed"; break;
        case Singularity::Refuted: out["isolated_singularity"] = "refuted"; break;
    }
    out["detail"] = r.detail;
    return out;
}

Json to_json(const QPoly& p) {
    Json out;
    out["polynomial"] = render_poly(p);
    out["variables"] = p.variables;
    Json weights = Json::array();
    for (const auto& q : p.weights) weights.push_back(rational_json(q));
    out["weights"] = weights;
    out["degree"] = p.degree;
    out["degree_numerators"] = p.degree_numerators;
    Json rows = Json::array();
    for (const auto& m : p.monomials) rows.push_back(m.exponents);
    out["exponent_matrix"] = rows;
    return out;
}

Json to_json(const IndexReport& r) {
    Json out;
    out["line"] = r.j + 1;
    out["metric"] = metric_name(r.metric);
    out["total"] = r.total;
    out["total_theorem"] = r.total_theorem;
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        Json term;
        term["theorem"] = t.theorem;
        term["name"] = t.name;
        term["value"] = t.value;
        if (t.point) term["point"] = *t.point + 1;
        terms.push_back(term);
    }
    out["terms"] = terms;
    out["warnings"] = r.warnings;
    return out;
}

Json to_json(const GluingCertificate& c) {
    Json out;
    out["ind_plus"] = c.ind_plus;
    out["ind_minus"] = c.ind_minus;
    out["ind_glued"] = c.ind_glued;
    out["pass"] = c.pass;
    return out;
}

Json to_json(const GlueCertificate& c) {
    Json out;
    out["v"] = c.v;
    out["weight"] = rational_json(c.w);
    out["ind_plus"] = c.ind_plus;
    out["ind_minus"] = c.ind_minus;
    out["ind_glued"] = c.ind_glued;
    out["additivity_pass"] = c.additivity_pass;
    out["closed_form_pass"] = c.closed_form_pass;
    return out;
}

Json to_json(const JumpScanResult& r) {
    Json out;
    out["v"] = r.v;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json entry;
        entry["weight"] = rational_json(e.w);
        entry["index"] = e.index;
        entries.push_back(entry);
    }
    out["entries"] = entries;
    out["differences"] = r.differences;
    out["walls_crossed"] = r.walls_crossed;
    out["multiplicity_consistent"] = r.multiplicity_consistent;
    if (r.per_wall_multiplicity) out["per_wall_multiplicity"] = *r.per_wall_multiplicity;
    return out;
}

namespace {

Json problem_json(const HalfCylinderProblem& p) {
    Json out;
    out["v"] = p.v;
    out["weight"] = rational_json(p.w);
    out["orientation"] = p.reversed ? "reversed" : "standard";
    out["p_nominal"] = rational_json(p.p_nominal);
    return out;
}

} // namespace

Json to_json(const ModeCountDetail& d, const HalfCylinderProblem& problem) {
    Json out;
    out["problem"] = problem_json(problem);
    out["index"] = d.index;
    out["kernel_dim"] = d.kernel_dim;
    out["cokernel_dim"] = d.cokernel_dim;
    out["mode_bound"] = d.mode_bound;
    return out;
}

Json to_json(const DiscreteIndexResult& d, const HalfCylinderProblem& problem,
             const GridConfig& grid) {
    Json out;
    out["problem"] = problem_json(problem);
    Json g;
    g["T"] = grid.T;
    g["n_t"] = grid.n_t;
    g["n_theta"] = grid.n_theta;
    g["svd_threshold"] = grid.svd_threshold;
    out["grid"] = g;
    out["index"] = d.index;
    out["rows"] = d.total_rows;
    out["cols"] = d.total_cols;
    out["rank"] = d.total_rank;
    out["blocks"] = d.block_count;
    out["mode_window"] = Json::array({d.mode_lo, d.mode_hi});
    out["sigma_min_kept"] = d.sigma_min_kept;
    out["sigma_max_discarded"] = d.sigma_max_discarded;
    out["gap_ratio"] = d.gap_ratio;
    out["mode_count_reference"] = d.mode_count_reference;
    out["agree"] = d.index == d.mode_count_reference;
    return out;
}

Json to_json(const SweepSummary& s) {
    Json out;
    out["examined"] = s.examined;
    out["accepted"] = s.accepted;
    out["rejected"] = s.rejected;
    out["truncated"] = s.truncated;
    return out;
}

Json error_json(const Error& e) {
    Json out;
    out["error"]["code"] = e.code();
    out["error"]["message"] = e.what();
    return out;
}

DecoratedOrbicurve load_curve(const Json& j, const QPoly& poly) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("points"))
        throw ValidationError("curve file must be an object with \"genus\" and \"points\"");
    if (!j["genus"].is_number_integer() || j["genus"].get<long long>() < 0)
        throw ValidationError("curve genus must be a nonnegative integer");
    DecoratedOrbicurve curve;
    curve.genus = j["genus"].get<long long>();
    if (!j["points"].is_array()) throw ValidationError("curve \"points\" must be an array");
    for (const auto& pj : j["points"]) {
        if (!pj.is_object() || !pj.contains("decoration") || !pj["decoration"].is_array())
            throw ValidationError("each point needs a \"decoration\" array");
        GroupElement gamma;
        for (const auto& phase : pj["decoration"])
            gamma.phases.push_back(rational_from_json(phase, "decoration phase").mod1());
        if (gamma.phases.size() != poly.t)
            throw ValidationError("decoration length " + std::to_string(gamma.phases.size()) +
                                  " does not match the variable count " + std::to_string(poly.t));
        if (!is_symmetry(poly, gamma))
            throw ValidationError("decoration " + gamma.str() +
                                  " is not a diagonal symmetry of the polynomial");
        long long m = 0;
        if (pj.contains("order")) {
            if (!pj["order"].is_number_integer() || pj["order"].get<long long>() <= 0)
                throw ValidationError("point \"order\" must be a positive integer");
            m = pj["order"].get<long long>();
        }
        curve.points.push_back(MarkedPoint::make(std::move(gamma), m));
    }
    return curve;
}

bool has_weight_matrix(const Json& j, const std::string& field) {
    return j.is_object() && j.contains(field);
}

WeightMatrix load_weight_matrix(const Json& j, const std::string& field) {
    if (!has_weight_matrix(j, field))
        throw ValidationError("weights file is missing \"" + field + "\"");
    const Json& rows = j.at(field);
    if (!rows.is_array() || rows.empty())
        throw ValidationError("\"" + field + "\" must be a nonempty array of rows");
    WeightMatrix m;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ValidationError("weight rows must be arrays");
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rational_from_json(cell, field));
        if (!m.delta.empty() && r.size() != m.delta[0].size())
            throw ValidationError("ragged weight matrix in \"" + field + "\"");
        m.delta.push_back(std::move(r));
    }
    return m;
}

} // namespace wspindex
