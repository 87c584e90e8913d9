// wspindex: index calculator for real Cauchy-Riemann operators on W-spin
// orbicurves, plus the numerical verification oracle.
//
// Subcommands: analyze, index, jump, verify, glue-check. See README.md.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wspindex/report.hpp"

namespace {

using namespace wspindex;

int log_level() {
    const char* env = std::getenv("WSPIN_LOG");
    return env ? std::atoi(env) : 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[wspindex] " << msg << "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

struct VRange {
    long long lo = 0;
    long long hi = 0;
};

VRange parse_v_range(const std::string& text) {
    VRange r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ValidationError("invalid winding range '" + text + "' (use N or N..M)");
    }
    if (r.lo < 0 || r.hi < r.lo)
        throw ValidationError("winding range must satisfy 0 <= lo <= hi");
    return r;
}

GridConfig parse_grid(const std::string& text) {
    GridConfig grid;
    if (text.empty()) return grid;
    std::istringstream is(text);
    char c1 = 0, c2 = 0;
    if (!(is >> grid.T >> c1 >> grid.n_t >> c2 >> grid.n_theta) || c1 != ',' || c2 != ',')
        throw ValidationError("invalid grid '" + text + "' (use T,Nt,Ntheta)");
    grid.validate();
    return grid;
}

void emit(const Json& j, bool as_json, const std::string& table) {
    if (as_json)
        std::cout << canonical_dump(j);
    else
        std::cout << table;
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& poly_text, long long cap, bool as_json) {
    auto parsed = parse_poly(poly_text);
    auto poly = compute_weights(parsed);
    auto nondeg = check_nondegeneracy(parsed);
    auto group = symmetry_group(poly, cap);

    Json out;
    out["polynomial"] = to_json(poly);
    out["nondegeneracy"] = to_json(nondeg);
    out["symmetry_group"] = to_json(group);

    std::ostringstream table;
    table << "polynomial: " << render_poly(poly) << "\n";
    table << "weights:";
    for (std::size_t i = 0; i < poly.t; ++i)
        table << " " << poly.variables[i] << "=" << poly.weights[i].str();
    table << "   d=" << poly.degree << " k=(";
    for (std::size_t i = 0; i < poly.t; ++i)
        table << (i ? "," : "") << poly.degree_numerators[i];
    table << ")\n";
    table << "weights unique: " << (nondeg.weights_unique ? "yes" : "no") << "\n";
    table << "isolated singularity: "
          << (nondeg.singularity == Singularity::Verified
                  ? "verified"
                  : nondeg.singularity == Singularity::Refuted ? "refuted" : "assumed")
          << " (" << nondeg.detail << ")\n";
    table << "|H| = " << group.order << "\n";
    for (std::size_t i = 0; i < group.generators.size(); ++i)
        table << "  generator " << group.generators[i].str() << " of order "
              << group.generator_orders[i] << "\n";
    if (group.elements_materialized && group.order <= 32) {
        table << "elements:\n";
        for (const auto& e : group.elements) table << "  " << e.str() << "\n";
    }
    emit(out, as_json, table.str());
    return 0;
}

// --- index -------------------------------------------------------------------

std::vector<std::string> structure_warnings(const ParsedPoly& parsed) {
    std::vector<std::string> warnings;
    auto nondeg = check_nondegeneracy(parsed);
    if (nondeg.singularity == Singularity::Assumed)
        warnings.push_back("isolated singularity assumed, not verified");
    if (nondeg.singularity == Singularity::Refuted)
        warnings.push_back("isolated singularity refuted: " + nondeg.detail);
    return warnings;
}

Json index_reports_for(const QPoly& poly, const DecoratedOrbicurve& curve, Metric metric,
                       const WeightMatrix* delta, const std::vector<std::string>& warnings,
                       std::string* table_out) {
    auto validation = validate_structure(curve, poly);
    if (!validation.ok) {
        std::string msg = "selection rule fails:";
        for (std::size_t i = 0; i < validation.failing_lines.size(); ++i)
            msg += " deg|L_" + std::to_string(validation.failing_lines[i] + 1) +
                   "| = " + validation.failing_degrees[i].str();
        throw Error("non_integral_degree", msg);
    }

    Json reports = Json::array();
    std::ostringstream table;
    for (const auto& line : validation.lines) {
        IndexReport report;
        if (metric == Metric::Smooth) {
            report = smooth_total_index(line, warnings);
        } else {
            if (!delta) throw ValidationError("cylindrical index needs --weights");
            if (delta->rows() != poly.t || delta->cols() != curve.k())
                throw ShapeMismatchError("weight matrix shape must be t x k");
            std::vector<long long> locals;
            for (std::size_t l = 0; l < curve.k(); ++l) {
                // local end weight 1 - a + delta, off the integer walls
                Rational w = Rational(1) - line.a[l] + delta->delta[line.j][l];
                locals.push_back(mode_count_index(HalfCylinderProblem::make(line.v[l], w)));
            }
            report = cylindrical_total_index(line, locals, warnings);
        }
        reports.push_back(to_json(report));
        table << "L_" << line.j + 1 << " [" << metric_name(metric) << "] total = "
              << report.total << "   (";
        for (std::size_t i = 0; i < report.terms.size(); ++i) {
            const auto& t = report.terms[i];
            table << (i ? " " : "") << t.theorem << ":" << t.value;
        }
        table << ")\n";
    }
    if (table_out) *table_out = table.str();
    return reports;
}

int cmd_index(const std::string& poly_text, const std::string& curve_path,
              const std::string& metric_name_arg, const std::string& weights_path,
              bool all_decorations, long long cap, bool as_json) {
    auto parsed = parse_poly(poly_text);
    auto poly = compute_weights(parsed);
    Metric metric = metric_name_arg == "cylindrical" ? Metric::Cylindrical : Metric::Smooth;
    auto warnings = structure_warnings(parsed);

    WeightMatrix delta;
    bool has_delta = false;
    if (!weights_path.empty()) {
        delta = load_weight_matrix(load_json_file(weights_path), "delta");
        has_delta = true;
    }
    if (metric == Metric::Cylindrical && !has_delta)
        throw ValidationError("cylindrical index needs --weights FILE with a delta matrix");
    if (metric == Metric::Smooth && has_delta)
        warnings.push_back("weight matrix ignored for the smooth metric");
    if (has_delta)
        for (auto [j, l] : delta.on_wall_entries())
            warnings.push_back("weight delta[" + std::to_string(j + 1) + "][" +
                               std::to_string(l + 1) + "] lies on an integer wall");

    auto curve_json = load_json_file(curve_path);
    auto curve = load_curve(curve_json, poly);

    if (!all_decorations) {
        std::string table;
        Json reports = index_reports_for(poly, curve, metric, has_delta ? &delta : nullptr,
                                         warnings, &table);
        Json out;
        out["metric"] = metric_name(metric);
        out["reports"] = reports;
        emit(out, as_json, table);
        return 0;
    }

    // decoration sweep over H^k with the curve's genus and point count;
    // --cap bounds the tuple count, not the group enumeration
    if (metric != Metric::Smooth)
        throw ValidationError("--all-decorations sweeps support the smooth metric only");
    auto group = symmetry_group(poly, kDefaultGroupCap);
    SweepRequest request;
    request.poly = &poly;
    request.group = &group;
    request.genus = curve.genus;
    request.k = curve.k();
    request.cap = cap > 0 ? cap : 10000;
    log_info("sweeping " + std::to_string(request.k) + " points over |H| = " +
             std::to_string(group.order));
    auto summary = run_sweep_parallel(request);

    Json out;
    out["summary"] = to_json(summary);
    Json cases = Json::array();
    std::ostringstream table;
    table << "examined " << summary.examined << ", accepted " << summary.accepted
          << ", rejected " << summary.rejected << (summary.truncated ? " (truncated)" : "")
          << "\n";
    for (const auto& record : summary.records) {
        if (!record.accepted) continue;
        Json c;
        Json decor = Json::array();
        for (std::size_t idx : record.decoration)
            decor.push_back(to_json(group.elements[idx]));
        c["decoration"] = decor;
        c["line_degrees"] = record.line_degrees;
        c["totals"] = record.totals;
        cases.push_back(c);
        table << "  decoration";
        for (std::size_t idx : record.decoration)
            table << " " << group.elements[idx].str();
        table << " -> totals";
        for (long long t : record.totals) table << " " << t;
        table << "\n";
    }
    out["cases"] = cases;
    emit(out, as_json, table.str());
    return 0;
}

// --- jump ---------------------------------------------------------------------

int cmd_jump(const std::string& weights_path, bool as_json) {
    auto j = load_json_file(weights_path);
    auto delta = load_weight_matrix(j, "delta");
    auto delta_prime = load_weight_matrix(j, "delta_prime");
    long long jump = spin_jump(delta, delta_prime);

    Json out;
    out["jump"] = jump;
    Json floors = Json::array();
    std::ostringstream table;
    table << "spin jump = " << jump << "\n";
    for (std::size_t r = 0; r < delta.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < delta.cols(); ++c) {
            long long f = delta_prime.delta[r][c].floor() - delta.delta[r][c].floor();
            row.push_back(f);
            table << "  [" << r + 1 << "," << c + 1 << "] floor(" << delta_prime.delta[r][c].str()
                  << ") - floor(" << delta.delta[r][c].str() << ") = " << f << "\n";
        }
        floors.push_back(row);
    }
    out["per_entry"] = floors;
    emit(out, as_json, table.str());
    return 0;
}

// --- verify ----------------------------------------------------------------------

int cmd_verify(const std::string& v_range, const std::vector<std::string>& weight_args,
               const std::string& grid_arg, bool as_json) {
    auto range = parse_v_range(v_range);
    std::vector<Rational> weights;
    for (const auto& w : weight_args) weights.push_back(Rational::parse(w));
    if (weights.empty()) weights.push_back(Rational(1, 2));
    GridConfig grid = parse_grid(grid_arg);

    Json certs = Json::array();
    std::ostringstream table;
    for (long long v = range.lo; v <= range.hi; ++v) {
        for (const auto& w : weights) {
            auto problem = HalfCylinderProblem::make(v, w);
            auto detail = mode_count_detail(problem);
            auto discrete = discrete_index(problem, grid);
            Json cert;
            cert["mode_count"] = to_json(detail, problem);
            cert["discretization"] = to_json(discrete, problem, grid);
            cert["pass"] = detail.index == discrete.index;
            certs.push_back(cert);
            table << "v=" << v << " w=" << w.str() << "  mode_count=" << detail.index
                  << "  discrete=" << discrete.index << "  gap_ratio=" << std::scientific
                  << std::setprecision(2) << discrete.gap_ratio << std::defaultfloat
                  << (detail.index == discrete.index ? "  ok" : "  MISMATCH") << "\n";
        }
    }
    Json out;
    out["certificates"] = certs;
    emit(out, as_json, table.str());
    return 0;
}

// --- glue-check --------------------------------------------------------------------

int cmd_glue_check(const std::string& v_range, const std::string& weight_arg, bool as_json) {
    auto range = parse_v_range(v_range);
    Rational w = weight_arg.empty() ? Rational(1, 2) : Rational::parse(weight_arg);

    Json certs = Json::array();
    std::ostringstream table;
    bool all_pass = true;
    for (long long v = range.lo; v <= range.hi; ++v) {
        auto numeric = glue_numeric(v, w);
        auto formula = gluing_check(local_end_index_smooth(v), 3 - 2 * v,
                                    glued_cylinder_index(v));
        Json cert;
        cert["numeric"] = to_json(numeric);
        cert["formula"] = to_json(formula);
        certs.push_back(cert);
        bool pass = numeric.additivity_pass && numeric.closed_form_pass && formula.pass;
        all_pass = all_pass && pass;
        table << "v=" << v << "  numeric " << numeric.ind_plus << " + " << numeric.ind_minus
              << " = " << numeric.ind_glued << "  formula " << formula.ind_plus << " + "
              << formula.ind_minus << " = " << formula.ind_glued
              << (pass ? "  ok" : "  FAIL") << "\n";
    }
    Json out;
    out["certificates"] = certs;
    out["all_pass"] = all_pass;
    emit(out, as_json, table.str());
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fredholm index calculator for W-spin Cauchy-Riemann operators"};
    app.require_subcommand(1);

    std::string poly_text, curve_path, metric = "smooth", weights_path;
    std::string v_range = "0", grid_arg, weight_single;
    std::vector<std::string> weight_list;
    std::string output = "table";
    bool all_decorations = false;
    long long cap = 0;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* analyze = app.add_subcommand("analyze", "weights, nondegeneracy, symmetry group");
    analyze->add_option("--poly", poly_text, "quasi-homogeneous polynomial")->required();
    analyze->add_option("--cap", cap, "group enumeration cap");
    add_output(analyze);

    auto* index_cmd = app.add_subcommand("index", "total Fredholm index per line bundle");
    index_cmd->add_option("--poly", poly_text, "quasi-homogeneous polynomial")->required();
    index_cmd->add_option("--curve", curve_path, "curve description JSON file")->required();
    index_cmd->add_option("--metric", metric, "smooth or cylindrical")
        ->check(CLI::IsMember({"smooth", "cylindrical"}));
    index_cmd->add_option("--weights", weights_path, "weight matrix JSON file");
    index_cmd->add_flag("--all-decorations", all_decorations, "sweep every decoration tuple");
    index_cmd->add_option("--cap", cap, "sweep / enumeration cap");
    add_output(index_cmd);

    auto* jump = app.add_subcommand("jump", "weight-matrix index jump");
    jump->add_option("--weights", weights_path, "JSON file with delta and delta_prime")
        ->required();
    add_output(jump);

    auto* verify = app.add_subcommand("verify", "oracle certificates for local end indices");
    verify->add_option("--v", v_range, "winding range N or N..M")->required();
    verify->add_option("--weight", weight_list, "end weight p/q (repeatable)");
    verify->add_option("--grid", grid_arg, "discretization grid T,Nt,Ntheta");
    add_output(verify);

    auto* glue = app.add_subcommand("glue-check", "gluing identity certificates");
    glue->add_option("--v", v_range, "winding range N or N..M")->required();
    glue->add_option("--weight", weight_single, "end weight p/q");
    add_output(glue);

    CLI11_PARSE(app, argc, argv);
    bool as_json = output == "json";

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(poly_text, cap > 0 ? cap : wspindex::kDefaultGroupCap, as_json);
        if (app.got_subcommand(index_cmd))
            return cmd_index(poly_text, curve_path, metric, weights_path, all_decorations, cap,
                             as_json);
        if (app.got_subcommand(jump)) return cmd_jump(weights_path, as_json);
        if (app.got_subcommand(verify)) return cmd_verify(v_range, weight_list, grid_arg, as_json);
        if (app.got_subcommand(glue)) return cmd_glue_check(v_range, weight_single, as_json);
    } catch (const wspindex::InternalInconsistencyError& e) {
        std::cout << wspindex::canonical_dump(wspindex::error_json(e));
        return 2;
    } catch (const wspindex::IllConditionedError& e) {
        std::cout << wspindex::canonical_dump(wspindex::error_json(e));
        return 3;
    } catch (const wspindex::Error& e) {
        std::cout << wspindex::canonical_dump(wspindex::error_json(e));
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
