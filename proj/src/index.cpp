#include "wspindex/index.hpp"

#include <algorithm>
#include <numeric>

namespace wspindex {

// --- WeightMatrix -----------------------------------------------------------

std::vector<std::pair<std::size_t, std::size_t>> WeightMatrix::on_wall_entries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j < rows(); ++j)
        for (std::size_t l = 0; l < delta[j].size(); ++l)
            if (delta[j][l].is_integer()) out.emplace_back(j, l);
    return out;
}

void WeightMatrix::require_off_wall(const std::string& what) const {
    for (std::size_t j = 0; j < rows(); ++j) {
        if (delta[j].size() != cols())
            throw ShapeMismatchError("ragged weight matrix");
        for (std::size_t l = 0; l < delta[j].size(); ++l)
            if (delta[j][l].is_integer())
                throw OnWallError(what + ": weight delta[" + std::to_string(j + 1) + "][" +
                                  std::to_string(l + 1) + "] = " + delta[j][l].str() +
                                  " lies on an integer wall");
    }
}

// --- SpectrumSpec ------------------------------------------------------------

SpectrumSpec SpectrumSpec::integers(long long multiplicity) {
    if (multiplicity < 1) throw ValidationError("spectrum multiplicity must be >= 1");
    SpectrumSpec s;
    s.integer_lattice = true;
    s.lattice_multiplicity = multiplicity;
    return s;
}

SpectrumSpec SpectrumSpec::explicit_points(std::vector<std::pair<Rational, long long>> pts) {
    SpectrumSpec s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].second < 1) throw ValidationError("spectrum multiplicity must be >= 1");
        if (i > 0 && !(pts[i - 1].first < pts[i].first))
            throw ValidationError("spectrum eigenvalues must be strictly increasing");
    }
    s.points = std::move(pts);
    return s;
}

bool SpectrumSpec::on_wall(const Rational& w) const {
    if (integer_lattice) return w.is_integer();
    return std::any_of(points.begin(), points.end(),
                       [&](const auto& p) { return p.first == w; });
}

// --- local / assembled indices -------------------------------------------------

long long local_end_index_smooth(long long v) {
    if (v < 0) throw ValidationError("winding v must be nonnegative");
    return 1 - 2 * v;
}

long long glued_cylinder_index(long long v) {
    if (v < 0) throw ValidationError("winding v must be nonnegative");
    long long glued = 4 - 4 * v;
    long long ind_plus = (glued - 2) / 2; // ind(-) - ind(+) = dim_R C = 2
    if (ind_plus != local_end_index_smooth(v))
        throw InternalInconsistencyError("glued cylinder splitting disagrees with 1-2v");
    return glued;
}

long long decompose_index(long long interior, const std::vector<long long>& locals,
                          DecompositionVariant) {
    return std::accumulate(locals.begin(), locals.end(), interior);
}

long long transform(long long t_theta_index, const CValues& census, Metric metric) {
    return t_theta_index +
           (long long)(metric == Metric::Smooth ? census.negative : census.zero);
}

// --- reports ----------------------------------------------------------------------

void IndexReport::check_decomposition() const {
    long long sum = interior + correction;
    for (long long l : locals) sum += l;
    if (sum != total)
        throw InternalInconsistencyError("report total does not match its decomposition");
}

IndexReport smooth_total_index(const LineBundleData& line,
                               const std::vector<std::string>& warnings) {
    long long deg = line_degree(line); // throws NonIntegralDegreeError on a bad structure
    (void)deg;

    std::size_t k = line.k();
    Rational q = line.q;
    Rational sum_a(0);
    for (const auto& a : line.a) sum_a += a;
    auto census = c_values(line, Metric::Smooth);

    // Route 1: closed form k + (1-2q)(2-2g-k) - 2 sum a + #{c<0}.
    Rational chi((long long)(2 - 2 * line.genus - (long long)k));
    Rational closed = Rational((long long)k) + (Rational(1) - Rational(2) * q) * chi -
                      Rational(2) * sum_a + Rational((long long)census.negative);
    if (!closed.is_integer())
        throw InternalInconsistencyError("closed-form smooth index is not an integer: " +
                                         closed.str());

    // Route 2: interior + per-end locals, then the transformation correction.
    IndexReport report;
    report.j = line.j;
    report.metric = Metric::Smooth;
    report.interior = interior_index(line);
    report.terms.push_back({"Thm2.4", "interior", report.interior, std::nullopt});
    for (std::size_t l = 0; l < k; ++l) {
        long long local = local_end_index_smooth(line.v[l]);
        report.locals.push_back(local);
        report.terms.push_back({"Thm2.9", "local_end", local, l});
    }
    long long t_theta = decompose_index(report.interior, report.locals);
    report.correction = (long long)census.negative;
    report.terms.push_back({"Thm1.2", "transform_correction", report.correction, std::nullopt});
    long long assembled = transform(t_theta, census, Metric::Smooth);

    // Route 3: rewritten genus form 2(1-2q)(1-g) - 2 sum (Theta - q) + #{c<0}.
    Rational remark = Rational(2) * (Rational(1) - Rational(2) * q) *
                          Rational(1 - line.genus) -
                      Rational(2) * (sum_a - q * Rational((long long)k)) +
                      Rational((long long)census.negative);

    if (closed.num() != assembled || !(remark == closed))
        throw InternalInconsistencyError(
            "smooth index routes disagree: closed " + closed.str() + ", assembled " +
            std::to_string(assembled) + ", rewritten " + remark.str());

    report.total = assembled;
    report.total_theorem = "Thm1.3";
    report.warnings = warnings;
    report.check_decomposition();
    return report;
}

IndexReport cylindrical_total_index(const LineBundleData& line,
                                    const std::vector<long long>& local_end_indices,
                                    const std::vector<std::string>& warnings) {
    if (local_end_indices.size() != line.k())
        throw ShapeMismatchError("one local end index per marked point is required");
    long long deg = line_degree(line);
    (void)deg;

    IndexReport report;
    report.j = line.j;
    report.metric = Metric::Cylindrical;
    report.interior = interior_index(line);
    report.terms.push_back({"Thm2.4", "interior", report.interior, std::nullopt});
    for (std::size_t l = 0; l < line.k(); ++l) {
        report.locals.push_back(local_end_indices[l]);
        report.terms.push_back({"oracle", "local_end", local_end_indices[l], l});
    }
    auto census = c_values(line, Metric::Cylindrical);
    long long t_theta = decompose_index(report.interior, report.locals,
                                        DecompositionVariant::HatSpace);
    report.correction = (long long)census.zero;
    report.terms.push_back({"Thm3.9", "transform_correction", report.correction, std::nullopt});
    report.total = transform(t_theta, census, Metric::Cylindrical);
    report.total_theorem = "Thm3.8+Thm3.9";
    report.warnings = warnings;
    report.check_decomposition();
    return report;
}

// --- jumps -------------------------------------------------------------------------

long long lm_jump(const SpectrumSpec& spectrum, const Rational& k1, const Rational& k2) {
    if (!(k1 < k2)) throw ValidationError("lm_jump requires k1 < k2");
    if (spectrum.on_wall(k1))
        throw OnWallError("weight k1 = " + k1.str() + " lies in the spectrum");
    if (spectrum.on_wall(k2))
        throw OnWallError("weight k2 = " + k2.str() + " lies in the spectrum");
    if (spectrum.integer_lattice)
        return spectrum.lattice_multiplicity * (k2.floor() - k1.floor());
    long long total = 0;
    for (const auto& [lambda, mult] : spectrum.points)
        if (k1 < lambda && lambda < k2) total += mult;
    return total;
}

long long dbar_jump(const Rational& d1, const Rational& d2) {
    if (d1.is_integer())
        throw OnWallError("weight " + d1.str() + " lies on an integer wall");
    if (d2.is_integer())
        throw OnWallError("weight " + d2.str() + " lies on an integer wall");
    return d2.floor() - d1.floor();
}

long long spin_jump(const WeightMatrix& d, const WeightMatrix& d_prime) {
    if (!d.same_shape(d_prime))
        throw ShapeMismatchError("weight matrices have different shapes");
    d.require_off_wall("spin_jump");
    d_prime.require_off_wall("spin_jump");
    long long total = 0;
    for (std::size_t j = 0; j < d.rows(); ++j)
        for (std::size_t l = 0; l < d.cols(); ++l)
            total += d_prime.delta[j][l].floor() - d.delta[j][l].floor();
    return total;
}

long long propagate_dbar_index(long long reference_index,
                               const std::vector<Rational>& reference_row,
                               const std::vector<Rational>& target_row) {
    if (reference_row.size() != target_row.size())
        throw ShapeMismatchError("weight rows have different lengths");
    long long ind = reference_index;
    for (std::size_t l = 0; l < reference_row.size(); ++l)
        ind += dbar_jump(target_row[l], reference_row[l]); // floor(ref) - floor(target)
    return ind;
}

long long broad_census(const std::vector<LineBundleData>& lines) {
    if (lines.empty()) return 0;
    std::size_t k = lines[0].k();
    long long census = 0;
    for (const auto& line : lines) {
        if (line.k() != k) throw ShapeMismatchError("lines disagree on the point count");
        for (const auto& a : line.a)
            if (a.is_zero()) ++census;
    }
    return census;
}

long long witten_index(const std::vector<LineBundleData>& lines,
                       const std::vector<long long>& dbar_indices) {
    if (lines.size() != dbar_indices.size())
        throw ShapeMismatchError("one d-bar index per line is required");
    long long total = std::accumulate(dbar_indices.begin(), dbar_indices.end(), 0LL);
    return total - broad_census(lines);
}

// --- gluing -----------------------------------------------------------------------

GluingCertificate gluing_check(long long ind_plus, long long ind_minus, long long ind_glued) {
    GluingCertificate cert;
    cert.ind_plus = ind_plus;
    cert.ind_minus = ind_minus;
    cert.ind_glued = ind_glued;
    cert.pass = ind_glued == ind_plus + ind_minus;
    return cert;
}

} // namespace wspindex
