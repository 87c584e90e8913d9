#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wspindex/maslov.hpp"
#include "wspindex/wspin.hpp"

namespace wspindex {

// --- weight matrices ------------------------------------------------------

// delta in Q^{N x k}, rows = variables, columns = marked points. Jump
// formulas require every entry off the integer walls.
struct WeightMatrix {
    std::vector<std::vector<Rational>> delta;

    std::size_t rows() const { return delta.size(); }
    std::size_t cols() const { return delta.empty() ? 0 : delta[0].size(); }

    bool same_shape(const WeightMatrix& o) const {
        return rows() == o.rows() && cols() == o.cols();
    }
    // indices of entries sitting on a wall (integral values)
    std::vector<std::pair<std::size_t, std::size_t>> on_wall_entries() const;
    void require_off_wall(const std::string& what) const;
};

// --- boundary spectrum ------------------------------------------------------

// Spectrum of the boundary operator on the end, as (Im lambda, real
// multiplicity) pairs. For the d-bar boundary operator this is the integer
// lattice with a configurable multiplicity: the plain weighted-end jump
// counts 1 per wall, the totally-real boundary-value problem counts 2.
struct SpectrumSpec {
    bool integer_lattice = false;
    long long lattice_multiplicity = 1;
    std::vector<std::pair<Rational, long long>> points; // strictly increasing

    static SpectrumSpec integers(long long multiplicity = 1);
    static SpectrumSpec explicit_points(std::vector<std::pair<Rational, long long>> pts);

    bool on_wall(const Rational& w) const;
};

// --- local and assembled indices -------------------------------------------

// Local end index at a marked point, smooth metric: 1 - 2v.
long long local_end_index_smooth(long long v);

// Glued compact-cylinder index 4 - 4v, with the splitting (1-2v) + (3-2v)
// asserted against the jump-by-2 relation between the two weighted halves.
long long glued_cylinder_index(long long v);

enum class DecompositionVariant { HatSpace, PlainSpace };

// interior + sum of local end indices.
long long decompose_index(long long interior, const std::vector<long long>& locals,
                          DecompositionVariant variant = DecompositionVariant::PlainSpace);

// Index transformation: add the metric's census term.
long long transform(long long t_theta_index, const CValues& census, Metric metric);

// --- reports -----------------------------------------------------------------

struct ReportTerm {
    std::string theorem;    // provenance, e.g. "Thm2.9"
    std::string name;       // human label
    long long value = 0;
    std::optional<std::size_t> point; // marked point for per-end terms
};

struct IndexReport {
    std::size_t j = 0;
    Metric metric = Metric::Smooth;
    long long total = 0;
    std::string total_theorem;   // provenance of the assembled total
    long long interior = 0;
    std::vector<long long> locals;
    long long correction = 0;
    std::vector<ReportTerm> terms;
    std::vector<std::string> warnings;

    // total = interior + sum locals + correction, checked at construction.
    void check_decomposition() const;
};

// Smooth-metric total index for line j, evaluated through three routes that
// must agree: the closed form, the decomposition + transformation route, and
// the rewritten genus form. InternalInconsistencyError if they ever differ.
IndexReport smooth_total_index(const LineBundleData& line,
                               const std::vector<std::string>& warnings = {});

// Cylindrical-metric report: there is no closed form for the base value, so
// the t,theta reference (interior + supplied local end indices at the chosen
// weights) is assembled with the #{c=0} correction.
IndexReport cylindrical_total_index(const LineBundleData& line,
                                    const std::vector<long long>& local_end_indices,
                                    const std::vector<std::string>& warnings = {});

// --- jump formulas ------------------------------------------------------------

// Lockhart-McOwen: i_{k1}(A) - i_{k2}(A) = sum of d(lambda) over
// k1 < Im(lambda) < k2. OnWallError when either weight hits the spectrum.
long long lm_jump(const SpectrumSpec& spectrum, const Rational& k1, const Rational& k2);

// Weighted d-bar jump: floor(d2) - floor(d1); weights off the integer walls.
long long dbar_jump(const Rational& d1, const Rational& d2);

// Witten-map jump: sum over all entries of floor(d'_{jl}) - floor(d_{jl}).
long long spin_jump(const WeightMatrix& d, const WeightMatrix& d_prime);

// Propagate a d-bar index from a reference weight row to a target row using
// the per-end jump formula: ind(target) = ind(ref) + sum(floor(ref) - floor(target)).
long long propagate_dbar_index(long long reference_index,
                               const std::vector<Rational>& reference_row,
                               const std::vector<Rational>& target_row);

// Witten-map index from per-line d-bar indices (orbifold = desingularized
// identification already applied): sum_j ind_j - sum_l #{j : a_j(h_l) = 0}.
long long witten_index(const std::vector<LineBundleData>& lines,
                       const std::vector<long long>& dbar_indices);

// The broad census sum_l #{j : a_j(h_l) = 0} on its own.
long long broad_census(const std::vector<LineBundleData>& lines);

// --- gluing ---------------------------------------------------------------------

struct GluingCertificate {
    long long ind_plus = 0;
    long long ind_minus = 0;
    long long ind_glued = 0;
    bool pass = false;
};

// ind(glued) = ind(+) + ind(-), returned as a certificate rather than an error.
GluingCertificate gluing_check(long long ind_plus, long long ind_minus, long long ind_glued);

} // namespace wspindex
