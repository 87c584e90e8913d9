#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wspindex/rational.hpp"
#include "wspindex/svd.hpp"

namespace wspindex {

// Local model on the half-cylinder S^1 x [0, inf): the operator
// d/dt - i d/theta with the totally real boundary condition
// u(0, theta) in e^{i v theta} R and exponential weight w at the end.
//
// Weight convention: the domain norm carries e^{(w-1)pt} on the section and
// e^{wpt} on its first derivatives, the codomain carries e^{wpt} (the
// half-cylinder pullback of a weighted Sobolev norm on the punctured disc).
// In this convention the Fourier mode with multiplier n has homogeneous
// solution e^{-(n+1-w)t}, admissible exactly when n > w - 1; walls sit at
// integer w.
struct HalfCylinderProblem {
    long long v = 0;
    Rational w;
    bool reversed = false;       // boundary line e^{-i v theta} R instead
    Rational p_nominal{4};       // recorded in certificates; the admissibility
                                 // thresholds are p-free once w is off a wall

    static HalfCylinderProblem make(long long v, Rational w, bool reversed = false,
                                    Rational p_nominal = Rational(4));
};

struct GridConfig {
    double T = 8.0;              // truncation length
    long long n_t = 64;          // time intervals
    long long n_theta = 32;      // circle resolution (even)
    double svd_threshold = 1e-8;
    double min_gap_ratio = 1e3;  // required spread between kept and discarded

    void validate() const;
};

// --- exact Fourier-mode count -------------------------------------------------

struct ModeCountDetail {
    long long index = 0;
    long long kernel_dim = 0;
    long long cokernel_dim = 0;
    long long mode_bound = 0;    // enumeration truncation |n| <= bound
    long long floor_w = 0;
    long long self_mode = 0;     // fixed point of the boundary pairing
};

// Exact real kernel/cokernel count by Fourier-mode enumeration; see the
// convention note on HalfCylinderProblem. The boundary condition couples the
// coefficient of mode n conjugate-linearly to the mode the line reflects it
// to (-n-2v, or -n+2v for the reversed line); a coupled pair contributes to
// the kernel when both modes admit decaying homogeneous solutions and to the
// cokernel (through the adjoint problem at the negated weight) when neither
// does. No floating point is involved.
ModeCountDetail mode_count_detail(const HalfCylinderProblem& problem);
long long mode_count_index(const HalfCylinderProblem& problem);

// --- discretization -------------------------------------------------------------

struct DiscreteIndexResult {
    long long index = 0;
    long long total_rows = 0;
    long long total_cols = 0;
    long long total_rank = 0;
    std::size_t block_count = 0;
    long long mode_lo = 0, mode_hi = 0; // retained frequency window
    double sigma_min_kept = 0.0;
    double sigma_max_discarded = 0.0;
    double gap_ratio = 0.0;
    long long mode_count_reference = 0; // exact oracle value, for certificates
};

// The finite-difference blocks of the weighted operator on [0, T] x S^1:
// trapezoidal differencing in t for every retained Fourier mode, the totally
// real condition as real-linear rows at t = 0 (coupling each mode with its
// reflection), and rows forcing the non-admissible modes to vanish at t = T.
// The direct sum of the blocks is the assembled discrete operator; its
// singular values equal the pooled block singular values.
std::vector<DenseMatrix> discretized_blocks(const HalfCylinderProblem& problem,
                                            const GridConfig& grid);

// Index = (#columns - rank) - (#rows - rank) with the rank read from the
// singular values above grid.svd_threshold. Throws IllConditionedError when
// the frequency window cannot hold the coupled modes or the singular values
// show no clear gap at the threshold.
DiscreteIndexResult discrete_index(const HalfCylinderProblem& problem, const GridConfig& grid);

// --- weight scans ------------------------------------------------------------------

struct JumpScanEntry {
    Rational w;
    long long index = 0;
};

struct JumpScanResult {
    long long v = 0;
    std::vector<JumpScanEntry> entries;
    std::vector<long long> differences;     // index[i+1] - index[i]
    std::vector<long long> walls_crossed;   // integers in (w_i, w_{i+1})
    bool multiplicity_consistent = false;
    std::optional<long long> per_wall_multiplicity; // set when consistent
};

// mode_count_index at every weight (sorted, off the walls); consecutive
// differences expose the empirical per-wall jump multiplicity.
JumpScanResult jump_scan(long long v, const std::vector<Rational>& weights);

// --- gluing certificate ----------------------------------------------------------------

struct GlueCertificate {
    long long v = 0;
    Rational w;
    long long ind_plus = 0;   // half-cylinder at weight +w
    long long ind_minus = 0;  // half-cylinder at weight -w
    long long ind_glued = 0;  // compact cylinder via the Maslov route
    bool additivity_pass = false; // glued == plus + minus
    bool closed_form_pass = false; // glued == 4 - 4v
};

// Certifies that the two weighted half-cylinder indices recombine to the
// compact-cylinder index computed independently through the boundary Maslov
// index.
GlueCertificate glue_numeric(long long v, const Rational& w);

} // namespace wspindex
