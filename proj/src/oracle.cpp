#include "wspindex/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "wspindex/index.hpp"
#include "wspindex/maslov.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wspindex {

HalfCylinderProblem HalfCylinderProblem::make(long long v, Rational w, bool reversed,
                                              Rational p_nominal) {
    if (v < 0) throw ValidationError("winding v must be nonnegative");
    if (w.is_integer())
        throw OnWallError("weight " + w.str() + " lies on an integer wall");
    if (!(Rational(1) < p_nominal))
        throw ValidationError("nominal integrability exponent must exceed 1");
    HalfCylinderProblem p;
    p.v = v;
    p.w = w;
    p.reversed = reversed;
    p.p_nominal = p_nominal;
    return p;
}

void GridConfig::validate() const {
    if (n_theta < 2 || n_theta % 2 != 0)
        throw ValidationError("n_theta must be even and at least 2");
    if (n_t < 2) throw ValidationError("n_t must be at least 2");
    if (T < 4.0) throw ValidationError("truncation length T must be at least 4");
    if (!(svd_threshold > 0.0 && svd_threshold < 1.0))
        throw ValidationError("svd_threshold must lie in (0, 1)");
    if (min_gap_ratio < 1.0) throw ValidationError("min_gap_ratio must be at least 1");
}

namespace {

// Reflection of mode n induced by the totally real boundary line.
long long partner_of(const HalfCylinderProblem& p, long long n) {
    return p.reversed ? -n + 2 * p.v : -n - 2 * p.v;
}

// Mode n admits a decaying homogeneous solution iff n > w - 1, i.e. n >= floor(w)
// for w off the walls.
bool mode_is_free(long long n, long long floor_w) { return n >= floor_w; }

} // namespace

ModeCountDetail mode_count_detail(const HalfCylinderProblem& problem) {
    if (problem.w.is_integer())
        throw OnWallError("weight " + problem.w.str() + " lies on an integer wall");
    ModeCountDetail out;
    out.floor_w = problem.w.floor();
    out.self_mode = problem.reversed ? problem.v : -problem.v;

    Rational abs_w = problem.w.sign() >= 0 ? problem.w : -problem.w;
    long long abs_w_ceil = abs_w.floor() + 1; // w is off the walls, so ceil = floor + 1
    // enumeration bound: all non-mixed coupled pairs provably live inside it
    long long bound = 2 * abs_w_ceil + 2 * problem.v + 4;
    out.mode_bound = bound;

    long long f = out.floor_w;
    long long kernel = 0, cokernel = 0;
    for (long long n = -bound - 2 * problem.v - 2; n <= bound + 2 * problem.v + 2; ++n) {
        long long partner = partner_of(problem, n);
        if (n > partner) continue; // count each coupled pair once
        bool n_free = mode_is_free(n, f);
        bool partner_free = mode_is_free(partner, f);
        if (n == partner) {
            // self-coupled mode: the condition pins the coefficient to the
            // real (kernel side) or imaginary (adjoint side) line
            if (n_free) kernel += 1;
            else cokernel += 1;
        } else if (n_free && partner_free) {
            kernel += 2; // one free complex coefficient
        } else if (!n_free && !partner_free) {
            cokernel += 2; // one complex compatibility constraint on the data
        }
        // mixed pairs contribute nothing: the free side absorbs the value
        // the determined side imposes
    }
    // decay admissibility is monotone in n, so every pair beyond the bound is
    // mixed; spot-check the extremes rather than trust the inequality
    for (long long n : {-bound - 2 * problem.v - 2, bound + 2 * problem.v + 2}) {
        long long partner = partner_of(problem, n);
        if (mode_is_free(n, f) == mode_is_free(partner, f) && n != partner)
            throw InternalInconsistencyError("mode truncation bound too small");
    }

    out.kernel_dim = kernel;
    out.cokernel_dim = cokernel;
    out.index = kernel - cokernel;
    return out;
}

long long mode_count_index(const HalfCylinderProblem& problem) {
    return mode_count_detail(problem).index;
}

// --- discretization -----------------------------------------------------------

namespace {

// One real component chain (Re or Im) per retained mode; the multiplier is
// real, so a coupled mode pair splits into a Re block and an Im block that
// differ only in the sign pattern of the boundary row.
struct ComponentBlockSpec {
    std::vector<long long> modes;  // one or two coupled modes
    bool imaginary_part = false;   // selects the boundary-row sign / presence
};

// Trapezoidal rows of (d/dt + mu) c = 0 on n_t intervals for one chain.
void fill_chain_rows(DenseMatrix& block, std::size_t row0, std::size_t col0, long long n_t,
                     double h, double mu) {
    for (long long i = 0; i < n_t; ++i) {
        std::size_t r = row0 + (std::size_t)i;
        block.at(r, col0 + (std::size_t)i) = -1.0 / h + mu / 2.0;
        block.at(r, col0 + (std::size_t)i + 1) = 1.0 / h + mu / 2.0;
    }
}

} // namespace

std::vector<DenseMatrix> discretized_blocks(const HalfCylinderProblem& problem,
                                            const GridConfig& grid) {
    grid.validate();
    long long f = problem.w.floor();
    long long v = problem.v;

    // Frequency window closed under the boundary reflection: [-M-2v, M] for
    // the standard line, [-M, M+2v] for the reversed one.
    long long m_half = grid.n_theta / 2 - 1;
    long long window = m_half - 2 * v;
    long long need = (f < 0 ? -f : f) + 2;
    if (window < need)
        throw IllConditionedError(0.0, "frequency window " + std::to_string(window) +
                                           " cannot resolve the coupled modes (need " +
                                           std::to_string(need) + "); refine n_theta");
    long long lo = problem.reversed ? -window : -window - 2 * v;
    long long hi = problem.reversed ? window + 2 * v : window;

    std::vector<ComponentBlockSpec> specs;
    for (long long n = lo; n <= hi; ++n) {
        long long partner = partner_of(problem, n);
        if (partner < lo || partner > hi)
            throw InternalInconsistencyError("frequency window not closed under reflection");
        if (n > partner) continue;
        if (n == partner) {
            specs.push_back({{n}, false});
            specs.push_back({{n}, true});
        } else {
            specs.push_back({{n, partner}, false});
            specs.push_back({{n, partner}, true});
        }
    }

    double h = grid.T / (double)grid.n_t;
    double w = problem.w.to_double();
    long long n_t = grid.n_t;
    std::size_t nodes = (std::size_t)n_t + 1;

    std::vector<DenseMatrix> blocks(specs.size());
    for (std::size_t bi = 0; bi < specs.size(); ++bi) {
        const auto& spec = specs[bi];
        std::size_t chains = spec.modes.size();
        std::size_t cols = nodes * chains;
        std::size_t pde_rows = (std::size_t)n_t * chains;
        // the totally real condition pins the self-coupled imaginary chain
        // and ties coupled chains together: Re_n(0) = Re_p(0), Im_n(0) = -Im_p(0)
        std::size_t pairing_rows = chains == 2 ? 1 : (spec.imaginary_part ? 1 : 0);
        std::size_t kill_rows = 0;
        for (long long n : spec.modes)
            if (!mode_is_free(n, f)) kill_rows += 1;
        DenseMatrix block(pde_rows + pairing_rows + kill_rows, cols);

        for (std::size_t ci = 0; ci < chains; ++ci) {
            double mu = (double)spec.modes[ci] + 1.0 - w;
            fill_chain_rows(block, (std::size_t)n_t * ci, nodes * ci, n_t, h, mu);
        }
        std::size_t r = pde_rows;
        if (chains == 2) {
            block.at(r, 0) = 1.0;
            block.at(r, nodes) = spec.imaginary_part ? 1.0 : -1.0;
            ++r;
        } else if (spec.imaginary_part) {
            block.at(r++, 0) = 1.0;
        }
        for (std::size_t ci = 0; ci < chains; ++ci) {
            if (mode_is_free(spec.modes[ci], f)) continue;
            block.at(r++, nodes * ci + (std::size_t)n_t) = 1.0; // c(T) = 0
        }
        blocks[bi] = std::move(block);
    }
    return blocks;
}

DiscreteIndexResult discrete_index(const HalfCylinderProblem& problem, const GridConfig& grid) {
    auto blocks = discretized_blocks(problem, grid);

    std::vector<std::vector<double>> sigmas(blocks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < (long long)blocks.size(); ++i)
        sigmas[(std::size_t)i] = singular_values_serial(blocks[(std::size_t)i]);

    DiscreteIndexResult out;
    out.block_count = blocks.size();
    double sigma_min_kept = 0.0;
    double sigma_max_discarded = 0.0;
    long long index = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        long long rows = (long long)blocks[i].rows;
        long long cols = (long long)blocks[i].cols;
        long long rank = (long long)numerical_rank(sigmas[i], grid.svd_threshold);
        index += (cols - rank) - (rows - rank);
        out.total_rows += rows;
        out.total_cols += cols;
        out.total_rank += rank;
        for (double s : sigmas[i]) {
            if (s > grid.svd_threshold) {
                if (sigma_min_kept == 0.0 || s < sigma_min_kept) sigma_min_kept = s;
            } else {
                sigma_max_discarded = std::max(sigma_max_discarded, s);
            }
        }
    }
    out.index = index;
    out.sigma_min_kept = sigma_min_kept;
    out.sigma_max_discarded = sigma_max_discarded;
    out.gap_ratio = sigma_max_discarded > 0.0 ? sigma_min_kept / sigma_max_discarded
                                              : sigma_min_kept / grid.svd_threshold;
    if (out.gap_ratio < grid.min_gap_ratio)
        throw IllConditionedError(out.gap_ratio,
                                  "no clear singular-value gap (ratio " +
                                      std::to_string(out.gap_ratio) + "); refine the grid");

    long long m_half = grid.n_theta / 2 - 1;
    long long window = m_half - 2 * problem.v;
    out.mode_lo = problem.reversed ? -window : -window - 2 * problem.v;
    out.mode_hi = problem.reversed ? window + 2 * problem.v : window;
    out.mode_count_reference = mode_count_index(problem);
    return out;
}

// --- weight scans ----------------------------------------------------------------

JumpScanResult jump_scan(long long v, const std::vector<Rational>& weights) {
    if (weights.empty()) throw ValidationError("jump_scan needs at least one weight");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].is_integer())
            throw OnWallError("weight " + weights[i].str() + " lies on an integer wall");
        if (i > 0 && !(weights[i - 1] < weights[i]))
            throw ValidationError("weights must be strictly increasing");
    }

    JumpScanResult out;
    out.v = v;
    out.entries.resize(weights.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < (long long)weights.size(); ++i) {
        auto problem = HalfCylinderProblem::make(v, weights[(std::size_t)i]);
        out.entries[(std::size_t)i] = {weights[(std::size_t)i], mode_count_index(problem)};
    }

    bool consistent = true;
    std::optional<long long> multiplicity;
    for (std::size_t i = 0; i + 1 < out.entries.size(); ++i) {
        long long diff = out.entries[i + 1].index - out.entries[i].index;
        long long walls = weights[i + 1].floor() - weights[i].floor();
        out.differences.push_back(diff);
        out.walls_crossed.push_back(walls);
        if (walls == 0) {
            if (diff != 0) consistent = false;
            continue;
        }
        if (diff % walls != 0) {
            consistent = false;
            continue;
        }
        long long per_wall = -diff / walls; // index drops across each wall
        if (multiplicity && *multiplicity != per_wall) consistent = false;
        multiplicity = per_wall;
    }
    out.multiplicity_consistent = consistent;
    if (consistent) out.per_wall_multiplicity = multiplicity;
    return out;
}

// --- gluing ------------------------------------------------------------------------

GlueCertificate glue_numeric(long long v, const Rational& w) {
    GlueCertificate cert;
    cert.v = v;
    cert.w = w;
    cert.ind_plus = mode_count_index(HalfCylinderProblem::make(v, w));
    cert.ind_minus = mode_count_index(HalfCylinderProblem::make(v, -w));
    cert.ind_glued = rr_boundary_index(glued_cylinder_pair(v));
    cert.additivity_pass = cert.ind_glued == cert.ind_plus + cert.ind_minus;
    cert.closed_form_pass = cert.ind_glued == 4 - 4 * v;
    return cert;
}

} // namespace wspindex
