#include "wspindex/svd.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wspindex {

DenseMatrix block_diag(const std::vector<DenseMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) { rows += b.rows; cols += b.cols; }
    DenseMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c)
                out.at(r0 + r, c0 + c) = b.at(r, c);
        r0 += b.rows;
        c0 += b.cols;
    }
    return out;
}

namespace {

constexpr double kJacobiTol = 1e-13;
constexpr int kMaxSweeps = 60;

// Column-major workspace: one-sided Jacobi walks column pairs, so keeping
// columns contiguous is what makes the inner loops stream.
struct ColumnStore {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;          // column-major
    std::vector<double> norms;         // squared column norms, refreshed per sweep

    double* col(std::size_t c) { return data.data() + c * rows; }
    const double* col(std::size_t c) const { return data.data() + c * rows; }

    void refresh_norms() {
        norms.assign(cols, 0.0);
        for (std::size_t c = 0; c < cols; ++c) {
            const double* x = col(c);
            double s = 0;
            for (std::size_t r = 0; r < rows; ++r) s += x[r] * x[r];
            norms[c] = s;
        }
    }
};

// Load row-major input as columns of the workspace; transpose when the rows
// are the short dimension (singular values are shared).
ColumnStore load(const DenseMatrix& a) {
    ColumnStore m;
    bool flip = a.rows < a.cols;
    m.rows = flip ? a.cols : a.rows;
    m.cols = flip ? a.rows : a.cols;
    m.data.resize(m.rows * m.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c) {
            if (flip)
                m.col(r)[c] = a.at(r, c);
            else
                m.col(c)[r] = a.at(r, c);
        }
    m.refresh_norms();
    return m;
}

// One Jacobi rotation orthogonalizing columns p and q; returns the relative
// off-diagonal weight seen before rotating. Cached norms are kept exact
// through the standard two-eigenvalue update.
double rotate_pair(ColumnStore& m, std::size_t p, std::size_t q) {
    double app = m.norms[p], aqq = m.norms[q];
    if (app == 0.0 || aqq == 0.0) return 0.0;
    double* cp = m.col(p);
    double* cq = m.col(q);
    double apq = 0;
    for (std::size_t r = 0; r < m.rows; ++r) apq += cp[r] * cq[r];
    double off = std::fabs(apq) / std::sqrt(app * aqq);
    if (off < kJacobiTol) return off;

    double tau = (aqq - app) / (2.0 * apq);
    double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = c * t;
    for (std::size_t r = 0; r < m.rows; ++r) {
        double x = cp[r], y = cq[r];
        cp[r] = c * x - s * y;
        cq[r] = s * x + c * y;
    }
    m.norms[p] = app - t * apq;
    m.norms[q] = aqq + t * apq;
    return off;
}

std::vector<double> extract_sorted(const ColumnStore& m) {
    std::vector<double> sigma(m.cols, 0.0);
    for (std::size_t c = 0; c < m.cols; ++c) {
        const double* x = m.col(c);
        double s = 0;
        for (std::size_t r = 0; r < m.rows; ++r) s += x[r] * x[r];
        sigma[c] = std::sqrt(s);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());
    return sigma;
}

} // namespace

std::vector<double> singular_values_serial(DenseMatrix a) {
    if (a.rows == 0 || a.cols == 0) return {};
    ColumnStore m = load(a);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        m.refresh_norms();
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < m.cols; ++p)
            for (std::size_t q = p + 1; q < m.cols; ++q)
                worst = std::max(worst, rotate_pair(m, p, q));
        if (worst < kJacobiTol) break;
    }
    return extract_sorted(m);
}

// TODO: batch several round-robin rounds per parallel region; one barrier
// per round means the parallel version only wins past ~10^3 columns.
std::vector<double> singular_values_parallel(DenseMatrix a) {
    if (a.rows == 0 || a.cols == 0) return {};
    ColumnStore m = load(a);
    std::size_t n = m.cols;
    std::size_t slots = n + (n % 2); // round-robin needs an even player count
    std::vector<std::size_t> players(slots);
    for (std::size_t i = 0; i < slots; ++i) players[i] = i;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        m.refresh_norms();
        double worst = 0.0;
        // (slots - 1) rounds of disjoint pairs cover every column pair once;
        // pairs within a round touch disjoint columns and norm slots
        for (std::size_t round = 0; round + 1 < slots; ++round) {
            double round_worst = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(max : round_worst) schedule(static)
#endif
            for (long long g = 0; g < (long long)(slots / 2); ++g) {
                std::size_t p = players[(std::size_t)g];
                std::size_t q = players[slots - 1 - (std::size_t)g];
                if (p >= n || q >= n) continue; // bye slot
                double off = rotate_pair(m, std::min(p, q), std::max(p, q));
                round_worst = std::max(round_worst, off);
            }
            worst = std::max(worst, round_worst);
            std::size_t last = players[slots - 1];
            for (std::size_t i = slots - 1; i > 1; --i) players[i] = players[i - 1];
            players[1] = last;
        }
        if (worst < kJacobiTol) break;
    }
    return extract_sorted(m);
}

std::size_t numerical_rank(const std::vector<double>& singular_values, double threshold) {
    std::size_t rank = 0;
    for (double s : singular_values)
        if (s > threshold) ++rank;
    return rank;
}

} // namespace wspindex
