#pragma once

#include <cstddef>
#include <vector>

namespace wspindex {

// Row-major dense matrix of doubles, just big enough for the oracle blocks.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Direct sum along the diagonal; used to expose the assembled operator that
// the blockwise computation factors.
DenseMatrix block_diag(const std::vector<DenseMatrix>& blocks);

// Singular values in descending order via one-sided Jacobi. The serial
// version is the reference implementation; the parallel one runs the same
// rotations in round-robin rounds of disjoint column pairs under OpenMP and
// must agree to rounding error. Both are pure functions.
std::vector<double> singular_values_serial(DenseMatrix a);
std::vector<double> singular_values_parallel(DenseMatrix a);

// Count of singular values strictly above the threshold.
std::size_t numerical_rank(const std::vector<double>& singular_values, double threshold);

} // namespace wspindex
