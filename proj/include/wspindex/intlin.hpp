#pragma once

#include <vector>

#include "wspindex/rational.hpp"

namespace wspindex {

// Dense integer matrix, row-major. Sizes in this project are tiny
// (variables x monomials of a polynomial), so no sparsity games.
using IntMat = std::vector<std::vector<long long>>;

struct SmithForm {
    IntMat s;                          // diagonal form, s = u * a * v
    IntMat u;                          // unimodular, rows
    IntMat v;                          // unimodular, columns
    std::vector<long long> invariants; // nonzero diagonal entries d1 | d2 | ...
    std::size_t rank = 0;
};

// Smith normal form over the integers with full transform tracking.
SmithForm smith_normal_form(const IntMat& a);

// Exact determinant of a square integer matrix (Bareiss elimination).
long long int_det(const IntMat& a);

struct RationalSolve {
    bool consistent = false;
    std::size_t rank = 0;
    bool unique = false;              // rank == #unknowns
    std::vector<Rational> solution;   // one solution when consistent (free vars = 0)
};

// Solve a * x = rhs exactly over the rationals by Gauss elimination.
RationalSolve solve_rational(const std::vector<std::vector<Rational>>& a,
                             const std::vector<Rational>& rhs);

} // namespace wspindex
