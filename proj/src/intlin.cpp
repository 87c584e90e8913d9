#include "wspindex/intlin.hpp"

#include <cmath>
#include <cstdlib>

namespace wspindex {

namespace {

long long checked_mul(long long a, long long b) {
    __int128 p = (__int128)a * b;
    if (p > INT64_MAX || p < INT64_MIN) throw ArithmeticOverflow("integer matrix overflow");
    return (long long)p;
}

long long checked_sub(long long a, long long b) {
    __int128 d = (__int128)a - b;
    if (d > INT64_MAX || d < INT64_MIN) throw ArithmeticOverflow("integer matrix overflow");
    return (long long)d;
}

IntMat identity(std::size_t n) {
    IntMat m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void row_swap(IntMat& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void col_swap(IntMat& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row i -= q * row j
void row_axpy(IntMat& m, std::size_t i, std::size_t j, long long q) {
    for (std::size_t c = 0; c < m[i].size(); ++c)
        m[i][c] = checked_sub(m[i][c], checked_mul(q, m[j][c]));
}

// col i -= q * col j
void col_axpy(IntMat& m, std::size_t i, std::size_t j, long long q) {
    for (auto& row : m) row[i] = checked_sub(row[i], checked_mul(q, row[j]));
}

void row_negate(IntMat& m, std::size_t i) {
    for (auto& x : m[i]) x = checked_sub(0, x);
}

} // namespace

SmithForm smith_normal_form(const IntMat& a) {
    SmithForm f;
    f.s = a;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    f.u = identity(rows);
    f.v = identity(cols);

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find pivot: smallest nonzero |entry| in the remaining block
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                long long v = std::llabs(f.s[i][j]);
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        row_swap(f.s, t, pi); row_swap(f.u, t, pi);
        col_swap(f.s, t, pj); col_swap(f.v, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (f.s[i][t] == 0) continue;
                long long q = f.s[i][t] / f.s[t][t];
                row_axpy(f.s, i, t, q); row_axpy(f.u, i, t, q);
                if (f.s[i][t] != 0) { // remainder smaller than pivot: swap up, restart
                    row_swap(f.s, t, i); row_swap(f.u, t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (f.s[t][j] == 0) continue;
                long long q = f.s[t][j] / f.s[t][t];
                col_axpy(f.s, j, t, q); col_axpy(f.v, j, t, q);
                if (f.s[t][j] != 0) {
                    col_swap(f.s, t, j); col_swap(f.v, t, j);
                    dirty = true;
                }
            }
        }
        if (f.s[t][t] < 0) { row_negate(f.s, t); row_negate(f.u, t); }
        ++t;
    }

    // enforce divisibility d1 | d2 | ... by the standard gcd repair
    for (std::size_t i = 0; i + 1 < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            long long di = f.s[i][i], dj = f.s[j][j];
            if (di != 0 && dj % di == 0) continue;
            // mix column j into column i, then re-reduce the 2x2 block
            col_axpy(f.v, i, j, -1); // col i += col j  (axpy with q = -1)
            for (std::size_t r = 0; r < f.s.size(); ++r)
                f.s[r][i] = checked_sub(f.s[r][i], checked_mul(-1, f.s[r][j]));
            // local elimination on rows/cols i..j
            std::size_t lo = i;
            bool dirty = true;
            while (dirty) {
                dirty = false;
                if (f.s[j][lo] != 0) {
                    long long q = f.s[j][lo] / f.s[lo][lo];
                    row_axpy(f.s, j, lo, q); row_axpy(f.u, j, lo, q);
                    if (f.s[j][lo] != 0) { row_swap(f.s, lo, j); row_swap(f.u, lo, j); dirty = true; }
                }
                if (f.s[lo][j] != 0) {
                    long long q = f.s[lo][j] / f.s[lo][lo];
                    col_axpy(f.s, j, lo, q); col_axpy(f.v, j, lo, q);
                    if (f.s[lo][j] != 0) { col_swap(f.s, lo, j); col_swap(f.v, lo, j); dirty = true; }
                }
            }
            if (f.s[i][i] < 0) { row_negate(f.s, i); row_negate(f.u, i); }
            if (f.s[j][j] < 0) { row_negate(f.s, j); row_negate(f.u, j); }
        }
    }

    for (std::size_t i = 0; i < t; ++i)
        if (f.s[i][i] != 0) f.invariants.push_back(f.s[i][i]);
    f.rank = f.invariants.size();
    return f;
}

long long int_det(const IntMat& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    if (a[0].size() != n) throw ValidationError("determinant of non-square matrix");
    // Bareiss: fraction-free elimination, exact over the integers.
    IntMat m = a;
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
                __int128 q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN) throw ArithmeticOverflow("determinant overflow");
                m[i][j] = (long long)q;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

RationalSolve solve_rational(const std::vector<std::vector<Rational>>& a,
                             const std::vector<Rational>& rhs) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (rhs.size() != rows) throw ShapeMismatchError("rhs length does not match row count");

    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = rhs[i];
    }

    RationalSolve out;
    std::vector<long long> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational factor = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_col.push_back((long long)c);
        ++r;
    }
    out.rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return out; // inconsistent, consistent stays false
    out.consistent = true;
    out.unique = (r == cols);
    out.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) out.solution[(std::size_t)pivot_col[i]] = m[i][cols];
    return out;
}

} // namespace wspindex
