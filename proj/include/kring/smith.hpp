#ifndef KRING_SMITH_HPP
#define KRING_SMITH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kring/integer.hpp"

namespace kring {

/// Dense integer matrix, row major.  Rows may be empty; all rows of one
/// matrix have equal length.
using Matrix = std::vector<std::vector<Int>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline std::size_t row_count(const Matrix& m) { return m.size(); }
inline std::size_t col_count(const Matrix& m) { return m.empty() ? 0 : m.front().size(); }

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (col_count(a) != row_count(b)) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(row_count(a), std::vector<Int>(col_count(b), 0));
    for (std::size_t i = 0; i < row_count(a); ++i)
        for (std::size_t k = 0; k < col_count(a); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < col_count(b); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline Matrix transpose(const Matrix& m) {
    Matrix out(col_count(m), std::vector<Int>(row_count(m), 0));
    for (std::size_t i = 0; i < row_count(m); ++i)
        for (std::size_t j = 0; j < col_count(m); ++j) out[j][i] = m[i][j];
    return out;
}

/// U * input * V = diag(diagonal), U and V unimodular.  diagonal has length
/// min(rows, cols), entries nonnegative, each dividing the next (zeros last).
struct SmithResult {
    std::vector<Int> diagonal;
    Matrix U;  // rows x rows
    Matrix V;  // cols x cols
    std::size_t rank = 0;
};

inline SmithResult smith_normal_form(Matrix a) {
    const std::size_t r = row_count(a);
    const std::size_t c = col_count(a);
    Matrix u = identity_matrix(r);
    Matrix v = identity_matrix(c);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < c; ++j) a[dst][j] += q * a[src][j];
        for (std::size_t j = 0; j < r; ++j) u[dst][j] += q * u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < r; ++i) a[i][dst] += q * a[i][src];
        for (std::size_t i = 0; i < c; ++i) v[i][dst] += q * v[i][src];
    };

    const std::size_t steps = std::min(r, c);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        bool settled = false;
        while (!settled) {
            // Bring a nonzero entry of least magnitude to (t, t); a unit
            // entry is taken immediately.
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < r && (!found || abs(a[pi][pj]) != 1); ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                        found = true;
                        if (abs(a[i][j]) == 1) break;
                    }
            if (!found) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i)
                if (a[i][t] != 0) {
                    add_row(i, t, -(a[i][t] / a[t][t]));
                    if (a[i][t] != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < c; ++j)
                if (a[t][j] != 0) {
                    add_col(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0) clean = false;
                }
            if (!clean) continue;

            // Pull in any entry the pivot does not divide, then re-eliminate.
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        fixed = true;
                    }
            settled = !fixed;
        }
        if (a[t][t] == 0) break;  // remaining block is zero
        if (a[t][t] < 0) {
            for (std::size_t j = 0; j < c; ++j) a[t][j] = -a[t][j];
            for (std::size_t j = 0; j < r; ++j) u[t][j] = -u[t][j];
        }
    }

    SmithResult out;
    out.diagonal.resize(steps, 0);
    for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = a[i][i];
    out.rank = t;
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

/// Diagonal of the Smith normal form alone.
inline std::vector<Int> smith_diagonal(const Matrix& a) { return smith_normal_form(a).diagonal; }

/// Exact determinant of a square matrix (Bareiss, fraction free).
inline Int determinant(Matrix a) {
    const std::size_t n = row_count(a);
    if (n != col_count(a)) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t i = k + 1;
            while (i < n && a[i][k] == 0) ++i;
            if (i == n) return 0;
            std::swap(a[k], a[i]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool is_unimodular(const Matrix& a) {
    if (a.empty()) return true;
    if (row_count(a) != col_count(a)) return false;
    Int d = determinant(a);
    return d == 1 || d == -1;
}

/// Inverse of a unimodular matrix.  With U M V = I the inverse is V U.
inline Matrix inverse_unimodular(const Matrix& m) {
    if (row_count(m) != col_count(m)) throw std::invalid_argument("inverse of a non-square matrix");
    SmithResult s = smith_normal_form(m);
    for (const Int& d : s.diagonal)
        if (d != 1) throw std::invalid_argument("matrix is not unimodular");
    return mat_mul(s.V, s.U);
}

inline std::size_t matrix_rank(const Matrix& a) {
    if (a.empty() || col_count(a) == 0) return 0;
    return smith_normal_form(a).rank;
}

/// Rank and invariant factors of the lattice spanned by a set of rows.
struct LatticeInvariants {
    std::size_t rank = 0;
    std::vector<Int> factors;  // d_1 | d_2 | ... | d_rank, all positive
};

/// Quotient rounded to the nearest integer, for centered remainders.
inline Int rounded_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

/// Integer row echelon: at most ncols rows spanning the same row lattice.
/// Pivot rows are size-reduced against each other after every change; the
/// plain cascade can otherwise blow entries up to thousands of digits on
/// presentations a few hundred columns wide.
inline Matrix echelon_rows(Matrix rows, std::size_t ncols) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<Int>> ech;
    std::vector<std::size_t> pivot_of_col(ncols, npos);

    // centered reduction of r against the pivots right of `from`
    auto tail_reduce = [&](std::vector<Int>& r, std::size_t from) {
        for (std::size_t c = from; c < ncols; ++c) {
            if (r[c] == 0 || pivot_of_col[c] == npos) continue;
            const std::vector<Int>& piv = ech[pivot_of_col[c]];
            Int q = rounded_div(r[c], piv[c]);
            if (q == 0) continue;
            for (std::size_t j = c; j < ncols; ++j)
                if (piv[j] != 0) r[j] -= q * piv[j];
        }
    };
    // centered reduction of every other pivot row at column `lead`
    auto back_reduce = [&](std::size_t lead) {
        const std::vector<Int>& piv = ech[pivot_of_col[lead]];
        for (std::size_t p = 0; p < ech.size(); ++p) {
            if (p == pivot_of_col[lead] || ech[p][lead] == 0) continue;
            Int q = rounded_div(ech[p][lead], piv[lead]);
            if (q == 0) continue;
            for (std::size_t j = lead; j < ncols; ++j)
                if (piv[j] != 0) ech[p][j] -= q * piv[j];
        }
    };

    for (auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("row length mismatch");
        for (std::size_t lead = 0; lead < ncols;) {
            if (row[lead] == 0) {
                ++lead;
                continue;
            }
            std::size_t p = pivot_of_col[lead];
            if (p == npos) {
                tail_reduce(row, lead + 1);
                pivot_of_col[lead] = ech.size();
                ech.push_back(std::move(row));
                back_reduce(lead);
                row.clear();
                break;
            }
            std::vector<Int>& piv = ech[p];
            if (row[lead] % piv[lead] == 0) {
                Int q = row[lead] / piv[lead];
                for (std::size_t j = lead; j < ncols; ++j)
                    if (piv[j] != 0) row[j] -= q * piv[j];
            } else {
                // GL_2(Z) update: the pivot row picks up the gcd, the
                // incoming row's entry at this column becomes zero.
                Int u, v;
                Int g = ext_gcd(piv[lead], row[lead], u, v);
                Int pq = piv[lead] / g;
                Int rq = row[lead] / g;
                for (std::size_t j = lead; j < ncols; ++j) {
                    Int np = u * piv[j] + v * row[j];
                    Int nr = pq * row[j] - rq * piv[j];
                    piv[j] = std::move(np);
                    row[j] = std::move(nr);
                }
                tail_reduce(piv, lead + 1);
                back_reduce(lead);
            }
        }
    }

    return ech;
}

/// Echelon first (preserves the row lattice, compacts to at most ncols
/// rows), then the Smith form of the compacted matrix.  Intended for
/// presentations with many more rows than columns.
inline LatticeInvariants lattice_invariants(Matrix rows, std::size_t ncols) {
    Matrix ech = echelon_rows(std::move(rows), ncols);
    LatticeInvariants out;
    out.rank = ech.size();
    if (ech.empty()) return out;
    SmithResult s = smith_normal_form(std::move(ech));
    for (std::size_t i = 0; i < s.rank; ++i) out.factors.push_back(s.diagonal[i]);
    if (s.rank != out.rank) throw std::logic_error("echelon rank disagrees with Smith rank");
    return out;
}

/// Integer solution of A x = b given a precomputed Smith form of A, or
/// nullopt when none exists.  With U A V = D the system becomes D y = U b,
/// y = V^{-1} x; it is solvable iff d_i divides (U b)_i on the diagonal and
/// (U b)_i vanishes beyond the rank.
inline std::optional<std::vector<Int>> solve_integer(const SmithResult& s,
                                                     const std::vector<Int>& b) {
    const std::size_t r = row_count(s.U);
    const std::size_t c = col_count(s.V);
    if (b.size() != r) throw std::invalid_argument("right-hand side length mismatch");
    std::vector<Int> y(c, 0);
    for (std::size_t i = 0; i < r; ++i) {
        Int ub = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (b[j] != 0) ub += s.U[i][j] * b[j];
        if (i < s.rank) {
            if (ub % s.diagonal[i] != 0) return std::nullopt;
            y[i] = ub / s.diagonal[i];
        } else if (ub != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < s.rank && j < c; ++j)
            if (y[j] != 0) x[i] += s.V[i][j] * y[j];
    return x;
}

}  // namespace kring

#endif  // KRING_SMITH_HPP
