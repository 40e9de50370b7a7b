#ifndef KRING_CHAR_MATRIX_HPP
#define KRING_CHAR_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "kring/face.hpp"
#include "kring/simplicial_complex.hpp"
#include "kring/smith.hpp"

namespace kring {

/// The characteristic matrix assigns the integer row a_i in Z^n to vertex i
/// of the nerve.  Stored as an m x n Matrix; this header checks shape and
/// the unimodularity condition on faces.

inline void check_lambda_shape(const Matrix& lambda, int m, int n) {
    if (static_cast<int>(row_count(lambda)) != m)
        throw std::invalid_argument("lambda must have one row per vertex: expected " +
                                    std::to_string(m) + ", got " + std::to_string(row_count(lambda)));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (static_cast<int>(lambda[i].size()) != n)
            throw std::invalid_argument("lambda row " + std::to_string(i + 1) + " has " +
                                        std::to_string(lambda[i].size()) + " entries, expected " +
                                        std::to_string(n));
}

/// Rows of lambda indexed by the face's vertices, in increasing vertex order.
inline Matrix submatrix_rows(const Matrix& lambda, Face face) {
    Matrix out;
    out.reserve(static_cast<std::size_t>(face.size()));
    for (int v : face.vertices()) out.push_back(lambda.at(static_cast<std::size_t>(v - 1)));
    return out;
}

/// <t, a_j> for a covector t of length n.
inline Int pairing(const std::vector<Int>& t, const std::vector<Int>& row) {
    if (t.size() != row.size()) throw std::invalid_argument("covector length mismatch");
    Int s = 0;
    for (std::size_t k = 0; k < t.size(); ++k) s += t[k] * row[k];
    return s;
}

struct NonsingularityReport {
    bool ok = true;
    std::vector<Face> violations;  // card-lex order
};

/// A face passes when the Smith diagonal of its row submatrix is all ones,
/// i.e. the rows extend to a Z-basis of Z^n.  Every nonempty face of the
/// complex is checked; all failing faces are reported.
inline NonsingularityReport validate_nonsingular(const SimplicialComplex& complex,
                                                 const Matrix& lambda) {
    check_lambda_shape(lambda, complex.num_vertices(), complex.dim() + 1);
    NonsingularityReport report;
    for (const Face& f : complex.all_faces()) {
        if (f.is_empty()) continue;
        std::vector<Int> diag = smith_diagonal(submatrix_rows(lambda, f));
        bool good = true;
        for (const Int& d : diag)
            if (d != 1) good = false;
        if (!good) report.violations.push_back(f);
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace kring

#endif  // KRING_CHAR_MATRIX_HPP
