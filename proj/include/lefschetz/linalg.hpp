#pragma once

// Dense exact linear algebra. Two reduction routes share one contract (the
// reduced row echelon form is unique, so results are canonical either way):
//   - prime fields use plain Gauss-Jordan elimination;
//   - rationals use fraction-free (division-postponed) integer elimination
//     in the style of Bareiss, with a single normalization pass at the end.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "fields.hpp"

namespace lefschetz {

template <Scalar F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

// In-place reduced row echelon form; returns the pivot columns in increasing
// order. Zero rows end up at the bottom. Generic Gauss-Jordan route.
template <Scalar F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        const F inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const F factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

namespace detail {

inline mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw InvariantViolation("fraction-free elimination produced a non-exact division");
    return q;
}

// One-step fraction-free Gauss-Jordan on an integer matrix: at each pivot the
// cross-multiplication update (piv * a_ij - a_ic * a_cj) / prev is applied to
// every non-pivot row, above and below; the division by the previous pivot is
// exact (the entries are bordered minors of the input), so entries stay
// minor-sized throughout. After the sweep every pivot entry equals the last
// pivot, so one division per row yields the reduced echelon form.
inline std::vector<std::size_t> fraction_free_jordan(std::vector<std::vector<mpz_class>>& z,
                                                     std::size_t cols) {
    const std::size_t rows = z.size();
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && z[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(z[r], z[pr]);
        const mpz_class piv = z[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            if (z[i][c] == 0) {
                for (std::size_t j = 0; j < cols; ++j) {
                    if (j == c || z[i][j] == 0) continue;
                    z[i][j] = exact_div(z[i][j] * piv, prev);
                }
            } else {
                const mpz_class lead = z[i][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    if (j == c) continue;
                    z[i][j] = exact_div(z[i][j] * piv - lead * z[r][j], prev);
                }
                z[i][c] = 0;
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

// Rational route: clear denominators per row, run the one-step fraction-free
// Gauss-Jordan sweep (divisions postponed to the exact by-previous-pivot
// step), then normalize each pivot row once. Same unique RREF as the generic
// route.
inline std::vector<std::size_t> rref_inplace(Matrix<Rational>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j)
            z[i][j] = m(i, j).num() * (lcm / m(i, j).den());
    }

    const std::vector<std::size_t> pivots = detail::fraction_free_jordan(z, cols);

    for (std::size_t i = 0; i < rows; ++i) {
        if (i < pivots.size()) {
            const mpz_class piv = z[i][pivots[i]];
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(z[i][j], piv);
        } else {
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational();
        }
    }
    return pivots;
}

template <Scalar F>
std::size_t rank(Matrix<F> m) {
    return rref_inplace(m).size();
}

// Basis of the right null space {x : Mx = 0}; one row per basis vector,
// read off the RREF free columns. `one` supplies the field unit (prime-field
// elements carry their modulus, so a bare literal cannot stand in for it).
template <Scalar F>
Matrix<F> kernel_basis(const Matrix<F>& m, const F& one) {
    Matrix<F> r = m;
    const std::vector<std::size_t> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> out(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        out(k, fc) = one;
        for (std::size_t t = 0; t < pivots.size(); ++t)
            out(k, pivots[t]) = -r(t, fc);
    }
    return out;
}

// Determinant of a square matrix via ordinary elimination (test/report sizes).
template <Scalar F>
F det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw Error("det: matrix is not square");
    if (m.rows() == 0) throw Error("det: empty matrix");
    const std::size_t n = m.rows();
    F result;
    bool negate = false;
    bool started = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m(pr, c).is_zero()) ++pr;
        if (pr == n) return F();
        if (pr != c) {
            m.swap_rows(c, pr);
            negate = !negate;
        }
        const F piv = m(c, c);
        result = started ? result * piv : piv;
        started = true;
        const F inv = piv.inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const F factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - factor * m(c, j);
        }
    }
    if (!started) return F();
    return negate ? -result : result;
}

}  // namespace lefschetz
