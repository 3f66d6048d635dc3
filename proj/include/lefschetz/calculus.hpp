#pragma once

// Polynomial calculus: partial derivatives, Jacobian determinants, the apolar
// differential action of x-polynomials on y-forms, powers of linear forms,
// and point evaluation.

#include <span>
#include <vector>

#include "fields.hpp"
#include "monomial.hpp"
#include "poly.hpp"

namespace lefschetz {

// d/dx_i, space-agnostic. Degree-0 input yields the zero polynomial of degree 0.
template <Scalar F>
Poly<F> partial(const Poly<F>& p, std::size_t i) {
    if (i >= p.nvars()) throw Error("partial: variable index out of range");
    if (p.degree() == 0) return Poly<F>::zero(p.space(), p.nvars(), 0);
    Poly<F> r(p.space(), p.nvars(), p.degree() - 1);
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = m[i];
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = m.exponents();
        exps[i] = e - 1;
        r.add_term(Monomial(std::move(exps)), c.times(static_cast<std::int64_t>(e)));
    }
    return r;
}

template <Scalar F>
std::vector<Poly<F>> all_partials(const Poly<F>& p) {
    std::vector<Poly<F>> out;
    out.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) out.push_back(partial(p, i));
    return out;
}

// Gradient of a primal form of degree >= 2.
template <Scalar F>
std::vector<Poly<F>> gradient(const Poly<F>& f) {
    if (f.space() != VarSpace::Primal)
        throw VarSpaceError("gradient expects a polynomial in the primal variables");
    if (f.degree() < 2) throw DegreeError("gradient expects degree >= 2");
    return all_partials(f);
}

namespace detail {

// Cofactor expansion along the first row; exact over the polynomial ring.
template <Scalar F>
Poly<F> poly_matrix_det(const std::vector<std::vector<Poly<F>>>& m, int degree_tag) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    const std::size_t nvars = m[0][0].nvars();
    const VarSpace space = m[0][0].space();
    Poly<F> acc(space, nvars, degree_tag);
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly<F>>> minor;
        minor.reserve(k - 1);
        int minor_degree = degree_tag - m[0][j].degree();
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Poly<F>> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly<F> cof = m[0][j] * poly_matrix_det(minor, minor_degree);
        if (j % 2 == 0)
            acc += cof;
        else
            acc -= cof;
    }
    return acc;
}

}  // namespace detail

// det(d f_i / d x_j) for n forms in n variables; homogeneous of degree
// sum(deg f_j - 1). For a gradient system this is the Hessian determinant.
template <Scalar F>
Poly<F> jacobian_det(std::span<const Poly<F>> forms) {
    const std::size_t n = forms.size();
    if (n == 0) throw Error("jacobian_det: empty system");
    const std::size_t nvars = forms[0].nvars();
    if (nvars != n) throw Error("jacobian_det: need n forms in n variables");
    int expected = 0;
    for (const auto& f : forms) {
        if (f.nvars() != nvars) throw Error("jacobian_det: mixed variable counts");
        if (f.space() != forms[0].space()) throw VarSpaceError("jacobian_det: mixed variable spaces");
        if (f.degree() < 1) throw DegreeError("jacobian_det: forms must have degree >= 1");
        expected += f.degree() - 1;
    }
    std::vector<std::vector<Poly<F>>> m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Poly<F>> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(partial(forms[i], j));
        m.push_back(std::move(row));
    }
    Poly<F> det = detail::poly_matrix_det(m, expected);
    if (det.degree() != expected)
        throw DegreeError("jacobian_det: declared and computed degrees disagree");
    return det;
}

template <Scalar F>
Poly<F> jacobian_det(const std::vector<Poly<F>>& forms) {
    return jacobian_det(std::span<const Poly<F>>(forms));
}

// Apolar action g(d/dy) F for g primal, F dual; bilinear, degree deg F - deg g.
template <Scalar F>
Poly<F> apolar_apply(const Poly<F>& g, const Poly<F>& big_f) {
    if (g.space() != VarSpace::Primal)
        throw VarSpaceError("apolar_apply: differential operator must be primal");
    if (big_f.space() != VarSpace::Dual)
        throw VarSpaceError("apolar_apply: target form must be dual");
    if (g.nvars() != big_f.nvars()) throw Error("apolar_apply: variable count mismatch");
    if (g.degree() > big_f.degree())
        throw DegreeError("apolar_apply: operator degree " + std::to_string(g.degree()) +
                          " exceeds form degree " + std::to_string(big_f.degree()));
    Poly<F> out(VarSpace::Dual, big_f.nvars(), big_f.degree() - g.degree());
    for (const auto& [alpha, ca] : g.terms()) {
        for (const auto& [beta, cb] : big_f.terms()) {
            if (!alpha.divides(beta)) continue;
            // prod_i beta_i * (beta_i - 1) * ... * (beta_i - alpha_i + 1)
            mpz_class falling = 1;
            for (std::size_t i = 0; i < alpha.nvars(); ++i)
                for (std::uint32_t t = 0; t < alpha[i]; ++t) falling *= (beta[i] - t);
            out.add_term(beta.quotient_by(alpha), (ca * cb).times(falling));
        }
    }
    return out;
}

// ell^m for a linear form, by direct multinomial expansion.
template <Scalar F>
Poly<F> veronese_power(const Poly<F>& ell, int m) {
    if (ell.degree() != 1) throw DegreeError("veronese_power expects a linear form");
    if (m < 1) throw Error("veronese_power: exponent must be >= 1");
    const std::size_t n = ell.nvars();
    std::vector<F> coeffs(n);
    for (const auto& [mono, c] : ell.terms())
        for (std::size_t i = 0; i < n; ++i)
            if (mono[i] == 1) coeffs[i] = c;
    Poly<F> out(ell.space(), n, m);
    for (const Monomial& beta : monomials_of_degree(n, m)) {
        F prod;
        bool started = false;
        bool dead = false;
        for (std::size_t i = 0; i < n && !dead; ++i) {
            for (std::uint32_t t = 0; t < beta[i]; ++t) {
                if (coeffs[i].is_zero()) { dead = true; break; }
                prod = started ? prod * coeffs[i] : coeffs[i];
                started = true;
            }
        }
        if (dead || !started) continue;
        out.add_term(beta, prod.times(multinomial(m, beta)));
    }
    return out;
}

template <Scalar F>
F evaluate(const Poly<F>& p, std::span<const F> point) {
    if (point.size() != p.nvars()) throw Error("evaluate: point dimension mismatch");
    F acc;
    for (const auto& [m, c] : p.terms()) {
        F term = c;
        for (std::size_t i = 0; i < p.nvars(); ++i)
            for (std::uint32_t t = 0; t < m[i]; ++t) term = term * point[i];
        acc += term;
    }
    return acc;
}

}  // namespace lefschetz
