#pragma once

// Random polynomials from the configured sampling box (integers in [-B, B]
// over the rationals, uniform residues over a prime field).

#include "poly.hpp"
#include "rng.hpp"

namespace lefschetz {

template <Scalar F>
Poly<F> random_linear_form(Rng& rng, const FieldConfig& cfg, std::size_t n, int bound) {
    for (;;) {
        Poly<F> ell(VarSpace::Primal, n, 1);
        for (std::size_t i = 0; i < n; ++i)
            ell.add_term(Monomial::variable(n, i), random_scalar<F>(rng, cfg, bound));
        if (!ell.is_zero()) return ell;
    }
}

// Dense form: every coefficient drawn from the box (zeros allowed per
// coefficient); redrawn if the whole polynomial vanishes.
template <Scalar F>
Poly<F> random_form(Rng& rng, const FieldConfig& cfg, std::size_t n, int degree, int bound) {
    for (;;) {
        Poly<F> f(VarSpace::Primal, n, degree);
        for (const Monomial& m : monomials_of_degree(n, degree))
            f.add_term(m, random_scalar<F>(rng, cfg, bound));
        if (!f.is_zero()) return f;
    }
}

}  // namespace lefschetz
