#pragma once

// The associated form of a complete intersection: the degree-T dual form
// A(y) = omega((y_1 xbar_1 + ... + y_n xbar_n)^T), computed from the closed
// coefficient formula  coeff(y^alpha) = multinomial(T; alpha) * omega(x^alpha)
// rather than by expanding the T-th power (the equivalence is covered by an
// oracle test at small T). Also: the apolar-annihilator comparison that
// verifies A is a Macaulay inverse system, and the Milnor-algebra entry path.

#include <optional>
#include <vector>

#include "calculus.hpp"
#include "graded.hpp"

namespace lefschetz {

template <Scalar F>
struct AssociatedForm {
    Poly<F> form;             // degree T, dual variables
    Monomial socle_monomial;  // provenance: the socle data used
    F socle_scalar;

    // Projective normalization: leading standard coefficient scaled to one.
    Poly<F> normalized() const { return form.scaled(form.leading_coeff().inv()); }
};

template <Scalar F>
AssociatedForm<F> associated_form(const GradedQuotient<F>& q, const SocleData<F>& s) {
    q.require_ci();
    const int t = q.socle_degree();
    Poly<F> a(VarSpace::Dual, q.system().n, t);
    for (const Monomial& alpha : monomials_of_degree(q.system().n, t)) {
        const Poly<F> x_alpha =
            Poly<F>::term(VarSpace::Primal, alpha, F::from_int(q.system().field, 1));
        const F w = omega(q, s, x_alpha);
        if (w.is_zero()) continue;
        a.add_term(alpha, w.times(multinomial(t, alpha)));
    }
    if (a.is_zero())
        throw InvariantViolation("associated form vanished; over a prime field this means the modulus is too small");
    return AssociatedForm<F>{std::move(a), s.socle_monomial, s.c};
}

template <Scalar F>
AssociatedForm<F> associated_form(const GradedQuotient<F>& q) {
    return associated_form(q, socle_functional(q));
}

// Per-degree comparison of Ann(A)_d (kernel of the catalecticant map
// S_d -> R_(T-d), g -> g o A) against J_d. Containment J <= Ann is certified
// generator-by-generator; equality of all dimensions then gives equality.
struct ApolarReport {
    std::vector<long> annihilator_dims;  // dim Ann(A)_d for d = 0..T
    std::vector<long> ideal_dims;        // dim J_d for d = 0..T
    bool generators_annihilate = false;  // every f_j o A == 0
    bool dims_equal = false;

    bool inverse_system_verified() const { return generators_annihilate && dims_equal; }
};

template <Scalar F>
ApolarReport apolar_annihilator_dims(const AssociatedForm<F>& a, const GradedQuotient<F>& q) {
    const int t = q.socle_degree();
    const std::size_t n = q.system().n;
    ApolarReport report;
    report.generators_annihilate = true;
    for (const auto& g : q.system().gens)
        if (!g.is_zero() && !apolar_apply(g, a.form).is_zero()) report.generators_annihilate = false;
    report.dims_equal = true;
    for (int d = 0; d <= t; ++d) {
        const std::vector<Monomial> source = monomials_of_degree(n, d);
        const std::vector<Monomial> target = monomials_of_degree(n, t - d);
        Matrix<F> cat(source.size(), target.size());
        for (std::size_t i = 0; i < source.size(); ++i) {
            const Poly<F> applied = apolar_apply(
                Poly<F>::term(VarSpace::Primal, source[i], F::from_int(q.system().field, 1)), a.form);
            for (std::size_t j = 0; j < target.size(); ++j) cat(i, j) = applied.coeff(target[j]);
        }
        const long ann = static_cast<long>(source.size() - rank(cat));
        const long ideal = static_cast<long>(q.piece(d).ideal_dim());
        report.annihilator_dims.push_back(ann);
        report.ideal_dims.push_back(ideal);
        if (ann != ideal) report.dims_equal = false;
    }
    return report;
}

// Gradient system of a single form of degree >= 3: the Milnor-algebra path.
// The caller certifies complete-intersection-ness, which for this system is
// equivalent to smoothness of the hypersurface f = 0.
template <Scalar F>
SystemInput<F> milnor_system(const Poly<F>& f, const FieldConfig& cfg) {
    if (f.degree() < 3) throw DegreeError("milnor_system expects deg f >= 3");
    return SystemInput<F>(gradient(f), cfg);
}

}  // namespace lefschetz
