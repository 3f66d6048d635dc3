#pragma once

// Projective certificates for the two equivalent conditions on a complete
// intersection:
//   (1) the hypersurface cut out by the associated form is smooth;
//   (2) no (T-1)-st power of a nonzero linear form lies in the ideal's
//       degree-(T-1) piece.
// Both reduce to one exact decision: a system of n equal-degree forms in n
// variables is Artinian iff its quotient vanishes in degree n(e-1)+1. If the
// forms share a projective zero the quotient is nonzero in every degree,
// while a regular sequence has socle degree n(e-1), so this single degree is
// decisive. Rank computations over the rationals decide the statement over
// any extension field; over a prime field the certificate is one-sided
// (Artinian mod p implies Artinian in characteristic zero, not conversely).

#include <optional>
#include <span>
#include <vector>

#include "assoc_form.hpp"
#include "graded.hpp"
#include "sampling.hpp"

namespace lefschetz {

struct ArtinianCertificate {
    std::size_t n = 0;
    int form_degree = 0;
    int decision_degree = 0;  // n * (form_degree - 1) + 1
    long quotient_dim = 0;    // dim (R / ideal) at the decision degree
    bool artinian = false;    // quotient_dim == 0
};

template <Scalar F>
ArtinianCertificate is_artinian_system(std::span<const Poly<F>> forms) {
    const std::size_t n = forms.size();
    if (n == 0) throw Error("is_artinian_system: empty system");
    const int e = forms[0].degree();
    if (e < 1) throw DegreeError("is_artinian_system: forms must have degree >= 1");
    for (const auto& f : forms) {
        if (f.nvars() != n) throw Error("is_artinian_system: need n forms in n variables");
        if (f.space() != forms[0].space())
            throw VarSpaceError("is_artinian_system: mixed variable spaces");
        if (f.degree() != e) throw DegreeError("is_artinian_system: unequal form degrees");
    }
    ArtinianCertificate cert;
    cert.n = n;
    cert.form_degree = e;
    cert.decision_degree = static_cast<int>(n) * (e - 1) + 1;
    cert.quotient_dim = ideal_piece_quotient_dim(forms, n, cert.decision_degree);
    cert.artinian = cert.quotient_dim == 0;
    return cert;
}

template <Scalar F>
ArtinianCertificate is_artinian_system(const std::vector<Poly<F>>& forms) {
    return is_artinian_system(std::span<const Poly<F>>(forms));
}

// Condition (1): the associated hypersurface is smooth iff its Jacobian ideal
// (the span of the partials) is irrelevant, decided at degree n(T-2)+1.
template <Scalar F>
ArtinianCertificate condition_smooth_assocform(const AssociatedForm<F>& a) {
    if (a.form.is_zero()) throw Error("condition_smooth_assocform: zero form");
    if (a.form.degree() < 2) throw DegreeError("condition_smooth_assocform: degree must be >= 2");
    return is_artinian_system(all_partials(a.form));
}

// Coordinate forms of the projection-composed Veronese map: h_i(a) is the
// coefficient of the i-th standard monomial of M_(T-1) in NF((sum a_j x_j)^(T-1)),
// assembled from the closed form multinomial(T-1; alpha) * NF(x^alpha).
template <Scalar F>
std::vector<Poly<F>> veronese_coordinate_forms(const GradedQuotient<F>& q) {
    q.require_ci();
    const std::size_t n = q.system().n;
    const int e = q.socle_degree() - 1;
    const DegreePiece<F>& piece = q.piece(e);
    const std::vector<Monomial> standard = piece.standard_monomials();
    std::vector<Poly<F>> h(standard.size(), Poly<F>(VarSpace::Coeff, n, e));
    const F one = F::from_int(q.system().field, 1);
    for (const Monomial& alpha : monomials_of_degree(n, e)) {
        const Poly<F> nf = piece.normal_form(Poly<F>::term(VarSpace::Primal, alpha, one));
        if (nf.is_zero()) continue;
        const mpz_class mult = multinomial(e, alpha);
        for (std::size_t i = 0; i < standard.size(); ++i) {
            const F c = nf.coeff(standard[i]);
            if (!c.is_zero()) h[i].add_term(alpha, c.times(mult));
        }
    }
    return h;
}

template <Scalar F>
struct VeroneseCertificate {
    std::vector<Poly<F>> coordinate_forms;  // h_1..h_n in the a-variables
    ArtinianCertificate artinian;           // verdict on the h-system
    bool empty_intersection = false;        // condition (2)
    // Best-effort witness on failure: a nonzero linear ell with
    // NF(ell^(T-1)) == 0, verified before being attached. The FALSE verdict
    // never depends on finding it.
    std::optional<Poly<F>> witness;
};

struct WitnessSearchOptions {
    int small_box = 2;       // exhaustive box for projectively normalized lines
    int random_trials = 64;  // fallback random line search
    int random_bound = 10;
    std::uint64_t seed = 0x1ef5c4e72ull;
};

namespace detail {

template <Scalar F>
bool is_veronese_witness(const GradedQuotient<F>& q, const Poly<F>& ell) {
    if (ell.is_zero()) return false;
    return q.normal_form(veronese_power(ell, q.socle_degree() - 1)).is_zero();
}

template <Scalar F>
std::optional<Poly<F>> find_veronese_witness(const GradedQuotient<F>& q,
                                             const WitnessSearchOptions& opt) {
    const std::size_t n = q.system().n;
    const FieldConfig& cfg = q.system().field;
    const F one = F::from_int(cfg, 1);
    // Coordinate lines first: they witness every monomial-style failure.
    for (std::size_t i = 0; i < n; ++i) {
        Poly<F> ell = Poly<F>::term(VarSpace::Primal, Monomial::variable(n, i), one);
        if (is_veronese_witness(q, ell)) return ell;
    }
    // Exhaustive small box, projectively normalized (first nonzero coefficient 1).
    std::vector<std::int64_t> coords(n, 0);
    std::optional<Poly<F>> found;
    auto scan = [&](auto&& self, std::size_t i, bool leading_set) -> bool {
        if (i == n) {
            if (!leading_set) return false;
            Poly<F> ell(VarSpace::Primal, n, 1);
            for (std::size_t j = 0; j < n; ++j)
                ell.add_term(Monomial::variable(n, j), F::from_int(cfg, coords[j]));
            if (is_veronese_witness(q, ell)) {
                found = std::move(ell);
                return true;
            }
            return false;
        }
        if (!leading_set) {
            coords[i] = 0;
            if (self(self, i + 1, false)) return true;
            coords[i] = 1;
            return self(self, i + 1, true);
        }
        for (std::int64_t v = -opt.small_box; v <= opt.small_box; ++v) {
            coords[i] = v;
            if (self(self, i + 1, true)) return true;
        }
        return false;
    };
    if (scan(scan, 0, false)) return found;
    // Random lines as a last resort.
    Rng rng(opt.seed);
    for (int t = 0; t < opt.random_trials; ++t) {
        Poly<F> ell = random_linear_form<F>(rng, cfg, n, opt.random_bound);
        if (is_veronese_witness(q, ell)) return ell;
    }
    return std::nullopt;
}

}  // namespace detail

// Condition (2): the h-system is Artinian iff no nonzero linear form ell has
// ell^(T-1) inside the degree-(T-1) piece of the ideal.
template <Scalar F>
VeroneseCertificate<F> condition_veronese_empty(const GradedQuotient<F>& q,
                                                const WitnessSearchOptions& opt = {}) {
    VeroneseCertificate<F> cert;
    cert.coordinate_forms = veronese_coordinate_forms(q);
    cert.artinian = is_artinian_system(cert.coordinate_forms);
    cert.empty_intersection = cert.artinian.artinian;
    if (!cert.empty_intersection) cert.witness = detail::find_veronese_witness(q, opt);
    return cert;
}

// The two conditions are equivalent; disagreement is always an implementation
// bug, never a mathematical discovery.
template <Scalar F>
bool conditions_agree(const GradedQuotient<F>& q, const AssociatedForm<F>& a) {
    q.require_ci();
    return condition_smooth_assocform(a).artinian ==
           condition_veronese_empty(q).empty_intersection;
}

}  // namespace lefschetz
