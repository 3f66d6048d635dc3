#pragma once

// Almost-complete-intersection laboratory: the off-diagonal ideal K generated
// by the products x_i x_j (i < j), generic sampling of g_j in K_(d_j), and
// degreewise verification of the saturation / duality / dimension claims that
// the sampled systems are expected to satisfy generically. Saturation itself
// is never computed: K equals the vanishing ideal of the n coordinate points,
// so degreewise comparison against its closed-form basis is the testable
// content.

#include <optional>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "graded.hpp"
#include "sampling.hpp"

namespace lefschetz {

// Monomial basis of K_d: for d >= 2 every degree-d monomial except the n pure
// powers; K_0 = K_1 = 0. Descending graded-lex, like every basis listing.
inline std::vector<Monomial> offdiag_ideal_basis(std::size_t n, int d) {
    if (n < 2) throw Error("offdiag_ideal_basis needs n >= 2");
    if (d < 0) throw Error("offdiag_ideal_basis: negative degree");
    std::vector<Monomial> out;
    if (d < 2) return out;
    for (const Monomial& m : monomials_of_degree(n, d))
        if (!m.is_pure_power()) out.push_back(m);
    return out;
}

template <Scalar F>
struct AciFixture {
    std::size_t n = 0;
    std::vector<int> d;
    std::vector<Poly<F>> gens;  // g_j in K_(d_j)
    std::uint64_t seed = 0;
    int bound = 0;
    FieldConfig field;

    int socle_degree() const {
        int t = -static_cast<int>(n);
        for (int dj : d) t += dj;
        return t;
    }
};

// Independent nonzero coefficients on the full K_(d_j) monomial basis,
// uniform in the sampling box; reproducible from the seed.
template <Scalar F>
AciFixture<F> sample_aci(const MultiDegree& md, std::uint64_t seed, int bound,
                         const FieldConfig& cfg) {
    if (bound < 1 && cfg.mode == FieldConfig::Mode::Rationals)
        throw Error("sample_aci needs a positive sampling bound over the rationals");
    AciFixture<F> fx;
    fx.n = md.n;
    fx.d = md.d;
    fx.seed = seed;
    fx.bound = bound;
    fx.field = cfg;
    Rng rng(seed);
    for (int dj : md.d) {
        Poly<F> g(VarSpace::Primal, md.n, dj);
        for (const Monomial& m : offdiag_ideal_basis(md.n, dj))
            g.add_term(m, random_nonzero_scalar<F>(rng, cfg, bound));
        fx.gens.push_back(std::move(g));
    }
    return fx;
}

struct AciClaimsReport {
    int T = 0;
    std::vector<long> dim_j;  // dim J(g)_d for d = 0..T-1
    std::vector<long> dim_k;  // dim K_d for d = 0..T-1
    bool containment_ok = false;       // J(g)_d inside K_d for every checked d
    bool claim1_ok = false;            // J(g)_(T-1) == K_(T-1)
    bool n1_zero = false;              // N(g)_1 = 0 (K_1 = 0)
    bool n_tminus1_zero = false;       // N(g)_(T-1) = 0, via the degree-(T-1) equality
    long quotient_dim_at_tminus1 = 0;  // dim (S/J(g))_(T-1)
    bool claim3_ok = false;            // the above equals n
    std::optional<std::string> failed_claim;  // first broken claim + advice

    bool all_ok() const { return !failed_claim.has_value(); }
};

// Degreewise verification of the three claims in the degrees the downstream
// certificates use (0..T-1 by default). Non-generic samples are reported, not
// resampled: the sweep harness measures genericity empirically.
template <Scalar F>
AciClaimsReport verify_aci_claims(const AciFixture<F>& fx, int check_through_degree = -1) {
    const int t = fx.socle_degree();
    const int through = check_through_degree < 0 ? t - 1 : check_through_degree;
    if (through < t - 1) throw Error("verify_aci_claims must check through degree T-1 at least");
    AciClaimsReport rep;
    rep.T = t;

    // Containment J(g) inside K: every monomial of every shifted generator
    // must avoid the pure powers (K_d is a monomial space).
    rep.containment_ok = true;
    for (const auto& g : fx.gens)
        for (const auto& [m, c] : g.terms())
            if (m.is_pure_power()) rep.containment_ok = false;

    for (int d = 0; d <= through; ++d) {
        const DegreePiece<F> piece =
            ideal_degree_piece(std::span<const Poly<F>>(fx.gens), fx.n, d);
        rep.dim_j.push_back(static_cast<long>(piece.ideal_dim()));
        rep.dim_k.push_back(static_cast<long>(offdiag_ideal_basis(fx.n, d).size()));
    }

    const long dj_top = rep.dim_j[static_cast<std::size_t>(t - 1)];
    const long dk_top = rep.dim_k[static_cast<std::size_t>(t - 1)];
    rep.claim1_ok = rep.containment_ok && dj_top == dk_top;
    rep.n1_zero = rep.dim_k[1] == 0;  // K has no linear part
    rep.n_tminus1_zero = rep.claim1_ok;
    rep.quotient_dim_at_tminus1 =
        static_cast<long>(dim_degree_piece(fx.n, t - 1)) - dj_top;
    rep.claim3_ok = rep.quotient_dim_at_tminus1 == static_cast<long>(fx.n);

    if (!rep.containment_ok)
        rep.failed_claim = "containment (a generator leaves K); resample";
    else if (!rep.claim1_ok)
        rep.failed_claim = "claim 1 at degree T-1 (dim J < dim K); non-generic sample, resample";
    else if (!rep.n1_zero || !rep.n_tminus1_zero)
        rep.failed_claim = "claim 2 (N(g) nonzero in degree 1 or T-1); resample";
    else if (!rep.claim3_ok)
        rep.failed_claim = "claim 3 (dim (S/J)_(T-1) != n); non-generic sample, resample";
    return rep;
}

// ell^(T-1) never lies in K_(T-1): some pure-power coefficient of ell^(T-1)
// is a_i^(T-1) with a_i != 0. Checked honestly through the expansion.
template <Scalar F>
bool offdiag_escape_check(const Poly<F>& ell, int t) {
    if (ell.degree() != 1) throw DegreeError("offdiag_escape_check expects a linear form");
    if (ell.is_zero()) throw Error("offdiag_escape_check expects a nonzero linear form");
    if (t < 2) throw Error("offdiag_escape_check expects T >= 2");
    const Poly<F> pw = veronese_power(ell, t - 1);
    for (const auto& [m, c] : pw.terms())
        if (m.is_pure_power() && !c.is_zero()) return true;
    return false;
}

}  // namespace lefschetz
