#pragma once

// Strong Lefschetz Property in degree k: whether multiplication by
// ell^(T-2k) maps M_k isomorphically onto M_(T-k) for a linear form ell.
// One full-rank witness certifies SLP at that degree (the failure locus is
// the zero set of a determinant polynomial in the coefficients of ell);
// exhausting the trial budget only gives a probabilistic "fails", except in
// the small cases where the determinant can be expanded symbolically and
// shown to vanish identically.

#include <optional>
#include <string>
#include <vector>

#include "graded.hpp"
#include "sampling.hpp"

namespace lefschetz {

enum class SlpStatus { HoldsWithWitness, ProbablyFails, FailsCertified };

inline const char* to_string(SlpStatus s) {
    switch (s) {
        case SlpStatus::HoldsWithWitness: return "HOLDS_WITH_WITNESS";
        case SlpStatus::ProbablyFails: return "PROBABLY_FAILS";
        case SlpStatus::FailsCertified: return "FAILS_CERTIFIED";
    }
    return "?";
}

template <Scalar F>
struct SlpVerdict {
    int k = 0;
    int map_degree = 0;  // T - 2k
    SlpStatus status = SlpStatus::ProbablyFails;
    std::optional<Poly<F>> witness;  // full-rank ell, re-checkable
    int trials_used = 0;
    int trials_budget = 0;
    FieldConfig field;
    std::uint64_t seed = 0;
    long det_degree_bound = 0;      // hf(k) * (T - 2k), degree of the witness determinant
    std::uint64_t sample_size = 0;  // 2B+1 over the rationals, p over a prime field
};

namespace detail {

template <Scalar F>
void check_slp_inputs(const GradedQuotient<F>& q, int k, const Poly<F>* ell) {
    q.require_ci();
    const int t = q.socle_degree();
    if (k < 0 || 2 * k >= t)
        throw DegreeError("SLP degree k = " + std::to_string(k) + " is outside [0, T/2) for T = " +
                          std::to_string(t));
    if (ell != nullptr) {
        if (ell->degree() != 1) throw DegreeError("SLP witness must be a linear form");
        if (ell->is_zero()) throw Error("SLP witness must be nonzero");
    }
}

}  // namespace detail

// TRUE iff multiplication by ell^(T-2k) has full rank hf(k) (= hf(T-k) by
// Gorenstein duality, so full rank, injectivity and surjectivity coincide).
template <Scalar F>
bool slp_at_degree(const GradedQuotient<F>& q, int k, const Poly<F>& ell) {
    detail::check_slp_inputs(q, k, &ell);
    const int e = q.socle_degree() - 2 * k;
    const Matrix<F> m = multiplication_matrix(q, veronese_power(ell, e), k);
    return rank(m) == q.piece(k).quotient_dim();
}

// Kernel of S_1 -> M_(T-1), v -> NF(ell^(T-2) v): nonempty exactly when ell
// fails SLP in degree 1, and each kernel element ell_1 satisfies
// ell^(T-2) * ell_1 in J_(T-1).
template <Scalar F>
struct Slp1Diagnostic {
    Poly<F> ell;
    std::vector<Poly<F>> kernel;  // linear forms ell_1
};

template <Scalar F>
Slp1Diagnostic<F> slp1_kernel(const GradedQuotient<F>& q, const Poly<F>& ell) {
    detail::check_slp_inputs(q, 1, &ell);
    const std::size_t n = q.system().n;
    const int t = q.socle_degree();
    const Poly<F> pw = veronese_power(ell, t - 2);  // T >= 3, so T-2 >= 1
    const std::vector<Monomial> dest = q.piece(t - 1).standard_monomials();
    // Row i = coordinates of NF(ell^(T-2) * x_i); kernel vectors c satisfy
    // c^T M = 0, i.e. the null space of M transposed.
    Matrix<F> mt(dest.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
        const Poly<F> xi = Poly<F>::term(VarSpace::Primal, Monomial::variable(n, i),
                                         F::from_int(q.system().field, 1));
        const Poly<F> image = q.normal_form(pw * xi);
        for (std::size_t j = 0; j < dest.size(); ++j) mt(j, i) = image.coeff(dest[j]);
    }
    const Matrix<F> null_rows = kernel_basis(mt, F::from_int(q.system().field, 1));
    Slp1Diagnostic<F> diag{ell, {}};
    for (std::size_t r = 0; r < null_rows.rows(); ++r) {
        Poly<F> ell1(VarSpace::Primal, n, 1);
        for (std::size_t i = 0; i < n; ++i)
            ell1.add_term(Monomial::variable(n, i), null_rows(r, i));
        diag.kernel.push_back(std::move(ell1));
    }
    return diag;
}

namespace detail {

// Entry (i, j) of the multiplication matrix as a polynomial in the
// coefficients a_1..a_n of ell; determinant expanded by cofactors. Only
// attempted for matrices up to 3x3 with n = 3 variables.
template <Scalar F>
bool slp_determinant_identically_zero(const GradedQuotient<F>& q, int k) {
    const std::size_t n = q.system().n;
    const int t = q.socle_degree();
    const int e = t - 2 * k;
    const std::vector<Monomial> source = q.piece(k).standard_monomials();
    const std::vector<Monomial> dest = q.piece(t - k).standard_monomials();
    if (source.size() != dest.size())
        throw InvariantViolation("Gorenstein duality broke: hf(k) != hf(T-k) on a certified CI");
    const std::size_t s = source.size();
    std::vector<std::vector<Poly<F>>> sym(s, std::vector<Poly<F>>(s, Poly<F>(VarSpace::Coeff, n, e)));
    const F one = F::from_int(q.system().field, 1);
    for (const Monomial& beta : monomials_of_degree(n, e)) {
        const mpz_class mult = multinomial(e, beta);
        for (std::size_t i = 0; i < s; ++i) {
            const Poly<F> image =
                q.normal_form(Poly<F>::term(VarSpace::Primal, beta * source[i], one));
            for (std::size_t j = 0; j < s; ++j) {
                const F c = image.coeff(dest[j]);
                if (!c.is_zero()) sym[i][j].add_term(beta, c.times(mult));
            }
        }
    }
    const Poly<F> d = poly_matrix_det(sym, static_cast<int>(s) * e);
    return d.is_zero();
}

}  // namespace detail

// Samples ell from the configured box until the multiplication matrix has
// full rank; one success certifies SLP at degree k. All randomness flows from
// the explicit seed. After the budget is exhausted the verdict is
// PROBABLY_FAILS -- with the determinant degree bound and the sampling-set
// size recorded -- unless the determinant is small enough to expand
// symbolically and prove identically zero (FAILS_CERTIFIED).
template <Scalar F>
SlpVerdict<F> slp_witness_search(const GradedQuotient<F>& q, int k, int trials, std::uint64_t seed,
                                 int coeff_bound = 50) {
    detail::check_slp_inputs<F>(q, k, nullptr);
    if (trials < 1) throw Error("slp_witness_search needs trials >= 1");
    const FieldConfig& cfg = q.system().field;
    const int t = q.socle_degree();

    SlpVerdict<F> verdict;
    verdict.k = k;
    verdict.map_degree = t - 2 * k;
    verdict.trials_budget = trials;
    verdict.field = cfg;
    verdict.seed = seed;
    verdict.det_degree_bound =
        static_cast<long>(q.piece(k).quotient_dim()) * static_cast<long>(t - 2 * k);
    verdict.sample_size = cfg.mode == FieldConfig::Mode::Prime
                              ? cfg.p
                              : 2 * static_cast<std::uint64_t>(coeff_bound) + 1;

    Rng rng(seed);
    for (int trial = 1; trial <= trials; ++trial) {
        Poly<F> ell = random_linear_form<F>(rng, cfg, q.system().n, coeff_bound);
        if (slp_at_degree(q, k, ell)) {
            verdict.status = SlpStatus::HoldsWithWitness;
            verdict.witness = std::move(ell);
            verdict.trials_used = trial;
            return verdict;
        }
    }
    verdict.trials_used = trials;
    if (q.system().n == 3 && q.piece(k).quotient_dim() <= 3 &&
        detail::slp_determinant_identically_zero(q, k)) {
        verdict.status = SlpStatus::FailsCertified;
    } else {
        verdict.status = SlpStatus::ProbablyFails;
    }
    return verdict;
}

}  // namespace lefschetz
