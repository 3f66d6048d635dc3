#pragma once

// Degree-by-degree exact linear algebra for a homogeneous ideal and its
// Artinian quotient: echelonized degree pieces, standard monomial bases,
// normal forms, Hilbert function, the complete-intersection certificate,
// the socle functional, and multiplication matrices between degree pieces.
//
// No Groebner bases: only degrees up to T+1 matter, so each degree piece is
// materialized as the span of shifted generators and reduced once.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "errors.hpp"
#include "fields.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "poly.hpp"

namespace lefschetz {

struct MultiDegree {
    std::size_t n;
    std::vector<int> d;  // nondecreasing, each >= 2

    MultiDegree(std::size_t n_, std::vector<int> d_) : n(n_), d(std::move(d_)) {
        if (n < 3) throw Error("multidegree needs n >= 3");
        if (d.size() != n) throw Error("multidegree length must equal n");
        for (std::size_t j = 0; j < n; ++j) {
            if (d[j] < 2) throw Error("multidegree entries must be >= 2");
            if (j > 0 && d[j] < d[j - 1]) throw Error("multidegree must be nondecreasing");
        }
    }

    int socle_degree() const {
        int t = -static_cast<int>(n);
        for (int dj : d) t += dj;
        return t;
    }
};

template <Scalar F>
struct SystemInput {
    std::size_t n;
    std::vector<Poly<F>> gens;
    FieldConfig field;

    SystemInput(std::vector<Poly<F>> gens_, FieldConfig field_)
        : n(gens_.size()), gens(std::move(gens_)), field(field_) {
        if (n < 3) throw Error("system needs n >= 3 generators");
        for (const auto& g : gens) {
            if (g.space() != VarSpace::Primal)
                throw VarSpaceError("system generators must be primal polynomials");
            if (g.nvars() != n) throw Error("system needs n generators in n variables");
            if (g.degree() < 2) throw DegreeError("generator degrees must be >= 2");
        }
    }

    std::vector<int> degrees() const {
        std::vector<int> out;
        out.reserve(n);
        for (const auto& g : gens) out.push_back(g.degree());
        return out;
    }

    int socle_degree() const {
        int t = -static_cast<int>(n);
        for (const auto& g : gens) t += g.degree();
        return t;
    }
};

// One degree of an ideal: the unique reduced echelon basis of its span inside
// the degree piece of the ambient ring, plus the standard (non-pivot)
// monomials that descend to a basis of the quotient in that degree.
template <Scalar F>
struct DegreePiece {
    int degree = 0;
    std::vector<Monomial> basis;             // monomial basis of the full degree piece
    Matrix<F> echelon;                       // ideal_dim() reduced rows over `basis`
    std::vector<std::size_t> pivots;         // pivot columns, increasing
    std::vector<std::size_t> standard_cols;  // complement of pivots, increasing

    std::size_t ambient_dim() const { return basis.size(); }
    std::size_t ideal_dim() const { return pivots.size(); }
    std::size_t quotient_dim() const { return standard_cols.size(); }

    std::vector<Monomial> standard_monomials() const {
        std::vector<Monomial> out;
        out.reserve(standard_cols.size());
        for (std::size_t c : standard_cols) out.push_back(basis[c]);
        return out;
    }

    std::vector<F> dense(const Poly<F>& p) const {
        if (p.degree() != degree)
            throw DegreeError("polynomial degree " + std::to_string(p.degree()) +
                              " does not match piece degree " + std::to_string(degree));
        std::vector<F> v(basis.size());
        for (const auto& [m, c] : p.terms()) v[monomial_index(basis, m)] = c;
        return v;
    }

    // Unique representative supported on the standard monomials; p - NF(p)
    // lies in the ideal's span, and NF is linear in p.
    Poly<F> normal_form(const Poly<F>& p) const {
        const std::vector<F> v = dense(p);
        Poly<F> out(p.space(), p.nvars(), degree);
        for (std::size_t c : standard_cols) {
            F coeff = v[c];
            for (std::size_t t = 0; t < pivots.size(); ++t) {
                const F& lead = v[pivots[t]];
                if (!lead.is_zero()) coeff -= lead * echelon(t, c);
            }
            out.add_term(basis[c], coeff);
        }
        return out;
    }

    bool contains(const Poly<F>& p) const { return normal_form(p).is_zero(); }
};

// Span of { m * g : g generator, m monomial of degree d - deg g } inside the
// full degree-d piece, reduced to its canonical echelon form.
template <Scalar F>
DegreePiece<F> ideal_degree_piece(std::span<const Poly<F>> gens, std::size_t nvars, int d) {
    if (d < 0) throw DegreeError("ideal degree piece of negative degree");
    DegreePiece<F> piece;
    piece.degree = d;
    piece.basis = monomials_of_degree(nvars, d);

    std::vector<std::vector<F>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars) throw Error("generator variable count mismatch");
        if (g.degree() > d) continue;
        for (const Monomial& shift : monomials_of_degree(nvars, d - g.degree())) {
            std::vector<F> row(piece.basis.size());
            for (const auto& [m, c] : g.terms()) row[monomial_index(piece.basis, shift * m)] = c;
            rows.push_back(std::move(row));
        }
    }

    Matrix<F> m(rows.size(), piece.basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < piece.basis.size(); ++j) m(i, j) = rows[i][j];
    piece.pivots = rref_inplace(m);

    piece.echelon = Matrix<F>(piece.pivots.size(), piece.basis.size());
    for (std::size_t i = 0; i < piece.pivots.size(); ++i)
        for (std::size_t j = 0; j < piece.basis.size(); ++j) piece.echelon(i, j) = m(i, j);

    std::vector<bool> is_pivot(piece.basis.size(), false);
    for (std::size_t c : piece.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < piece.basis.size(); ++c)
        if (!is_pivot[c]) piece.standard_cols.push_back(c);
    return piece;
}

template <Scalar F>
DegreePiece<F> ideal_degree_piece(const SystemInput<F>& sys, int d) {
    return ideal_degree_piece<F>(std::span<const Poly<F>>(sys.gens), sys.n, d);
}

// dim (R / ideal) in one degree, for decision procedures that only need the
// rank of the span, not its echelon basis.
template <Scalar F>
long ideal_piece_quotient_dim(std::span<const Poly<F>> forms, std::size_t nvars, int d) {
    return static_cast<long>(ideal_degree_piece(forms, nvars, d).quotient_dim());
}

// Rational route: the decision matrices can be large with long entries, so
// the rank is first screened modulo a fixed prime. Rank mod p never exceeds
// the rank over the rationals, so a full-column-rank screen already proves
// quotient dimension zero exactly; only deficient screens fall back to the
// exact fraction-free elimination.
inline long ideal_piece_quotient_dim(std::span<const Poly<Rational>> forms, std::size_t nvars,
                                     int d) {
    if (d < 0) throw DegreeError("ideal degree piece of negative degree");
    const std::vector<Monomial> basis = monomials_of_degree(nvars, d);

    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : forms) {
        if (g.is_zero() || g.degree() > d) continue;
        if (g.nvars() != nvars) throw Error("generator variable count mismatch");
        mpz_class lcm = 1;
        for (const auto& [m, c] : g.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        std::vector<std::pair<Monomial, mpz_class>> integral;
        for (const auto& [m, c] : g.terms()) integral.emplace_back(m, c.num() * (lcm / c.den()));
        for (const Monomial& shift : monomials_of_degree(nvars, d - g.degree())) {
            std::vector<mpz_class> row(basis.size());
            for (const auto& [m, c] : integral) row[monomial_index(basis, shift * m)] = c;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return static_cast<long>(basis.size());

    Matrix<Fp> screen(rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            screen(i, j) = Fp(mpz_fdiv_ui(rows[i][j].get_mpz_t(), kDefaultScreeningPrime),
                              kDefaultScreeningPrime);
    if (rref_inplace(screen).size() == basis.size()) return 0;

    const std::vector<std::size_t> pivots = detail::fraction_free_jordan(rows, basis.size());
    return static_cast<long>(basis.size() - pivots.size());
}

// Coefficients of prod_j (1 + t + ... + t^(d_j - 1)) through degree `through`,
// zero-padded: the Hilbert series of a complete intersection of those degrees.
inline std::vector<long> ci_series(const std::vector<int>& degrees, int through) {
    std::vector<long> acc{1};
    for (int dj : degrees) {
        std::vector<long> next(acc.size() + static_cast<std::size_t>(dj) - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (int e = 0; e < dj; ++e) next[i + static_cast<std::size_t>(e)] += acc[i];
        acc = std::move(next);
    }
    acc.resize(static_cast<std::size_t>(through) + 1, 0);
    return acc;
}

struct CiCertificate {
    bool is_ci = false;
    std::optional<int> first_failure_degree;  // set iff !is_ci
    std::vector<long> expected_hilbert;       // CI series through T+1
};

template <Scalar F>
class GradedQuotient {
public:
    explicit GradedQuotient(SystemInput<F> sys) : sys_(std::move(sys)) {
        const int top = socle_degree() + 1;
        pieces_.reserve(static_cast<std::size_t>(top) + 1);
        hf_.reserve(static_cast<std::size_t>(top) + 1);
        for (int d = 0; d <= top; ++d) {
            pieces_.push_back(ideal_degree_piece(sys_, d));
            hf_.push_back(static_cast<long>(pieces_.back().quotient_dim()));
        }
        ci_.expected_hilbert = ci_series(sys_.degrees(), top);
        ci_.is_ci = true;
        for (int d = 0; d <= top; ++d) {
            if (hf_[static_cast<std::size_t>(d)] != ci_.expected_hilbert[static_cast<std::size_t>(d)]) {
                ci_.is_ci = false;
                ci_.first_failure_degree = d;
                break;
            }
        }
    }

    const SystemInput<F>& system() const { return sys_; }
    int socle_degree() const { return sys_.socle_degree(); }

    const DegreePiece<F>& piece(int d) const {
        if (d < 0 || d > socle_degree() + 1)
            throw DegreeError("degree " + std::to_string(d) + " is outside the tabulated range 0.." +
                              std::to_string(socle_degree() + 1));
        return pieces_[static_cast<std::size_t>(d)];
    }

    // hf(0..T+1); hf(T+1) == 0 exactly when the system is a complete intersection.
    const std::vector<long>& hilbert_function() const { return hf_; }

    const CiCertificate& ci_certificate() const { return ci_; }
    bool certified_ci() const { return ci_.is_ci; }

    void require_ci() const {
        if (!ci_.is_ci) throw NotCompleteIntersectionError(*ci_.first_failure_degree);
    }

    Poly<F> normal_form(const Poly<F>& p) const { return piece(p.degree()).normal_form(p); }

private:
    SystemInput<F> sys_;
    std::vector<DegreePiece<F>> pieces_;
    std::vector<long> hf_;
    CiCertificate ci_;
};

template <Scalar F>
std::vector<long> hilbert_function(const GradedQuotient<F>& q) {
    return q.hilbert_function();
}

template <Scalar F>
CiCertificate certify_complete_intersection(const SystemInput<F>& sys) {
    return GradedQuotient<F>(sys).ci_certificate();
}

// The normal form of the Jacobian determinant spans the socle in degree T;
// omega is normalized by omega(class of Jac) = 1, i.e. omega(m_T) = 1/c.
template <Scalar F>
struct SocleData {
    Monomial socle_monomial;  // m_T, the single standard monomial in degree T
    F c;                      // NF(Jac) = c * m_T, never zero for a certified CI
};

template <Scalar F>
SocleData<F> socle_functional(const GradedQuotient<F>& q) {
    q.require_ci();
    const DegreePiece<F>& top = q.piece(q.socle_degree());
    if (top.quotient_dim() != 1)
        throw InvariantViolation("certified CI with hf(T) != 1");
    const Monomial m_t = top.standard_monomials()[0];
    const Poly<F> jac = jacobian_det(q.system().gens);
    const Poly<F> nf = top.normal_form(jac);
    const F c = nf.coeff(m_t);
    if (c.is_zero())
        throw InvariantViolation("Jacobian reduces to zero in the socle of a certified CI");
    return SocleData<F>{m_t, c};
}

// omega on degree-T polynomials: coefficient of m_T in the normal form, over c.
template <Scalar F>
F omega(const GradedQuotient<F>& q, const SocleData<F>& s, const Poly<F>& p) {
    if (p.degree() != q.socle_degree())
        throw DegreeError("omega expects a polynomial of the socle degree");
    return q.normal_form(p).coeff(s.socle_monomial) / s.c;
}

// Matrix of multiplication by `mult` from M_k to M_(k + deg mult), rows
// indexed by the standard monomials of M_k, columns by those of the target.
template <Scalar F>
Matrix<F> multiplication_matrix(const GradedQuotient<F>& q, const Poly<F>& mult, int k) {
    if (k < 0) throw DegreeError("multiplication_matrix: negative source degree");
    if (mult.space() != VarSpace::Primal)
        throw VarSpaceError("multiplication_matrix: multiplier must be primal");
    const int target = k + mult.degree();
    if (k > q.socle_degree() + 1 || target > q.socle_degree() + 1)
        throw DegreeError("multiplication_matrix: degree overflow (target " +
                          std::to_string(target) + " beyond T+1)");
    const std::vector<Monomial> source = q.piece(k).standard_monomials();
    const std::vector<Monomial> dest = q.piece(target).standard_monomials();
    Matrix<F> m(source.size(), dest.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        const Poly<F> image =
            q.normal_form(mult * Poly<F>::term(VarSpace::Primal, source[i], F::from_int(q.system().field, 1)));
        for (std::size_t j = 0; j < dest.size(); ++j) m(i, j) = image.coeff(dest[j]);
    }
    return m;
}

// Perfect-pairing self-test: B_ij = omega(NF(m_i * m'_j)) over the standard
// bases of M_k and M_(T-k) must be nonsingular for every k on a certified CI.
template <Scalar F>
bool gorenstein_pairing_check(const GradedQuotient<F>& q, const SocleData<F>& s, int k) {
    q.require_ci();
    const int t = q.socle_degree();
    if (k < 0 || k > t) throw DegreeError("gorenstein_pairing_check: k outside 0..T");
    const std::vector<Monomial> left = q.piece(k).standard_monomials();
    const std::vector<Monomial> right = q.piece(t - k).standard_monomials();
    if (left.size() != right.size()) return false;
    Matrix<F> b(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            const Poly<F> prod =
                Poly<F>::term(VarSpace::Primal, left[i] * right[j], F::from_int(q.system().field, 1));
            b(i, j) = omega(q, s, prod);
        }
    return rank(b) == left.size();
}

template <Scalar F>
bool gorenstein_pairing_check(const GradedQuotient<F>& q, int k) {
    return gorenstein_pairing_check(q, socle_functional(q), k);
}

}  // namespace lefschetz
