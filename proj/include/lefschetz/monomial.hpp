#pragma once

// Exponent-vector monomials with a fixed graded-lexicographic order:
// higher total degree first; within a degree, the monomial with the larger
// exponent on the earliest differing variable comes first. Every basis
// listing in the library uses this order, so reports are reproducible.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace lefschetz {

class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    Monomial(std::initializer_list<std::uint32_t> exps) : e_(exps) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
        Monomial m(nvars);
        if (i >= nvars) throw Error("variable index out of range");
        m.e_[i] = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    int degree() const {
        int d = 0;
        for (std::uint32_t e : e_) d += static_cast<int>(e);
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        check_same_nvars(o);
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check_same_nvars(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial quotient_by(const Monomial& o) const {
        if (!o.divides(*this)) throw Error("monomial quotient is not a monomial");
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    // x_i^d for d >= 1, i.e. exactly one nonzero exponent.
    bool is_pure_power() const {
        int nonzero = 0;
        for (std::uint32_t e : e_)
            if (e != 0) ++nonzero;
        return nonzero == 1;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    std::string to_string(const std::vector<std::string>& names) const {
        if (names.size() != e_.size()) throw Error("variable name count mismatch");
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void check_same_nvars(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw Error("monomial variable count mismatch");
    }

    std::vector<std::uint32_t> e_;
};

// Graded-lex comparison: returns <0, 0, >0 as a < b, a == b, a > b.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw Error("comparing monomials in different rings");
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// Comparator that iterates maps in descending graded-lex order (the listing
// order of every basis in the library).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// All monomials of the given degree, descending graded-lex. C(d+n-1, n-1) entries.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    if (n < 1) throw Error("monomials_of_degree: need at least one variable");
    if (d < 0) throw Error("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i + 1 == n) {
            cur[i] = static_cast<std::uint32_t>(rem);
            out.emplace_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[i] = static_cast<std::uint32_t>(e);
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

// Index of m in a descending graded-lex basis listing (binary search).
inline std::size_t monomial_index(const std::vector<Monomial>& basis, const Monomial& m) {
    std::size_t lo = 0, hi = basis.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (grlex_cmp(basis[mid], m) > 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == basis.size() || basis[lo] != m) throw Error("monomial not in basis listing");
    return lo;
}

inline std::size_t dim_degree_piece(std::size_t n, int d) {
    if (d < 0) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
                 static_cast<unsigned long>(n - 1));
    if (!c.fits_ulong_p()) throw Error("degree piece too large");
    return static_cast<std::size_t>(c.get_ui());
}

inline mpz_class factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

// total! / prod(alpha_i!), with total == |alpha|.
inline mpz_class multinomial(int total, const Monomial& alpha) {
    if (alpha.degree() != total) throw Error("multinomial: exponents do not sum to total");
    mpz_class r = factorial(static_cast<unsigned long>(total));
    for (std::size_t i = 0; i < alpha.nvars(); ++i) r /= factorial(alpha[i]);
    return r;
}

// prod(alpha_i!) -- the apolar self-pairing value of x^alpha against y^alpha.
inline mpz_class factorial_product(const Monomial& alpha) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < alpha.nvars(); ++i) r *= factorial(alpha[i]);
    return r;
}

}  // namespace lefschetz
