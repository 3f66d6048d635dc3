#pragma once

// Sparse homogeneous polynomials: a mapping monomial -> nonzero scalar plus a
// degree tag (kept by the zero polynomial too). Three disjoint variable
// spaces are tracked so primal polynomials, dual (inverse-system) forms and
// coefficient-space forms cannot be mixed by accident:
//   Primal  x-variables, the ambient ring of the input system
//   Dual    y-variables, carrier of associated forms / inverse systems
//   Coeff   a-variables, coordinates on the space of linear forms

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fields.hpp"
#include "monomial.hpp"

namespace lefschetz {

enum class VarSpace : std::uint8_t { Primal, Dual, Coeff };

inline const char* var_stem(VarSpace s) {
    switch (s) {
        case VarSpace::Primal: return "x";
        case VarSpace::Dual: return "y";
        case VarSpace::Coeff: return "a";
    }
    return "?";
}

inline std::vector<std::string> default_var_names(VarSpace s, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(var_stem(s) + std::to_string(i));
    return names;
}

template <Scalar F>
class Poly {
public:
    using TermMap = std::map<Monomial, F, GrlexGreater>;

    Poly(VarSpace space, std::size_t nvars, int degree)
        : space_(space), nvars_(nvars), degree_(degree) {
        if (degree < 0) throw DegreeError("polynomial degree tag must be non-negative");
    }

    static Poly zero(VarSpace space, std::size_t nvars, int degree) {
        return Poly(space, nvars, degree);
    }

    static Poly term(VarSpace space, const Monomial& m, const F& c) {
        Poly p(space, m.nvars(), m.degree());
        p.add_term(m, c);
        return p;
    }

    static Poly constant(VarSpace space, std::size_t nvars, const F& c) {
        return term(space, Monomial::one(nvars), c);
    }

    VarSpace space() const { return space_; }
    std::size_t nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Zero scalar when the monomial is absent.
    F coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? F() : it->second;
    }

    // Leading term in descending graded-lex order; polynomial must be nonzero.
    const Monomial& leading_monomial() const {
        if (is_zero()) throw Error("zero polynomial has no leading monomial");
        return terms_.begin()->first;
    }
    const F& leading_coeff() const {
        if (is_zero()) throw Error("zero polynomial has no leading coefficient");
        return terms_.begin()->second;
    }

    // Accumulates a term; zero results are erased so stored coefficients stay nonzero.
    void add_term(const Monomial& m, const F& c) {
        if (c.is_zero()) return;
        if (m.nvars() != nvars_) throw Error("term variable count mismatch");
        if (m.degree() != degree_)
            throw DegreeError("term degree " + std::to_string(m.degree()) +
                              " does not match polynomial degree " + std::to_string(degree_));
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_compatible(o, "+");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_compatible(o, "-");
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const { Poly r(*this); r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r(*this); r -= o; return r; }

    Poly operator-() const {
        Poly r(space_, nvars_, degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (space_ != o.space_) throw VarSpaceError("multiplying polynomials from different variable spaces");
        if (nvars_ != o.nvars_) throw Error("multiplying polynomials in different rings");
        Poly r(space_, nvars_, degree_ + o.degree_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly scaled(const F& c) const {
        Poly r(space_, nvars_, degree_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    Poly times(const mpz_class& z) const {
        Poly r(space_, nvars_, degree_);
        if (z == 0) return r;
        for (const auto& [m, v] : terms_) {
            F w = v.times(z);
            if (!w.is_zero()) r.terms_.emplace(m, w);
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        return space_ == o.space_ && nvars_ == o.nvars_ && degree_ == o.degree_ &&
               terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical text form, terms in descending graded-lex order; round-trips
    // through parse_poly with the same variable names.
    std::string to_string(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const std::string cs = c.to_string();
            const bool negative = !cs.empty() && cs[0] == '-';
            const std::string mag = negative ? cs.substr(1) : cs;
            if (first) {
                if (negative) s += "-";
                first = false;
            } else {
                s += negative ? " - " : " + ";
            }
            const std::string ms = m.to_string(names);
            if (ms == "1") {
                s += mag;
            } else if (mag == "1") {
                s += ms;
            } else {
                s += mag + "*" + ms;
            }
        }
        return s;
    }
    std::string to_string() const { return to_string(default_var_names(space_, nvars_)); }

private:
    void check_compatible(const Poly& o, const char* op) const {
        if (space_ != o.space_) throw VarSpaceError(std::string("operator") + op + " across variable spaces");
        if (nvars_ != o.nvars_) throw Error("polynomials live in different rings");
        if (degree_ != o.degree_)
            throw DegreeError(std::string("operator") + op + " on degrees " +
                              std::to_string(degree_) + " and " + std::to_string(o.degree_));
    }

    VarSpace space_;
    std::size_t nvars_;
    int degree_;
    TermMap terms_;
};

}  // namespace lefschetz
