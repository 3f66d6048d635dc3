#pragma once

// Recursive-descent parser for homogeneous polynomial expressions.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var ('^' nat)? | '(' expr ')'
//   rational := nat ('/' nat)?
//
// Every additive term must have one common degree; mixing degrees raises
// NonHomogeneousError naming both. Coefficients collect into canonical form,
// so e.g. "x + x - x" parses to the single term x.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fields.hpp"
#include "poly.hpp"

namespace lefschetz {

namespace detail {

template <Scalar F>
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars,
               const FieldConfig& cfg, VarSpace space)
        : text_(text), vars_(vars), cfg_(cfg), space_(space) {}

    Poly<F> run() {
        Poly<F> p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    Poly<F> parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Poly<F> acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Poly<F> rhs = parse_term();
            if (rhs.degree() != acc.degree())
                throw NonHomogeneousError(acc.degree(), rhs.degree());
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    Poly<F> parse_term() {
        Poly<F> acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                acc = acc * parse_factor();
            } else if (peek() == '/') {
                fail("division by a non-literal (only integer/integer rationals are supported)");
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<F> parse_factor() {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        if (c == '(') {
            if (++depth_ > 256) fail("expression nested too deeply");
            take();
            Poly<F> inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            --depth_;
            return inner;
        }
        fail(c == '\0' ? "expected a term" : std::string("unexpected character '") + c + "'");
    }

    Poly<F> parse_rational() {
        const mpz_class num = parse_integer();
        mpz_class den = 1;
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("division by a non-literal (only integer/integer rationals are supported)");
            den = parse_integer();
            if (den == 0) fail("division by zero in rational literal");
        }
        try {
            const F value = F::from_mpz(cfg_, num) / F::from_mpz(cfg_, den);
            return Poly<F>::constant(space_, vars_.size(), value);
        } catch (const DivisionByZeroError&) {
            fail("rational literal denominator vanishes in the coefficient field");
        }
    }

    mpz_class parse_integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Poly<F> parse_variable() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        std::size_t index = vars_.size();
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) { index = i; break; }
        if (index == vars_.size())
            throw ParseError(start + 1, "unknown variable '" + name + "'");
        std::uint32_t power = 1;
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            const std::size_t estart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string digits(text_.substr(estart, pos_ - estart));
            if (digits.size() > 6) throw ParseError(estart + 1, "exponent too large");
            power = static_cast<std::uint32_t>(std::stoul(digits));
        }
        const Monomial m = Monomial::variable(vars_.size(), index, power);
        return Poly<F>::term(space_, m, F::from_int(cfg_, 1));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    const std::vector<std::string>& vars_;
    FieldConfig cfg_;
    VarSpace space_;
};

}  // namespace detail

template <Scalar F>
Poly<F> parse_poly(std::string_view text, const std::vector<std::string>& vars,
                   const FieldConfig& cfg, VarSpace space = VarSpace::Primal) {
    if (vars.empty()) throw Error("parse_poly: no variables declared");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error("parse_poly: duplicate variable '" + vars[i] + "'");
    return detail::PolyParser<F>(text, vars, cfg, space).run();
}

}  // namespace lefschetz
