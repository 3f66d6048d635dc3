#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP-backed) and
// residues modulo an odd prime. No floating point anywhere.
//
// Algorithms are templates over a Scalar; a FieldConfig picks the concrete
// field at the boundaries where elements are created from integers (parsing,
// sampling, multinomial lifts). Inside the algorithms, elements never need
// the config: Fp carries its modulus, and a default-constructed Fp is an
// "unbound" zero that adopts the modulus of whatever it first meets.

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace lefschetz {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

// Selects the coefficient field: exact rationals, or residues mod an odd prime.
struct FieldConfig {
    enum class Mode { Rationals, Prime };

    Mode mode = Mode::Rationals;
    std::uint64_t p = 0;  // set iff mode == Prime

    static FieldConfig rationals() { return FieldConfig{Mode::Rationals, 0}; }

    static FieldConfig prime(std::uint64_t p) {
        if (p < 3 || !detail::is_prime_u64(p))
            throw Error("field modulus must be an odd prime, got " + std::to_string(p));
        return FieldConfig{Mode::Prime, p};
    }

    // Accepts "q" or "fp:<odd prime>", e.g. "fp:65537".
    static FieldConfig parse(const std::string& text) {
        if (text == "q" || text == "Q") return rationals();
        if (text.rfind("fp:", 0) == 0) {
            const std::string digits = text.substr(3);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw Error("bad field spec '" + text + "' (expected q or fp:<prime>)");
            return prime(std::stoull(digits));
        }
        throw Error("bad field spec '" + text + "' (expected q or fp:<prime>)");
    }

    std::string to_string() const {
        return mode == Mode::Rationals ? "q" : "fp:" + std::to_string(p);
    }

    bool operator==(const FieldConfig&) const = default;
};

inline constexpr std::uint64_t kDefaultScreeningPrime = 65537;

// Arbitrary-precision rational, always canonical: reduced fraction with
// positive denominator (mpq_class maintains exactly that form).
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZeroError();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_int(const FieldConfig&, std::int64_t v) {
        return Rational(mpz_class(static_cast<long>(v)));
    }
    static Rational from_mpz(const FieldConfig&, const mpz_class& z) { return Rational(z); }

    bool is_zero() const { return v_ == 0; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inv() const {
        if (is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(1 / v_));
    }

    Rational times(std::int64_t k) const { return Rational(mpq_class(v_ * static_cast<long>(k))); }
    Rational times(const mpz_class& z) const { return Rational(mpq_class(v_ * z)); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

// Residue modulo an odd prime p, stored in [0, p). A default-constructed
// element is an unbound zero (p == 0) that adopts the other operand's
// modulus on arithmetic; two bound operands must share their modulus.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(const FieldConfig& cfg, std::int64_t v) {
        require_prime(cfg);
        std::int64_t r = v % static_cast<std::int64_t>(cfg.p);
        if (r < 0) r += static_cast<std::int64_t>(cfg.p);
        return Fp(static_cast<std::uint64_t>(r), cfg.p);
    }
    static Fp from_mpz(const FieldConfig& cfg, const mpz_class& z) {
        require_prime(cfg);
        return Fp(mpz_fdiv_ui(z.get_mpz_t(), cfg.p), cfg.p);
    }

    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const {
        const std::uint64_t p = joint_modulus(o);
        if (p == 0) return Fp();
        std::uint64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    Fp operator-(const Fp& o) const {
        const std::uint64_t p = joint_modulus(o);
        if (p == 0) return Fp();
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_, p);
    }
    Fp operator*(const Fp& o) const {
        const std::uint64_t p = joint_modulus(o);
        if (p == 0) return Fp();
        return Fp(detail::mulmod_u64(v_, o.v_, p), p);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp operator-() const {
        if (is_zero()) return *this;
        return Fp(p_ - v_, p_);
    }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inv() const {
        if (is_zero()) throw DivisionByZeroError();
        return Fp(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }

    Fp times(std::int64_t k) const {
        if (is_zero()) return Fp();
        std::int64_t r = k % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return Fp(detail::mulmod_u64(v_, static_cast<std::uint64_t>(r), p_), p_);
    }
    Fp times(const mpz_class& z) const {
        if (is_zero()) return Fp();
        return Fp(detail::mulmod_u64(v_, mpz_fdiv_ui(z.get_mpz_t(), p_), p_), p_);
    }

    bool operator==(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw InvariantViolation("comparing residues with different moduli");
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    static void require_prime(const FieldConfig& cfg) {
        if (cfg.mode != FieldConfig::Mode::Prime)
            throw Error("prime-field element requested from a rational field config");
    }

    std::uint64_t joint_modulus(const Fp& o) const {
        if (p_ == 0) return o.p_;
        if (o.p_ == 0) return p_;
        if (p_ != o.p_) throw InvariantViolation("mixing residues with different moduli");
        return p_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;  // 0 = unbound zero
};

template <class F>
concept Scalar = std::regular<F> && requires(const F a, const F b, std::int64_t k,
                                             const mpz_class& z, const FieldConfig& cfg) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inv() } -> std::same_as<F>;
    { a.times(k) } -> std::same_as<F>;
    { a.times(z) } -> std::same_as<F>;
    { a.to_string() } -> std::same_as<std::string>;
    { F::from_int(cfg, k) } -> std::same_as<F>;
    { F::from_mpz(cfg, z) } -> std::same_as<F>;
};

static_assert(Scalar<Rational>);
static_assert(Scalar<Fp>);

}  // namespace lefschetz
