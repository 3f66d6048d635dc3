#pragma once

// Deterministic random source. splitmix64 is used instead of <random>
// distributions so that identical seeds give identical streams on every
// platform and standard library.

#include <cstdint>

#include "fields.hpp"

namespace lefschetz {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error("Rng::below(0)");
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    // Inclusive range.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw Error("Rng::int_in: empty range");
        const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(width));
    }

    // Derives an independent child seed, e.g. per sweep sample.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        Rng r(a ^ (0x632be59bd9b4e019ull + b * 0x9e3779b97f4a7c15ull));
        return r.next();
    }

private:
    std::uint64_t state_;
};

// Uniform scalar from the sampling box: integers in [-bound, bound] over the
// rationals, uniform residues over a prime field.
template <Scalar F>
F random_scalar(Rng& rng, const FieldConfig& cfg, int bound) {
    if (cfg.mode == FieldConfig::Mode::Prime)
        return F::from_int(cfg, static_cast<std::int64_t>(rng.below(cfg.p)));
    return F::from_int(cfg, rng.int_in(-bound, bound));
}

template <Scalar F>
F random_nonzero_scalar(Rng& rng, const FieldConfig& cfg, int bound) {
    for (;;) {
        F v = random_scalar<F>(rng, cfg, bound);
        if (!v.is_zero()) return v;
    }
}

}  // namespace lefschetz
