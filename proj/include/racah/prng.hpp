#ifndef RACAH_PRNG_HPP
#define RACAH_PRNG_HPP

#include <cstdint>
#include <string_view>

#include "racah/rational.hpp"

namespace racah {

/// SplitMix64: the documented PRNG behind every randomized check. Fixed
/// multipliers, no platform-dependent state, so seeded runs are bit-identical
/// everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] via modulo (documented; the tiny bias is irrelevant
    /// for identity testing, determinism is not).
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    bool coin() { return (next() & 1ULL) != 0; }

private:
    std::uint64_t state_;
};

/// FNV-1a 64-bit; mixes suite names into per-suite seeds (seed ^ fnv(name)).
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Draws random rationals with numerator and denominator uniform in
/// [1, 10^4] and random sign. Dense enough that integer resonances are
/// avoided by rejection in the callers that care.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational rational() {
        const long num = static_cast<long>(rng_.uniform(1, 10000));
        const long den = static_cast<long>(rng_.uniform(1, 10000));
        const Rational q(num, den);
        return rng_.coin() ? -q : q;
    }

    /// Small-range variant for degree indices and lattice sizes.
    long integer(long lo, long hi) {
        return static_cast<long>(rng_.uniform(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
    }

    bool coin() { return rng_.coin(); }

    SplitMix64& engine() { return rng_; }

private:
    SplitMix64 rng_;
};

} // namespace racah

#endif
