#pragma once

#include <cstdint>
#include <random>

#include "omegalie/cyclotomic.hpp"

namespace omegalie {

/// Seeded generator of small exact values: numerators in [-bound, bound],
/// denominators in [1, bound].
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, long bound = 9) : seed_(seed), bound_(bound), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    Rat rational() {
        std::uniform_int_distribution<long> num(-bound_, bound_);
        std::uniform_int_distribution<long> den(1, bound_);
        const long n = num(rng_);
        return Rat(n, den(rng_));
    }

    /// Both Q-coordinates random.
    CycNum cyc() { return CycNum(rational(), rational()); }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::uint64_t seed_;
    long bound_;
    std::mt19937_64 rng_;
};

}  // namespace omegalie
