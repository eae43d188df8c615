#pragma once

// Shared generators for the property tests. Fixed seeds keep failures
// reproducible.

#include <cstdint>
#include <random>

#include "ech/rational.hpp"

namespace ech::testing {

class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    // Rational in [lo, hi] with denominator at most max_den.
    Rational in_range(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 12) {
        const auto den = integer(1, max_den);
        const auto num = integer(lo * den, hi * den);
        return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    }

    // Rational in (0, hi] with denominator at most max_den.
    Rational positive(std::int64_t hi, std::int64_t max_den = 12) {
        const auto den = integer(1, max_den);
        const auto num = integer(1, hi * den);
        return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    }

    Tilt tilt() { return integer(0, 1) ? Tilt::Plus : Tilt::Minus; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace ech::testing
