#pragma once

#include "delcoh/algebra/matrix.hpp"

#include <cstdint>
#include <random>

namespace delcoh {

// Seeded generator whose derived draws are identical on every standard library:
// only the raw 64-bit output of mt19937_64 is used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [lo, hi] up to modular bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    // numerator in [-6, 6], denominator in [1, 12]
    Rational small_rational();
    // integer in [-bound, bound]
    Integer small_integer(std::int64_t bound = 2);

private:
    std::mt19937_64 engine_;
};

// Derives an independent seed for a named sub-task.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace delcoh
