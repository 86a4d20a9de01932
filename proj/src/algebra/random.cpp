#include "delcoh/algebra/random.hpp"

namespace delcoh {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

Rational Rng::small_rational() {
    std::int64_t num = uniform(-6, 6);
    std::int64_t den = uniform(1, 12);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer Rng::small_integer(std::int64_t bound) { return Integer(static_cast<long>(uniform(-bound, bound))); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace delcoh
