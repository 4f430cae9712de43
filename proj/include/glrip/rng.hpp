#pragma once

#include <cstdint>
#include <random>

namespace glrip {

// Seeded RNG wrapper. All real-valued draws go through a fixed 53-bit mantissa
// mapping instead of std::uniform_real_distribution, whose output sequence is
// implementation-defined; this keeps runs bit-reproducible per seed across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in the open interval (0,1): (k + 0.5) / 2^53 with k in [0, 2^53).
    double unit() {
        const std::uint64_t k = eng_() >> 11;
        return (static_cast<double>(k) + 0.5) * 0x1p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Uniform index in [0, n). n must be >= 1.
    std::size_t index(std::size_t n) {
        std::size_t i = static_cast<std::size_t>(unit() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace glrip
