#pragma once

#include <cstdint>
#include <random>

namespace otg {

/// Seeded uniform draw source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard, and the interval mapping uses the top
/// 53 bits of each word, so identical seeds reproduce identical draw
/// sequences bit-exactly on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw from [a, b]. Advances the engine exactly one word.
    /// Throws if a > b.
    double uniform(double a, double b);

    /// Next raw engine word.
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace otg
