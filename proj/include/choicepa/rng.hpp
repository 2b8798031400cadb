#pragma once

#include <cstdint>
#include <random>

namespace choicepa {

// Pinned random source: std::mt19937_64 seeded through std::seed_seq from
// (seed, stream). Both are fully specified by the standard, so the raw
// 64-bit output is identical on every conforming platform. The bounded and
// real-valued draws below are implemented here (not via std distributions,
// whose algorithms are implementation-defined).
class RandomSource {
public:
    using result_type = std::uint64_t;

    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    result_type operator()() { return engine_(); }

    // Uniform integer in [0, bound). bound must be > 0. Lemire's multiply-shift
    // with rejection, so the result is exactly uniform.
    std::uint64_t below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace choicepa
