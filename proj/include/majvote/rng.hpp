// Counter-derived random streams.
//
// Every trial, row, or chain block draws from its own stream keyed by
// (seed, index), so results never depend on which worker ran what.
#pragma once

#include <cstdint>
#include <limits>

namespace majvote {

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Mixes (seed, index) into a new 64-bit seed. Used both for per-trial
/// streams and for per-row seeds in sweeps.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = index ^ 0x6a09e667f3bcc909ULL;
    std::uint64_t b = splitmix64(t);
    std::uint64_t k = a ^ (b + 0x3c6ef372fe94f82bULL + (a << 6) + (a >> 2));
    return splitmix64(k);
}

/// xoshiro256**. Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) (Lemire's multiply-shift, bias < 2^-64 * bound).
    std::uint64_t below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

inline Rng substream(std::uint64_t seed, std::uint64_t index) noexcept {
    return Rng(derive_seed(seed, index));
}

/// Threshold t such that `rng() < t` happens with probability `prob`
/// (to within 2^-64). prob is clamped to [0, 1).
inline std::uint64_t bernoulli_threshold(double prob) noexcept {
    if (!(prob > 0.0)) return 0;
    if (prob >= 1.0) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(prob * 0x1.0p64);
}

}  // namespace majvote
