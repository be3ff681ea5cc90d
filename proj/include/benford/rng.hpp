#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <limits>

namespace benford::rng {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Folds a sequence of keys into a single seed. Used to derive per-trial and
/// per-string stream seeds from a master seed:
///   h0 = mix64(master), h_{i+1} = mix64(h_i ^ (key_i + golden * (i + 1)))
template <typename... Keys>
constexpr std::uint64_t derive_seed(std::uint64_t master, Keys... keys) noexcept {
    std::uint64_t h = mix64(master);
    std::uint64_t i = 0;
    ((h = mix64(h ^ (static_cast<std::uint64_t>(keys) + kGolden * ++i))), ...);
    return h;
}

/// xoshiro256** seeded through SplitMix64. Satisfies
/// UniformRandomBitGenerator so it plugs into <random> if needed.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
        std::uint64_t s = seed;
        for (auto& w : state_) {
            s += kGolden;
            w = mix64(s);
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() noexcept {
        const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1p-53; }

    /// Uniform double in (0, 1].
    constexpr double uniform_open0() noexcept {
        return static_cast<double>(((*this)() >> 11) + 1) * 0x1p-53;
    }

private:
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace benford::rng
