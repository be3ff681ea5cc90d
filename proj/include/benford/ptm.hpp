#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "benford/bit_string.hpp"
#include "benford/numerics.hpp"
#include "benford/rng.hpp"

namespace benford {

inline constexpr std::size_t kDefaultMaxBits = 1'000'000;

struct SamplerOptions {
    std::size_t max_bits = kDefaultMaxBits;
};

/// A reproducible batch of outputs: regenerating with the same
/// (params, count, seed) yields identical strings.
struct EnsembleSample {
    std::vector<BitString> strings;
    std::uint64_t seed = 0;
    ModelParams params;
};

/// Reference emitter: writes '1', then draws from {0, 1, halt} one symbol at a
/// time until halt. Throws LengthCapExceeded past opts.max_bits.
BitString sample_one(const ModelParams& params, rng::Xoshiro256& gen, SamplerOptions opts = {});

/// Draws a length k >= 1 with P(k) = (1 - p_halt)^(k-1) p_halt by inversion.
std::size_t sample_length(const ModelParams& params, rng::Xoshiro256& gen,
                          SamplerOptions opts = {});

/// Same law as sample_one, but samples the length directly and fills the
/// k - 1 trailing bits from whole 64-bit words. Writes into `words`
/// (resized as needed) and returns the length.
std::size_t sample_direct_into(const ModelParams& params, rng::Xoshiro256& gen,
                               std::vector<std::uint64_t>& words, SamplerOptions opts = {});

BitString sample_direct(const ModelParams& params, rng::Xoshiro256& gen, SamplerOptions opts = {});

/// Seed of string `index` within a batch seeded by `seed`.
constexpr std::uint64_t string_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return rng::derive_seed(seed, index);
}

/// `count` independent strings, string i drawn with sample_direct from its own
/// stream string_stream_seed(seed, i). OpenMP-parallel over strings.
EnsembleSample sample_many(const ModelParams& params, std::size_t count, std::uint64_t seed,
                           SamplerOptions opts = {});

/// Serial counterpart of sample_many; byte-identical output.
EnsembleSample sample_many_serial(const ModelParams& params, std::size_t count,
                                  std::uint64_t seed, SamplerOptions opts = {});

/// Serial batch through the per-symbol reference emitter (sample_one),
/// same stream layout. Equal in law to sample_many, not bitwise.
EnsembleSample sample_many_stepwise(const ModelParams& params, std::size_t count,
                                    std::uint64_t seed, SamplerOptions opts = {});

/// Lengths only, string i from stream string_stream_seed(seed, i).
std::vector<std::size_t> sample_lengths(const ModelParams& params, std::size_t count,
                                        std::uint64_t seed, SamplerOptions opts = {});

/// E|beta| = 1 / p_halt.
double expected_length(const ModelParams& params);

/// E[2^(k-1)] = p/(2p - 1) for p > 1/2, +infinity otherwise.
double expected_order_of_magnitude(const ModelParams& params);

/// E[log2 Omega] = E|beta| - 1.
double expected_log_magnitude(const ModelParams& params);

/// 2^(E[log2 Omega]); +infinity once the exponent leaves the double range.
double characteristic_scale(const ModelParams& params);

}  // namespace benford
