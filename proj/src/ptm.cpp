#include "benford/ptm.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "benford/errors.hpp"

namespace benford {

namespace {

[[noreturn]] void cap_exceeded(std::size_t max_bits) {
    throw LengthCapExceeded("sampled string exceeds the cap of " + std::to_string(max_bits) +
                            " bits");
}

}  // namespace

BitString sample_one(const ModelParams& params, rng::Xoshiro256& gen, SamplerOptions opts) {
    std::vector<std::uint64_t> words{std::uint64_t{1} << 63};
    std::size_t length = 1;
    const double zero_cut = params.p_halt + params.p_zero;
    for (;;) {
        const double u = gen.uniform();
        if (u < params.p_halt) break;
        if (length == opts.max_bits) cap_exceeded(opts.max_bits);
        if ((length & 63) == 0) words.push_back(0);
        if (u >= zero_cut) words[length >> 6] |= std::uint64_t{1} << (63 - (length & 63));
        ++length;
    }
    return BitString::from_words(std::move(words), length);
}

std::size_t sample_length(const ModelParams& params, rng::Xoshiro256& gen, SamplerOptions opts) {
    const double u = gen.uniform_open0();
    if (params.p_halt >= 1.0) return 1;
    const double extra = std::floor(std::log(u) / std::log1p(-params.p_halt));
    if (!(extra < static_cast<double>(opts.max_bits))) cap_exceeded(opts.max_bits);
    return 1 + static_cast<std::size_t>(extra);
}

std::size_t sample_direct_into(const ModelParams& params, rng::Xoshiro256& gen,
                               std::vector<std::uint64_t>& words, SamplerOptions opts) {
    const std::size_t length = sample_length(params, gen, opts);
    const std::size_t nwords = (length + 63) / 64;
    words.resize(nwords);
    for (auto& w : words) w = gen();
    words[0] |= std::uint64_t{1} << 63;
    if (const std::size_t tail = length & 63; tail != 0) words.back() &= ~std::uint64_t{0} << (64 - tail);
    return length;
}

BitString sample_direct(const ModelParams& params, rng::Xoshiro256& gen, SamplerOptions opts) {
    std::vector<std::uint64_t> words;
    const std::size_t length = sample_direct_into(params, gen, words, opts);
    return BitString::from_words(std::move(words), length);
}

EnsembleSample sample_many(const ModelParams& params, std::size_t count, std::uint64_t seed,
                           SamplerOptions opts) {
    if (count == 0) throw DomainError("sample count must be positive");
    params.validate();
    std::vector<std::vector<std::uint64_t>> words(count);
    std::vector<std::size_t> lengths(count);
    bool capped = false;

#pragma omp parallel for schedule(static) reduction(|| : capped)
    for (std::size_t i = 0; i < count; ++i) {
        rng::Xoshiro256 gen(string_stream_seed(seed, i));
        try {
            lengths[i] = sample_direct_into(params, gen, words[i], opts);
        } catch (const LengthCapExceeded&) {
            capped = true;
        }
    }
    if (capped) cap_exceeded(opts.max_bits);

    EnsembleSample out{{}, seed, params};
    out.strings.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.strings.push_back(BitString::from_words(std::move(words[i]), lengths[i]));
    return out;
}

EnsembleSample sample_many_serial(const ModelParams& params, std::size_t count,
                                  std::uint64_t seed, SamplerOptions opts) {
    if (count == 0) throw DomainError("sample count must be positive");
    params.validate();
    EnsembleSample out{{}, seed, params};
    out.strings.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        rng::Xoshiro256 gen(string_stream_seed(seed, i));
        out.strings.push_back(sample_direct(params, gen, opts));
    }
    return out;
}

EnsembleSample sample_many_stepwise(const ModelParams& params, std::size_t count,
                                    std::uint64_t seed, SamplerOptions opts) {
    if (count == 0) throw DomainError("sample count must be positive");
    params.validate();
    EnsembleSample out{{}, seed, params};
    out.strings.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        rng::Xoshiro256 gen(string_stream_seed(seed, i));
        out.strings.push_back(sample_one(params, gen, opts));
    }
    return out;
}

std::vector<std::size_t> sample_lengths(const ModelParams& params, std::size_t count,
                                        std::uint64_t seed, SamplerOptions opts) {
    params.validate();
    std::vector<std::size_t> lengths(count);
    bool capped = false;
#pragma omp parallel for schedule(static) reduction(|| : capped)
    for (std::size_t i = 0; i < count; ++i) {
        rng::Xoshiro256 gen(string_stream_seed(seed, i));
        try {
            lengths[i] = sample_length(params, gen, opts);
        } catch (const LengthCapExceeded&) {
            capped = true;
        }
    }
    if (capped) cap_exceeded(opts.max_bits);
    return lengths;
}

double expected_length(const ModelParams& params) { return 1.0 / params.p_halt; }

double expected_order_of_magnitude(const ModelParams& params) {
    if (params.p_halt <= 0.5) return std::numeric_limits<double>::infinity();
    return params.p_halt / (2.0 * params.p_halt - 1.0);
}

double expected_log_magnitude(const ModelParams& params) { return 1.0 / params.p_halt - 1.0; }

double characteristic_scale(const ModelParams& params) {
    const double exponent = expected_log_magnitude(params);
    if (exponent >= std::numeric_limits<double>::max_exponent)
        return std::numeric_limits<double>::infinity();
    return std::exp2(exponent);
}

}  // namespace benford
