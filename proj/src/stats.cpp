#include "benford/stats.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "benford/errors.hpp"
#include "benford/magnitude.hpp"

namespace benford {

DigitHistogram::DigitHistogram(std::uint32_t base_omega) : base_(base_omega) {
    check_base(base_omega);
    counts_.assign(base_omega - 1, 0);
}

void DigitHistogram::add(std::uint32_t digit, std::uint64_t n) {
    if (digit < 1 || digit >= base_) throw DomainError("digit out of range for base");
    counts_[digit - 1] += n;
    total_ += n;
}

DigitHistogram& DigitHistogram::merge(const DigitHistogram& other) {
    if (other.base_ != base_) throw DomainError("cannot merge histograms over different bases");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    total_ += other.total_;
    return *this;
}

std::vector<double> DigitHistogram::frequencies() const {
    std::vector<double> f(counts_.size(), 0.0);
    if (total_ == 0) return f;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        f[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
    return f;
}

std::vector<double> benford_reference(std::uint32_t base_omega) {
    check_base(base_omega);
    const double log_base = std::log(static_cast<double>(base_omega));
    std::vector<double> p(base_omega - 1);
    for (std::uint32_t d = 1; d < base_omega; ++d)
        p[d - 1] = std::log1p(1.0 / d) / log_base;
    return p;
}

double tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw DomainError("tvd: length mismatch (" + std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()) + ")");
    const double sp = std::accumulate(p.begin(), p.end(), 0.0);
    const double sq = std::accumulate(q.begin(), q.end(), 0.0);
    if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9)
        throw DomainError("tvd: inputs must be probability vectors");
    double l1 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
    return 0.5 * l1;
}

DigitHistogram histogram_from_sample(const EnsembleSample& sample, std::uint32_t base_omega) {
    if (sample.strings.empty()) throw DomainError("histogram of an empty sample");
    const DigitClassifier classifier(base_omega);
    DigitHistogram h(base_omega);
    for (const BitString& s : sample.strings) h.add(classifier.classify(s.view()));
    return h;
}

DigitHistogram sample_digit_histogram(const ModelParams& params, std::size_t count,
                                      std::uint64_t seed, std::uint32_t base_omega,
                                      SamplerOptions opts) {
    if (count == 0) throw DomainError("sample count must be positive");
    params.validate();
    const DigitClassifier classifier(base_omega);
    std::vector<std::uint64_t> counts(base_omega - 1, 0);
    std::vector<std::uint64_t> words;
    for (std::size_t i = 0; i < count; ++i) {
        rng::Xoshiro256 gen(string_stream_seed(seed, i));
        const std::size_t length = sample_direct_into(params, gen, words, opts);
        ++counts[classifier.classify({words, length}) - 1];
    }
    DigitHistogram h(base_omega);
    for (std::uint32_t d = 1; d < base_omega; ++d) h.add(d, counts[d - 1]);
    return h;
}

DigitHistogram sample_digit_histogram_parallel(const ModelParams& params, std::size_t count,
                                               std::uint64_t seed, std::uint32_t base_omega,
                                               SamplerOptions opts) {
    if (count == 0) throw DomainError("sample count must be positive");
    params.validate();
    const DigitClassifier classifier(base_omega);
    DigitHistogram total(base_omega);
    bool capped = false;

#pragma omp parallel
    {
        std::vector<std::uint64_t> counts(base_omega - 1, 0);
        std::vector<std::uint64_t> words;
#pragma omp for schedule(static) reduction(|| : capped)
        for (std::size_t i = 0; i < count; ++i) {
            rng::Xoshiro256 gen(string_stream_seed(seed, i));
            try {
                const std::size_t length = sample_direct_into(params, gen, words, opts);
                ++counts[classifier.classify({words, length}) - 1];
            } catch (const LengthCapExceeded&) {
                capped = true;
            }
        }
        // Integer counts: merge order does not matter.
#pragma omp critical(benford_histogram_merge)
        for (std::uint32_t d = 1; d < base_omega; ++d) total.add(d, counts[d - 1]);
    }
    if (capped)
        throw LengthCapExceeded("sampled string exceeds the cap of " +
                                std::to_string(opts.max_bits) + " bits");
    return total;
}

TrialAggregate aggregate(std::span<const double> values) {
    if (values.empty()) throw DomainError("aggregate of no values");
    TrialAggregate a;
    a.values.assign(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    a.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() >= 2) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.std = std::sqrt(ss / (n - 1.0));
        a.sem = a.std / std::sqrt(n);
    }
    return a;
}

namespace gof {

ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected,
                     std::size_t fitted_params) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw DomainError("chi_square: need matching bins, at least two");
    const double n = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    const double mass = std::accumulate(expected.begin(), expected.end(), 0.0);
    ChiSquare r;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = n * expected[i] / mass;
        if (!(e > 0.0)) throw DomainError("chi_square: empty expected bin");
        const double diff = static_cast<double>(observed[i]) - e;
        r.statistic += diff * diff / e;
    }
    if (observed.size() - 1 <= fitted_params) throw DomainError("chi_square: no degrees of freedom");
    r.dof = observed.size() - 1 - fitted_params;
    r.p_value = boost::math::gamma_q(0.5 * static_cast<double>(r.dof), 0.5 * r.statistic);
    return r;
}

}  // namespace gof

}  // namespace benford
