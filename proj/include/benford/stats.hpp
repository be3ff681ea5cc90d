#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "benford/ptm.hpp"

namespace benford {

/// Counts of first significant digits 1..base-1. counts[d - 1] is digit d.
class DigitHistogram {
public:
    explicit DigitHistogram(std::uint32_t base_omega);

    std::uint32_t base() const noexcept { return base_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t count(std::uint32_t digit) const { return counts_.at(digit - 1); }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

    void add(std::uint32_t digit, std::uint64_t n = 1);
    /// Associative merge of a histogram over the same base.
    DigitHistogram& merge(const DigitHistogram& other);

    /// Relative frequencies; all zero when the histogram is empty.
    std::vector<double> frequencies() const;

    friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;

private:
    std::uint32_t base_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Cross-trial summary: mean, sample standard deviation (n - 1), and SEM.
struct TrialAggregate {
    std::vector<double> values;
    double mean = 0.0;
    double std = 0.0;
    double sem = 0.0;
};

/// P(d) = log_base(1 + 1/d), d = 1..base-1.
std::vector<double> benford_reference(std::uint32_t base_omega);

/// Half the L1 distance. Inputs must have equal length and each sum to 1
/// within 1e-9.
double tvd(std::span<const double> p, std::span<const double> q);

DigitHistogram histogram_from_sample(const EnsembleSample& sample, std::uint32_t base_omega);

/// Generates `count` strings on the fly (stream layout of sample_many) and
/// histograms their leading digits without keeping them. Serial.
DigitHistogram sample_digit_histogram(const ModelParams& params, std::size_t count,
                                      std::uint64_t seed, std::uint32_t base_omega,
                                      SamplerOptions opts = {});

/// OpenMP version of sample_digit_histogram; identical counts.
DigitHistogram sample_digit_histogram_parallel(const ModelParams& params, std::size_t count,
                                               std::uint64_t seed, std::uint32_t base_omega,
                                               SamplerOptions opts = {});

TrialAggregate aggregate(std::span<const double> values);

// Goodness-of-fit helpers used by the statistical tests. Not part of the
// analysis output.
namespace gof {

struct ChiSquare {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Pearson chi-square of observed counts against expected probabilities
/// (same length; probabilities are renormalized). dof = bins - 1 - fitted.
ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected,
                     std::size_t fitted_params = 0);

}  // namespace gof

}  // namespace benford
