#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "benford/stats.hpp"

namespace benford {

inline constexpr std::uint64_t kDefaultMasterSeed = 0x5EED'BE4F'0D1A'2025ULL;

/// Parameters of a lambda sweep. Defaults give the standard full
/// grid: 19 lambdas (ascending, lambda* computed), N in {64, 128}, 10000
/// strings per trial, 100 trials.
struct SweepConfig {
    std::vector<double> lambdas;
    std::vector<std::uint32_t> n_scales;
    std::size_t strings_per_trial = 10000;
    std::size_t trials = 100;
    std::uint32_t base_omega = 10;
    std::uint64_t master_seed = kDefaultMasterSeed;

    static SweepConfig full_default();
    /// Full grid with 1000 strings and 20 trials.
    static SweepConfig ci_profile();

    /// Throws DomainError on an empty or out-of-range grid.
    void validate() const;
};

struct SweepRecord {
    double lambda = 0.0;
    std::uint32_t n_scale = 0;
    std::size_t trial = 0;
    double tvd = 0.0;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepCell {
    double lambda = 0.0;
    std::uint32_t n_scale = 0;
    TrialAggregate stats;
};

/// Records ordered by (lambda index, n index, trial); cells by
/// (lambda index, n index).
struct SweepResult {
    SweepConfig config;
    std::vector<SweepRecord> records;
    std::vector<SweepCell> cells;

    const SweepCell& cell(double lambda, std::uint32_t n_scale) const;
};

struct SweepOptions {
    /// Called with (finished, total) tasks, serialized, in completion order.
    std::function<void(std::size_t, std::size_t)> on_progress;
    /// Whole-sweep wall-clock budget in seconds; 0 disables. Exceeding it
    /// throws ConvergenceError.
    double time_budget_seconds = 0.0;
};

/// Stream seed of one (lambda, N, trial) task.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t lambda_index,
                         std::size_t n_index, std::size_t trial);

/// OpenMP-parallel over (lambda, N, trial) tasks.
SweepResult run_sweep(const SweepConfig& config, const SweepOptions& opts = {});

/// Serial reference; identical result to run_sweep.
SweepResult run_sweep_serial(const SweepConfig& config);

/// Rebuilds per-cell aggregates from records in key order.
std::vector<SweepCell> aggregate_records(const SweepConfig& config,
                                         const std::vector<SweepRecord>& records);

/// Change-point estimate of the TVD plateau onset for one N: the smallest grid
/// lambda from which every later decrement of the mean-TVD curve stays below
/// `sem_multiple` times the pooled SEM of the two cells involved. Needs >= 5
/// lambdas with lambda* strictly inside the grid; throws DomainError otherwise.
double plateau_detect(const SweepResult& result, std::uint32_t n_scale, double sem_multiple = 2.0);

void write_records_csv(std::ostream& out, const SweepResult& result);
void write_aggregates_csv(std::ostream& out, const SweepResult& result);
nlohmann::ordered_json sweep_summary_json(const SweepResult& result);

}  // namespace benford
