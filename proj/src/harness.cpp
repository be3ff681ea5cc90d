#include "benford/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>
#include <string>

#include "benford/errors.hpp"
#include "benford/format.hpp"
#include "benford/magnitude.hpp"

namespace benford {

namespace {

struct Task {
    std::size_t lambda_index;
    std::size_t n_index;
    std::size_t trial;
};

std::vector<Task> make_tasks(const SweepConfig& c) {
    std::vector<Task> tasks;
    tasks.reserve(c.lambdas.size() * c.n_scales.size() * c.trials);
    for (std::size_t li = 0; li < c.lambdas.size(); ++li)
        for (std::size_t ni = 0; ni < c.n_scales.size(); ++ni)
            for (std::size_t t = 0; t < c.trials; ++t) tasks.push_back({li, ni, t});
    return tasks;
}

SweepRecord run_task(const SweepConfig& c, const Task& task, const std::vector<double>& reference) {
    const double lambda = c.lambdas[task.lambda_index];
    const std::uint32_t n = c.n_scales[task.n_index];
    const ModelParams params = maxent_params(lambda, n);
    const DigitHistogram h =
        sample_digit_histogram(params, c.strings_per_trial,
                               trial_seed(c.master_seed, task.lambda_index, task.n_index, task.trial),
                               c.base_omega);
    return {lambda, n, task.trial, tvd(h.frequencies(), reference)};
}

}  // namespace

SweepConfig SweepConfig::full_default() {
    SweepConfig c;
    c.lambdas = {1e-12, 1e-6, 0.025, 0.05, 0.075, 0.1, 0.15, 0.175, 0.2, 0.225,
                 lambda_star(), 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    c.n_scales = {64, 128};
    return c;
}

SweepConfig SweepConfig::ci_profile() {
    SweepConfig c = full_default();
    c.strings_per_trial = 1000;
    c.trials = 20;
    return c;
}

void SweepConfig::validate() const {
    if (lambdas.empty()) throw DomainError("sweep: empty lambda grid");
    if (n_scales.empty()) throw DomainError("sweep: empty N grid");
    for (double l : lambdas)
        if (!(l > 0.0 && l < 1.0)) throw DomainError("sweep: lambda outside (0, 1): " + format_real(l));
    for (std::uint32_t n : n_scales)
        if (n == 0) throw DomainError("sweep: N must be positive");
    if (strings_per_trial == 0) throw DomainError("sweep: strings_per_trial must be positive");
    if (trials == 0) throw DomainError("sweep: trials must be positive");
    check_base(base_omega);
}

const SweepCell& SweepResult::cell(double lambda, std::uint32_t n_scale) const {
    for (const SweepCell& c : cells)
        if (c.lambda == lambda && c.n_scale == n_scale) return c;
    throw DomainError("sweep result has no cell for lambda " + format_real(lambda) + ", N " +
                      std::to_string(n_scale));
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t lambda_index, std::size_t n_index,
                         std::size_t trial) {
    return rng::derive_seed(master_seed, lambda_index, n_index, trial);
}

std::vector<SweepCell> aggregate_records(const SweepConfig& config,
                                         const std::vector<SweepRecord>& records) {
    const std::size_t per_cell = config.trials;
    if (records.size() != config.lambdas.size() * config.n_scales.size() * per_cell)
        throw DomainError("record count does not match the sweep grid");
    std::vector<SweepCell> cells;
    std::vector<double> values(per_cell);
    for (std::size_t first = 0; first < records.size(); first += per_cell) {
        for (std::size_t t = 0; t < per_cell; ++t) values[t] = records[first + t].tvd;
        cells.push_back({records[first].lambda, records[first].n_scale, aggregate(values)});
    }
    return cells;
}

SweepResult run_sweep(const SweepConfig& config, const SweepOptions& opts) {
    config.validate();
    const std::vector<Task> tasks = make_tasks(config);
    const std::vector<double> reference = benford_reference(config.base_omega);
    SweepResult result{config, std::vector<SweepRecord>(tasks.size()), {}};

    const auto start = std::chrono::steady_clock::now();
    std::atomic<bool> over_budget{false};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::size_t done = 0;
    const auto n_tasks = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n_tasks; ++i) {
        if (over_budget.load(std::memory_order_relaxed) || failed.load(std::memory_order_relaxed))
            continue;
        try {
            result.records[i] = run_task(config, tasks[i], reference);
        } catch (...) {
#pragma omp critical(benford_sweep_error)
            if (!failed.exchange(true)) failure = std::current_exception();
            continue;
        }
        if (opts.time_budget_seconds > 0.0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() > opts.time_budget_seconds) over_budget = true;
        }
        if (opts.on_progress) {
#pragma omp critical(benford_sweep_progress)
            opts.on_progress(++done, tasks.size());
        }
    }
    if (failed) std::rethrow_exception(failure);
    if (over_budget)
        throw ConvergenceError("sweep exceeded its time budget of " +
                               format_real(opts.time_budget_seconds, 6) + " s");

    result.cells = aggregate_records(config, result.records);
    return result;
}

SweepResult run_sweep_serial(const SweepConfig& config) {
    config.validate();
    const std::vector<double> reference = benford_reference(config.base_omega);
    SweepResult result{config, {}, {}};
    for (const Task& task : make_tasks(config))
        result.records.push_back(run_task(config, task, reference));
    result.cells = aggregate_records(config, result.records);
    return result;
}

double plateau_detect(const SweepResult& result, std::uint32_t n_scale, double sem_multiple) {
    std::vector<const SweepCell*> curve;
    for (const SweepCell& c : result.cells)
        if (c.n_scale == n_scale) curve.push_back(&c);
    std::sort(curve.begin(), curve.end(),
              [](const SweepCell* a, const SweepCell* b) { return a->lambda < b->lambda; });
    const double star = lambda_star();
    if (curve.size() < 5 || !(curve.front()->lambda < star && star < curve.back()->lambda))
        throw DomainError("plateau_detect: need >= 5 lambdas on both sides of lambda* for N = " +
                          std::to_string(n_scale));

    std::size_t onset = curve.size() - 1;
    for (std::size_t j = curve.size() - 1; j-- > 0;) {
        const double drop = curve[j]->stats.mean - curve[j + 1]->stats.mean;
        const double pooled = std::hypot(curve[j]->stats.sem, curve[j + 1]->stats.sem);
        if (drop >= sem_multiple * pooled) break;
        onset = j;
    }
    return curve[onset]->lambda;
}

void write_records_csv(std::ostream& out, const SweepResult& result) {
    out << "lambda,n_scale,trial,tvd\n";
    for (const SweepRecord& r : result.records)
        out << format_real(r.lambda) << ',' << r.n_scale << ',' << r.trial << ','
            << format_real(r.tvd) << '\n';
}

void write_aggregates_csv(std::ostream& out, const SweepResult& result) {
    out << "lambda,n_scale,mean_tvd,std,sem,trials\n";
    for (const SweepCell& c : result.cells)
        out << format_real(c.lambda) << ',' << c.n_scale << ',' << format_real(c.stats.mean) << ','
            << format_real(c.stats.std) << ',' << format_real(c.stats.sem) << ','
            << c.stats.values.size() << '\n';
}

nlohmann::ordered_json sweep_summary_json(const SweepResult& result) {
    using nlohmann::ordered_json;
    const SweepConfig& c = result.config;
    ordered_json j;
    j["config"] = {{"lambdas", c.lambdas},
                   {"n_scales", c.n_scales},
                   {"strings_per_trial", c.strings_per_trial},
                   {"trials", c.trials},
                   {"base", c.base_omega}};
    j["master_seed"] = c.master_seed;
    ordered_json records = ordered_json::array();
    for (const SweepRecord& r : result.records)
        records.push_back({{"lambda", r.lambda}, {"n_scale", r.n_scale}, {"trial", r.trial},
                           {"tvd", r.tvd}});
    j["records"] = std::move(records);
    ordered_json cells = ordered_json::array();
    for (const SweepCell& cell : result.cells)
        cells.push_back({{"lambda", cell.lambda},
                         {"n_scale", cell.n_scale},
                         {"mean_tvd", cell.stats.mean},
                         {"std", cell.stats.std},
                         {"sem", cell.stats.sem},
                         {"trials", cell.stats.values.size()}});
    j["aggregates"] = std::move(cells);
    return j;
}

}  // namespace benford
