#include <doctest.h>

#include <omp.h>

#include <cmath>
#include <sstream>

#include "benford/errors.hpp"
#include "benford/harness.hpp"

using namespace benford;

namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.lambdas = {1e-12, 0.1, 0.5};
    c.n_scales = {64, 128};
    c.strings_per_trial = 500;
    c.trials = 4;
    c.master_seed = 99;
    return c;
}

std::string csv(const SweepResult& r) {
    std::ostringstream out;
    write_records_csv(out, r);
    write_aggregates_csv(out, r);
    return out.str();
}

// Synthetic result with the given mean curve and a common SEM.
SweepResult synthetic(const std::vector<double>& lambdas, const std::vector<double>& means,
                      double sem) {
    SweepResult r;
    r.config.lambdas = lambdas;
    r.config.n_scales = {64};
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        SweepCell c{lambdas[i], 64, {}};
        c.stats.mean = means[i];
        c.stats.sem = sem;
        r.cells.push_back(c);
    }
    return r;
}

}  // namespace

TEST_CASE("default grids") {
    const SweepConfig full = SweepConfig::full_default();
    CHECK(full.lambdas.size() == 19);
    CHECK(std::is_sorted(full.lambdas.begin(), full.lambdas.end()));
    CHECK(full.lambdas[10] == lambda_star());
    CHECK(full.n_scales == std::vector<std::uint32_t>{64, 128});
    CHECK(full.strings_per_trial == 10000);
    CHECK(full.trials == 100);
    const SweepConfig ci = SweepConfig::ci_profile();
    CHECK(ci.strings_per_trial == 1000);
    CHECK(ci.trials == 20);
}

TEST_CASE("config validation") {
    SweepConfig c = small_config();
    CHECK_NOTHROW(c.validate());
    c.lambdas.push_back(1.0);
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = small_config();
    c.trials = 0;
    CHECK_THROWS_AS(run_sweep(c), DomainError);
    c = small_config();
    c.n_scales.clear();
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("single cell") {
    SweepConfig c = small_config();
    c.lambdas = {0.3};
    c.n_scales = {64};
    c.trials = 1;
    const SweepResult r = run_sweep(c);
    REQUIRE(r.records.size() == 1);
    REQUIRE(r.cells.size() == 1);
    CHECK(r.cells[0].stats.mean == r.records[0].tvd);
    CHECK(r.cells[0].stats.std == 0.0);
}

TEST_CASE("sweep shape and determinism") {
    const SweepConfig c = small_config();
    const SweepResult a = run_sweep(c);
    CHECK(a.records.size() == 3 * 2 * 4);
    CHECK(a.cells.size() == 6);
    CHECK(a.records[9].lambda == 0.1);
    CHECK(a.records[9].n_scale == 64);
    CHECK(a.records[9].trial == 1);

    CHECK(csv(run_sweep(c)) == csv(a));
    CHECK(csv(run_sweep_serial(c)) == csv(a));

    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const std::string one_thread = csv(run_sweep(c));
    omp_set_num_threads(7);
    const std::string seven_threads = csv(run_sweep(c));
    omp_set_num_threads(threads);
    CHECK(one_thread == csv(a));
    CHECK(seven_threads == csv(a));

    SweepConfig other = c;
    other.master_seed = 100;
    CHECK(csv(run_sweep(other)) != csv(a));

    // Aggregates are recomputable from the records.
    const auto cells = aggregate_records(c, a.records);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(cells[i].stats.mean == a.cells[i].stats.mean);
        CHECK(cells[i].stats.sem == a.cells[i].stats.sem);
    }

    CHECK(a.cell(1e-12, 64).stats.mean > a.cell(0.5, 64).stats.mean);
    CHECK_THROWS_AS(a.cell(0.2, 64), DomainError);
}

TEST_CASE("trial seeds are distinct per key") {
    CHECK(trial_seed(1, 0, 0, 0) != trial_seed(1, 0, 0, 1));
    CHECK(trial_seed(1, 0, 1, 0) != trial_seed(1, 1, 0, 0));
    CHECK(trial_seed(1, 2, 3, 4) == trial_seed(1, 2, 3, 4));
    CHECK(trial_seed(1, 2, 3, 4) != trial_seed(2, 2, 3, 4));
}

TEST_CASE("progress and time budget") {
    const SweepConfig c = small_config();
    std::size_t calls = 0, last = 0;
    SweepOptions opts;
    opts.on_progress = [&](std::size_t done, std::size_t total) {
        ++calls;
        last = done;
        CHECK(total == 24);
    };
    run_sweep(c, opts);
    CHECK(calls == 24);
    CHECK(last == 24);

    SweepConfig slow = small_config();
    slow.strings_per_trial = 20000;
    slow.trials = 50;
    SweepOptions tight;
    tight.time_budget_seconds = 1e-6;
    CHECK_THROWS_AS(run_sweep(slow, tight), ConvergenceError);
}

TEST_CASE("plateau_detect on synthetic curves") {
    const std::vector<double> grid{1e-12, 0.05, 0.1, 0.2, 0.25, 0.5, 0.9};
    SUBCASE("flat") {
        const SweepResult r = synthetic(grid, std::vector<double>(grid.size(), 0.01), 1e-3);
        CHECK(plateau_detect(r, 64) == grid.front());
    }
    SUBCASE("step") {
        for (std::size_t j = 1; j < grid.size(); ++j) {
            std::vector<double> means(grid.size(), 0.01);
            for (std::size_t i = 0; i < j; ++i) means[i] = 0.2;
            CAPTURE(j);
            CHECK(plateau_detect(synthetic(grid, means, 1e-3), 64) == grid[j]);
        }
    }
    SUBCASE("noise below twice the pooled SEM is ignored") {
        std::vector<double> means{0.3, 0.2, 0.1, 0.0105, 0.0102, 0.0101, 0.0100};
        CHECK(plateau_detect(synthetic(grid, means, 1e-3), 64) == 0.2);
    }
    SUBCASE("coverage") {
        CHECK_THROWS_AS(plateau_detect(synthetic({0.1, 0.2, 0.3, 0.5}, {1, 1, 1, 1}, 0.1), 64),
                        DomainError);
        CHECK_THROWS_AS(plateau_detect(synthetic({0.3, 0.4, 0.5, 0.6, 0.7}, {1, 1, 1, 1, 1}, 0.1), 64),
                        DomainError);
        CHECK_THROWS_AS(plateau_detect(synthetic(grid, std::vector<double>(7, 0.1), 0.1), 128),
                        DomainError);
    }
}

TEST_CASE("output formats") {
    SweepConfig c = small_config();
    c.lambdas = {0.1};
    c.n_scales = {64};
    c.trials = 2;
    const SweepResult r = run_sweep(c);
    std::ostringstream rec, agg;
    write_records_csv(rec, r);
    write_aggregates_csv(agg, r);
    CHECK(rec.str().rfind("lambda,n_scale,trial,tvd\n0.10000000000000001,64,0,", 0) == 0);
    CHECK(agg.str().rfind("lambda,n_scale,mean_tvd,std,sem,trials\n0.10000000000000001,64,", 0) == 0);
    CHECK(agg.str().find(",2\n") != std::string::npos);

    const auto j = sweep_summary_json(r);
    CHECK(j["master_seed"] == 99);
    CHECK(j["records"].size() == 2);
    CHECK(j["aggregates"].size() == 1);
    CHECK(j["config"]["trials"] == 2);
    CHECK(j["records"][1]["tvd"].get<double>() == r.records[1].tvd);
}

// Expected mean TVD at 10^4 strings: exact digit law of the geometric-length
// ensemble plus multinomial sampling noise (tools/tvd_curve_oracle.py).
TEST_CASE("sweep means agree with the exact-law oracle") {
    SweepConfig c;
    c.lambdas = {1e-12, lambda_star(), 0.9};
    c.n_scales = {64, 128};
    c.strings_per_trial = 10000;
    c.trials = 30;
    const SweepResult r = run_sweep(c);
    const struct {
        double lambda;
        std::uint32_t n;
        double expected;
    } table[] = {{1e-12, 64, 0.17755}, {lambda_star(), 64, 0.01453}, {0.9, 64, 0.01052},
                 {1e-12, 128, 0.09148}, {lambda_star(), 128, 0.01158}, {0.9, 128, 0.01053}};
    for (const auto& row : table) {
        const SweepCell& cell = r.cell(row.lambda, row.n);
        CAPTURE(row.lambda);
        CAPTURE(row.n);
        CHECK(std::abs(cell.stats.mean - row.expected) <= 4.0 * cell.stats.sem + 2e-4);
    }
}
