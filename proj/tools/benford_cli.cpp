// benford: command-line front end for the halting-emitter experiments.
//
//   benford constant  [--tol T]
//   benford generate  --lambda L --n N --count C [--seed S] [--base B] [--format strings|hist]
//   benford sweep     --out-dir DIR [--config FILE] [--profile full|ci] [grid flags]
//   benford analyze   --input FILE [--column NAME|INDEX] [--samples M] [--seed S] [--base B]
//   benford partition [--base B] [--n N] [--beta BETA]
//   benford reference [--base B]
//
// Exit codes: 0 success, 1 usage/validation, 2 runtime (I/O, convergence).
// BENFORD_SEED overrides the default seed; an explicit --seed wins.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "benford/dataset.hpp"
#include "benford/errors.hpp"
#include "benford/format.hpp"
#include "benford/harness.hpp"
#include "benford/manifest.hpp"
#include "benford/numerics.hpp"
#include "benford/partition.hpp"
#include "benford/ptm.hpp"
#include "benford/stats.hpp"

namespace fs = std::filesystem;
using namespace benford;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("BENFORD_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(env, &used, 0);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw DomainError(std::string("BENFORD_SEED is not an unsigned integer: ") + env);
    }
    return kDefaultMasterSeed;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("write failed for " + path.string());
}

int run_constant(double tol) {
    if (!(tol > 0.0)) throw DomainError("--tol must be positive");
    std::cout << format_fixed(compute_lambda_star(tol), 12) << '\n';
    return 0;
}

struct GenerateArgs {
    double lambda = 0.5;
    std::uint32_t n = 128;
    std::size_t count = 10;
    std::optional<std::uint64_t> seed;
    std::uint32_t base = 10;
    std::string format = "strings";
};

int run_generate(const GenerateArgs& a) {
    if (a.count == 0) throw DomainError("--count must be positive");
    const ModelParams params = maxent_params(a.lambda, a.n);
    const std::uint64_t seed = resolve_seed(a.seed);
    if (a.format == "strings") {
        const EnsembleSample sample = sample_many(params, a.count, seed);
        std::string out;
        for (const BitString& s : sample.strings) out += s.to_string() + '\n';
        std::cout << out;
        return 0;
    }
    const DigitHistogram h = sample_digit_histogram_parallel(params, a.count, seed, a.base);
    nlohmann::ordered_json j;
    j["manifest"] = {{"subcommand", "generate"},
                     {"lambda", a.lambda},
                     {"n_scale", a.n},
                     {"count", a.count},
                     {"seed", seed},
                     {"base", a.base},
                     {"version", BENFORD_VERSION}};
    j["p_halt"] = params.p_halt;
    j["total"] = h.total();
    j["counts"] = h.counts();
    j["frequencies"] = h.frequencies();
    j["tvd_to_benford"] = tvd(h.frequencies(), benford_reference(a.base));
    std::cout << j.dump(2) << '\n';
    return 0;
}

struct SweepArgs {
    fs::path out_dir;
    std::string config_file;
    std::string profile = "full";
    std::string lambdas;
    std::string n_scales;
    std::optional<std::size_t> strings;
    std::optional<std::size_t> trials;
    std::optional<std::uint32_t> base;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

int run_sweep_cmd(const SweepArgs& a) {
    if (a.profile != "full" && a.profile != "ci") throw DomainError("--profile must be full or ci");
    SweepConfig config = a.profile == "ci" ? SweepConfig::ci_profile() : SweepConfig::full_default();
    config.master_seed = resolve_seed(std::nullopt);
    if (!a.config_file.empty()) {
        std::ifstream in(a.config_file);
        if (!in) throw IoError("cannot read config " + a.config_file);
        config = sweep_config_from(parse_key_values(in), config);
    }
    if (!a.lambdas.empty()) config.lambdas = parse_real_list(a.lambdas);
    if (!a.n_scales.empty()) config.n_scales = parse_uint_list(a.n_scales);
    if (a.strings) config.strings_per_trial = *a.strings;
    if (a.trials) config.trials = *a.trials;
    if (a.base) config.base_omega = *a.base;
    if (a.seed) config.master_seed = *a.seed;
    config.validate();

    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec || !fs::is_directory(a.out_dir)) throw IoError("cannot create " + a.out_dir.string());

    SweepOptions opts;
    if (!a.quiet) {
        opts.on_progress = [last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
            const std::size_t pct = 100 * done / total;
            if (pct != last || done == total) {
                last = pct;
                std::cerr << "\rsweep " << done << '/' << total << " tasks" << std::flush;
                if (done == total) std::cerr << '\n';
            }
        };
    }
    const SweepResult result = run_sweep(config, opts);

    std::ostringstream records, aggregates;
    write_records_csv(records, result);
    write_aggregates_csv(aggregates, result);
    write_file(a.out_dir / "sweep_records.csv", records.str());
    write_file(a.out_dir / "sweep_aggregates.csv", aggregates.str());
    write_file(a.out_dir / "sweep_summary.json", sweep_summary_json(result).dump(2) + '\n');

    RunManifest manifest{"sweep", to_key_values(config), BENFORD_VERSION, RunManifest::now_utc()};
    std::ostringstream m;
    manifest.write(m);
    write_file(a.out_dir / "manifest.txt", m.str());

    std::cout << "wrote " << result.records.size() << " records, " << result.cells.size()
              << " aggregates to " << a.out_dir.string() << '\n';
    for (std::uint32_t n : config.n_scales) {
        try {
            std::cout << "plateau onset N=" << n << ": lambda = "
                      << format_real(plateau_detect(result, n), 6) << '\n';
        } catch (const DomainError&) {
            // Grid too small or one-sided; nothing to report.
        }
    }
    return 0;
}

struct AnalyzeArgs {
    std::string input;
    std::string column = "population";
    std::uint32_t base = 10;
    std::size_t samples = 10000;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_analyze(const AnalyzeArgs& a) {
    if (a.samples == 0) throw DomainError("--samples must be positive");
    const std::uint64_t seed = resolve_seed(a.seed);
    const IngestResult ingested = ingest(a.input, a.column);
    const DatasetSummary summary = summarize(ingested.values, a.base);
    const TruncationReport report = truncation_comparison(summary, a.samples, seed, a.base);
    const std::string text = analysis_report_json(ingested, summary, report).dump(2) + '\n';
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
    return 0;
}

int run_partition(std::uint32_t base, double n, double beta) {
    const std::vector<double> p = partition::benford_from_partition(base, n, beta);
    std::cout << "n\tphi(n)\tP(n)\n";
    for (std::uint32_t d = 1; d < base; ++d)
        std::cout << d << '\t' << format_real(partition::phi(d, n, beta), 6) << '\t'
                  << format_fixed(p[d - 1], 6) << '\n';
    return 0;
}

int run_reference(std::uint32_t base) {
    const std::vector<double> p = benford_reference(base);
    std::cout << "d\tP(d)\n";
    for (std::uint32_t d = 1; d < base; ++d) std::cout << d << '\t' << format_fixed(p[d - 1], 6) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Halting binary emitter ensembles and first-digit statistics"};
    app.set_version_flag("--version", std::string(BENFORD_VERSION));
    app.require_subcommand(1);

    double tol = 1e-12;
    auto* constant = app.add_subcommand("constant", "Print the auxiliary constant lambda*");
    constant->add_option("--tol", tol, "Absolute quadrature tolerance");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Sample binary outputs");
    generate->add_option("--lambda", gen.lambda, "Max-entropy lambda in (0,1)");
    generate->add_option("--n", gen.n, "Scale bound N (bits)");
    generate->add_option("--count", gen.count, "Number of strings");
    generate->add_option("--seed", gen.seed, "Master seed");
    generate->add_option("--base", gen.base, "Display base for --format hist");
    generate->add_option("--format", gen.format, "strings | hist")
        ->check(CLI::IsMember({"strings", "hist"}));

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Lambda sweep of first-digit TVD");
    sweep->add_option("--out-dir", sw.out_dir, "Output directory")->required();
    sweep->add_option("--config", sw.config_file, "key = value config or a previous manifest");
    sweep->add_option("--profile", sw.profile, "full | ci defaults");
    sweep->add_option("--lambdas", sw.lambdas, "Comma-separated lambda grid");
    sweep->add_option("--n-scales", sw.n_scales, "Comma-separated N values");
    sweep->add_option("--strings", sw.strings, "Strings per trial");
    sweep->add_option("--trials", sw.trials, "Trials per cell");
    sweep->add_option("--base", sw.base, "Display base");
    sweep->add_option("--seed", sw.seed, "Master seed");
    sweep->add_flag("--quiet", sw.quiet, "No progress output");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "First-digit audit of a numeric column");
    analyze->add_option("--input", an.input, "Delimited text file")->required();
    analyze->add_option("--column", an.column, "Column name or 0-based index");
    analyze->add_option("--base", an.base, "Display base");
    analyze->add_option("--samples", an.samples, "Model strings to sample");
    analyze->add_option("--seed", an.seed, "Sampling seed");
    analyze->add_option("--out", an.out, "Write the JSON report here instead of stdout");

    std::uint32_t part_base = 10;
    double part_n = 1.0, part_beta = 1.0;
    auto* part = app.add_subcommand("partition", "Normalized partition-model digit profile");
    part->add_option("--base", part_base, "Base");
    part->add_option("--n", part_n, "Number of components N");
    part->add_option("--beta", part_beta, "Lagrange multiplier beta");

    std::uint32_t ref_base = 10;
    auto* reference = app.add_subcommand("reference", "Benford reference distribution");
    reference->add_option("--base", ref_base, "Base");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*constant) return run_constant(tol);
        if (*generate) return run_generate(gen);
        if (*sweep) return run_sweep_cmd(sw);
        if (*analyze) return run_analyze(an);
        if (*part) return run_partition(part_base, part_n, part_beta);
        if (*reference) return run_reference(ref_base);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
