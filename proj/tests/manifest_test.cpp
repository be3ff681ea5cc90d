#include <doctest.h>

#include <sstream>

#include "benford/errors.hpp"
#include "benford/manifest.hpp"

using namespace benford;

TEST_CASE("key-value parsing") {
    std::istringstream in("# comment\n\n trials = 5 \nlambdas=0.1,0.5\n");
    const KeyValues kv = parse_key_values(in);
    CHECK(kv.at("trials") == "5");
    CHECK(kv.at("lambdas") == "0.1,0.5");
    std::istringstream bad("no equals sign\n");
    CHECK_THROWS_AS(parse_key_values(bad), DomainError);
}

TEST_CASE("sweep config round trip through a manifest") {
    SweepConfig c = SweepConfig::ci_profile();
    c.master_seed = 123456789012345ULL;
    c.n_scales = {32, 64, 128};
    RunManifest m{"sweep", to_key_values(c)};
    m.timestamp = RunManifest::now_utc();
    std::stringstream text;
    m.write(text);

    const KeyValues kv = parse_key_values(text);
    CHECK(kv.at("subcommand") == "sweep");
    CHECK(kv.at("version") == BENFORD_VERSION);
    const SweepConfig back = sweep_config_from(kv, SweepConfig{});
    CHECK(back.lambdas == c.lambdas);
    CHECK(back.n_scales == c.n_scales);
    CHECK(back.strings_per_trial == c.strings_per_trial);
    CHECK(back.trials == c.trials);
    CHECK(back.base_omega == c.base_omega);
    CHECK(back.master_seed == c.master_seed);
}

TEST_CASE("sweep config errors") {
    CHECK_THROWS_AS(sweep_config_from({{"bogus", "1"}}), DomainError);
    CHECK_THROWS_AS(sweep_config_from({{"trials", "ten"}}), DomainError);
    CHECK_THROWS_AS(sweep_config_from({{"lambdas", "0.1,,0.2"}}), DomainError);
    CHECK(parse_real_list("0.5,1e-12") == std::vector<double>{0.5, 1e-12});
    CHECK(parse_uint_list("64,128") == std::vector<std::uint32_t>{64, 128});
}

TEST_CASE("timestamp shape") {
    const std::string t = RunManifest::now_utc();
    CHECK(t.size() == 20);
    CHECK(t[10] == 'T');
    CHECK(t.back() == 'Z');
}
