#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "benford/errors.hpp"
#include "benford/partition.hpp"
#include "benford/stats.hpp"

using namespace benford;
using namespace benford::partition;

namespace {

// Stars-and-bars oracle: enumerate nonnegative N-vectors with sum E.
std::uint64_t enumerate_states(unsigned n, unsigned e) {
    std::function<std::uint64_t(unsigned, unsigned)> go = [&](unsigned slots, unsigned left) {
        if (slots == 1) return std::uint64_t{1};
        std::uint64_t total = 0;
        for (unsigned v = 0; v <= left; ++v) total += go(slots - 1, left - v);
        return total;
    };
    return go(n, e);
}

}  // namespace

TEST_CASE("count_states against enumeration") {
    CHECK(count_states(3, 2) == BigUInt(6));
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned e = 0; e <= 8; ++e) {
            CAPTURE(n);
            CAPTURE(e);
            CHECK(count_states(n, e) == BigUInt(enumerate_states(n, e)));
        }
    CHECK(count_states(1, 12345) == BigUInt(1));
    CHECK(count_states(77, 0) == BigUInt(1));
    // C(199, 99), value from an independent exact binomial (Python math.comb).
    CHECK(count_states(101, 99).to_string() ==
          "45274257328051640582702088538742081937252294837706668420660");
    CHECK_THROWS_AS(count_states(0, 3), DomainError);
}

TEST_CASE("log_states_exact") {
    CHECK(log_states_exact(3, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
    CHECK(log_states_exact(9, 0) == 0.0);
    for (unsigned n = 1; n <= 250; n += 13)
        for (unsigned e = 0; n + e <= 500; e += 17) {
            const double exact = count_states(n, e).log();
            if (exact == 0.0) {
                CHECK(log_states_exact(n, e) == 0.0);
                continue;
            }
            CHECK(std::abs(log_states_exact(n, e) / exact - 1.0) <= 1e-9);
        }
    // ln C(399, 300) = 220.46917812149... (exact big-integer oracle)
    CHECK(log_states_exact(100, 300) == doctest::Approx(220.46917812149).epsilon(1e-11));
    CHECK(std::abs(log_states_exact(100, 300) / count_states(100, 300).log() - 1.0) <= 1e-9);
}

TEST_CASE("Stirling entropy") {
    CHECK(entropy_stirling(1000, 1.0) == doctest::Approx(1000 * 2 * std::log(2.0)));
    CHECK(entropy_stirling(1000, 1.0) == doctest::Approx(1386.29).epsilon(1e-5));
    CHECK(entropy_stirling(10, 1e-12) < 1e-9);
    CHECK_THROWS_AS(entropy_stirling(10, 0.0), DomainError);
    CHECK_THROWS_AS(entropy_stirling(10, -1.0), DomainError);

    const auto rel = [](std::uint64_t n, double mu) {
        const auto e = static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * mu));
        return std::abs(entropy_stirling(static_cast<double>(n), mu) / log_states_exact(n, e) - 1.0);
    };
    for (double mu : {0.5, 1.0, 2.0, 3.0, 5.0}) {
        CAPTURE(mu);
        CHECK(rel(100, mu) <= 0.05);
        CHECK(rel(10'000, mu) <= 0.005);
    }
    double previous = 1.0;
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10'000ULL}) {
        CHECK(rel(n, 1.0) < previous);
        previous = rel(n, 1.0);
    }
}

TEST_CASE("phi") {
    CHECK(phi(1.0, 7.0, 7.0) == doctest::Approx(std::log(2.0)));
    CHECK(phi(1e12, 1.0, 1.0) < 1e-11);
    CHECK_THROWS_AS(phi(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(phi(1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(phi(1.0, -1.0, 1.0), DomainError);

    const double h = 1e-5;
    for (double n : {1.0, 10.0, 1000.0})
        for (double beta : {0.5, 1.0, 3.0})
            for (double mu : {0.5, 1.0, 3.0}) {
                const double fd =
                    (entropy_stirling(n, mu + h) - entropy_stirling(n, mu - h)) / (2 * h) / beta;
                const double exact = phi(mu, n, beta);
                CHECK(std::abs(fd - exact) <= 1e-6 * exact);
            }
}

TEST_CASE("normalized profile is Benford") {
    const auto p10 = benford_from_partition(10);
    CHECK(p10[0] == doctest::Approx(0.301030).epsilon(1e-6));
    for (std::uint32_t base : {2U, 8U, 10U, 16U, 60U}) {
        const auto ref = benford_reference(base);
        for (double n : {1.0, 10.0, 100.0})
            for (double beta : {1.0, 10.0, 100.0}) {
                const auto p = benford_from_partition(base, n, beta);
                REQUIRE(p.size() == ref.size());
                for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i] - ref[i]) <= 1e-12);
            }
    }
    const auto p16 = benford_from_partition(16);
    CHECK(std::accumulate(p16.begin(), p16.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(benford_from_partition(1), DomainError);
}

TEST_CASE("mean_phi telescopes") {
    CHECK(mean_phi(1.0, 1.0, 10) == doctest::Approx(std::log(10.0)).epsilon(1e-13));
    CHECK(mean_phi(5.0, 2.0, 2) == doctest::Approx(std::log(2.0) / 2).epsilon(1e-13));
    for (double n : {1.0, 3.0, 1000.0})
        for (double beta : {0.1, 1.0, 7.0})
            for (std::uint32_t base : {2U, 10U, 60U, 1000U})
                CHECK(std::abs(mean_phi(n, beta, base) - std::log(double(base)) / beta) <=
                      1e-12 * std::max(1.0, std::log(double(base)) / beta));
}

TEST_CASE("Riemann sum of phi converges to its integral") {
    for (double mu : {0.5, 1.0, 4.0}) {
        const double integral = entropy_rate_integral(mu, 1.0, 1.0);
        double previous = std::abs(entropy_rate_riemann_sum(mu, 10, 1.0, 1.0) - integral);
        for (std::uint64_t panels : {100ULL, 1000ULL, 10'000ULL, 100'000ULL}) {
            const double err = std::abs(entropy_rate_riemann_sum(mu, panels, 1.0, 1.0) - integral);
            CHECK(err < previous);
            previous = err;
        }
        CHECK(previous < 1e-3 * integral);
    }
}

TEST_CASE("counting measure validation") {
    const std::vector<double> ok{2, 3, 5};
    CHECK_NOTHROW(validate_counting_measure(ok, 10.0));
    CHECK(average_digit(ok, 10.0) == doctest::Approx((0 * 2 + 1 * 3 + 2 * 5) / 10.0));
    CHECK_THROWS_AS(validate_counting_measure(ok, 11.0), DomainError);
    CHECK_THROWS_AS(validate_counting_measure(std::vector<double>{-1, 11}, 10.0), DomainError);
    CHECK_THROWS_AS(validate_counting_measure(std::vector<double>{}, 10.0), DomainError);

    PartitionEnsemble e{4, 10, 10};
    CHECK(e.mu() == 2.5);
}
