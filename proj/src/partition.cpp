#include "benford/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "benford/errors.hpp"
#include "benford/format.hpp"
#include "benford/magnitude.hpp"

namespace benford::partition {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be positive and finite, got " + format_real(v));
}

}  // namespace

BigUInt count_states(std::uint64_t n_components, std::uint64_t total_mass) {
    if (n_components == 0) throw DomainError("count_states: N must be >= 1");
    // C(N + E - 1, k) with k = min(E, N - 1); each partial product r * (top - i + 1) / i
    // is itself a binomial coefficient, so the division is exact.
    const std::uint64_t top = n_components + total_mass - 1;
    const std::uint64_t k = std::min(total_mass, n_components - 1);
    BigUInt r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        r.mul_small(top - k + i);
        r.divmod_small(i);
    }
    return r;
}

double log_states_exact(std::uint64_t n_components, std::uint64_t total_mass) {
    if (n_components == 0) throw DomainError("log_states_exact: N must be >= 1");
    if (total_mass == 0 || n_components == 1) return 0.0;
    const auto n = static_cast<long double>(n_components);
    const auto e = static_cast<long double>(total_mass);
    return static_cast<double>(std::lgamma(n + e) - std::lgamma(n) - std::lgamma(e + 1.0L));
}

double entropy_stirling(double n_components, double mu) {
    require_positive(n_components, "N");
    require_positive(mu, "mu");
    return n_components * ((1.0 + mu) * std::log1p(mu) - mu * std::log(mu));
}

double phi(double mu, double n_components, double beta) {
    require_positive(mu, "mu");
    require_positive(n_components, "N");
    require_positive(beta, "beta");
    return n_components / beta * std::log1p(1.0 / mu);
}

std::vector<double> benford_from_partition(std::uint32_t base_omega, double n_components,
                                           double beta) {
    check_base(base_omega);
    std::vector<double> p(base_omega - 1);
    for (std::uint32_t n = 1; n < base_omega; ++n) p[n - 1] = phi(n, n_components, beta);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& v : p) v /= total;
    return p;
}

double mean_phi(double n_components, double beta, std::uint32_t base_omega) {
    check_base(base_omega);
    double sum = 0.0;
    for (std::uint32_t m = 1; m < base_omega; ++m) sum += phi(m, n_components, beta);
    const double mean = sum / n_components;
    const double closed = std::log(static_cast<double>(base_omega)) / beta;
    if (std::abs(mean - closed) > 1e-12 * std::max(1.0, std::abs(closed)))
        throw std::logic_error("mean_phi: telescoping identity violated");
    return mean;
}

double entropy_rate_riemann_sum(double mu, std::uint64_t panels, double n_components,
                                double beta) {
    require_positive(mu, "mu");
    if (panels == 0) throw DomainError("Riemann sum needs at least one panel");
    const double step = mu / static_cast<double>(panels);
    double sum = 0.0;
    for (std::uint64_t i = 1; i <= panels; ++i)
        sum += phi(step * static_cast<double>(i), n_components, beta);
    return sum * step;
}

double entropy_rate_integral(double mu, double n_components, double beta) {
    require_positive(beta, "beta");
    return entropy_stirling(n_components, mu) / beta;
}

void validate_counting_measure(std::span<const double> phi_histogram, double n_components,
                               double tol) {
    require_positive(n_components, "N");
    if (phi_histogram.empty()) throw DomainError("counting measure over no digits");
    for (double v : phi_histogram)
        if (v < 0.0) throw DomainError("counting measure has a negative count");
    const double mass =
        std::accumulate(phi_histogram.begin(), phi_histogram.end(), 0.0) / n_components;
    if (std::abs(mass - 1.0) > tol)
        throw DomainError("counting measure sums to " + format_real(mass) + " of N, expected 1");
}

double average_digit(std::span<const double> phi_histogram, double n_components) {
    validate_counting_measure(phi_histogram, n_components);
    double weighted = 0.0;
    for (std::size_t sigma = 0; sigma < phi_histogram.size(); ++sigma)
        weighted += static_cast<double>(sigma) * phi_histogram[sigma];
    return weighted / n_components;
}

}  // namespace benford::partition
