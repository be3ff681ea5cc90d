#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "benford/big_uint.hpp"

namespace benford::partition {

/// An N-component nonnegative integer vector with fixed total E; mu = E / N.
struct PartitionEnsemble {
    std::uint64_t n_components = 1;
    std::uint64_t total_mass = 0;
    std::uint32_t base_omega = 10;

    double mu() const noexcept {
        return static_cast<double>(total_mass) / static_cast<double>(n_components);
    }
};

/// Lambda(N, E) = C(N + E - 1, E), exact. Components are not capped at base - 1.
BigUInt count_states(std::uint64_t n_components, std::uint64_t total_mass);

/// ln Lambda(N, E) through log-gamma.
double log_states_exact(std::uint64_t n_components, std::uint64_t total_mass);

/// Stirling form N((1 + mu) ln(1 + mu) - mu ln mu).
double entropy_stirling(double n_components, double mu);

/// Stationary digit density (N / beta) ln(1 + 1/mu) of the constrained
/// Lagrangian; equals (1/beta) dS/dmu of entropy_stirling.
double phi(double mu, double n_components, double beta);

/// phi(n) / sum phi over n = 1..base-1. N and beta cancel.
std::vector<double> benford_from_partition(std::uint32_t base_omega, double n_components = 1.0,
                                           double beta = 1.0);

/// (1/N) sum_{mu=1}^{base-1} phi(mu, N, beta). Throws std::logic_error if it
/// strays from (1/beta) ln(base) by more than 1e-12 relative.
double mean_phi(double n_components, double beta, std::uint32_t base_omega);

/// Left-open Riemann sum (1/N) sum_{i=1}^{N} mu phi(i mu / N) of the closed-form
/// phi; converges to the integral of phi over (0, mu] as N grows.
double entropy_rate_riemann_sum(double mu, std::uint64_t panels, double n_components,
                                double beta);

/// Closed-form integral of phi over (0, mu]: (N/beta)((1+mu)ln(1+mu) - mu ln mu).
double entropy_rate_integral(double mu, double n_components, double beta);

/// Checks that a discrete digit histogram phi(sigma), sigma = 0..base-1, is a
/// counting measure over N components: (1/N) sum phi = 1 within `tol`.
/// Throws DomainError otherwise.
void validate_counting_measure(std::span<const double> phi_histogram, double n_components,
                               double tol = 1e-9);

/// Average digit (1/N) sum sigma phi(sigma) of a validated histogram.
double average_digit(std::span<const double> phi_histogram, double n_components);

}  // namespace benford::partition
