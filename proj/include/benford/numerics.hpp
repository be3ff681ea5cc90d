#pragma once

#include <cstddef>
#include <cstdint>

namespace benford {

/// Parameters of the halting binary emitter.
///
/// `p_halt` is the per-step stop probability; the two bit symbols share the
/// remaining mass equally. `lambda` and `n_scale` record the max-entropy
/// parameterization the probabilities came from (for directly constructed
/// params, `lambda` is back-solved as (1 - p_halt)^n_scale).
struct ModelParams {
    double lambda = 0.0;
    std::uint32_t n_scale = 1;
    double p_halt = 1.0;
    double p_zero = 0.0;
    double p_one = 0.0;

    /// Builds params from a halting probability in (0, 1]. p_halt == 1 is the
    /// degenerate always-"1" emitter and is only reachable through here.
    static ModelParams from_halt(double p_halt, std::uint32_t n_scale = 1);

    /// Throws DomainError unless the probabilities are consistent.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// (1 - u)^(1/u) on (0, 1], patched to e^-1 for u below 1e-15.
double integrand(double u);

struct QuadratureOptions {
    std::size_t max_subdivisions = 2000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t intervals = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of `integrand` over [0, 1].
/// Throws ConvergenceError if the subdivision budget runs out first.
QuadratureResult integrate_lambda(double abs_tol, QuadratureOptions opts = {});

/// The auxiliary constant: integral of (1-u)^(1/u) over [0,1].
double compute_lambda_star(double abs_tol);

/// lambda* at 1e-13 absolute tolerance, computed once per process.
double lambda_star();

/// p_halt = 1 - lambda^(1/n), p_zero = p_one = lambda^(1/n) / 2.
ModelParams maxent_params(double lambda, std::uint32_t n_scale);

/// F(k) = 1 - (1 - p_halt)^k.
double cdf_halt(const ModelParams& params, std::uint64_t k);

}  // namespace benford
