#include "benford/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "benford/errors.hpp"

namespace benford {

namespace {

// Gauss-Kronrod 15-point abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss 7-point weights for the odd-indexed Kronrod nodes.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEndpointPatch = 1e-15;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = integrand(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        // integrand() handles the u -> 0 patch; clamp keeps the argument in range.
        const double lo = std::clamp(center - dx, 0x1p-1074, 1.0);
        const double hi = std::clamp(center + dx, 0x1p-1074, 1.0);
        const double sum = integrand(lo) + integrand(hi);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

ModelParams ModelParams::from_halt(double p_halt, std::uint32_t n_scale) {
    if (!(p_halt > 0.0 && p_halt <= 1.0))
        throw DomainError("p_halt must lie in (0, 1], got " + std::to_string(p_halt));
    if (n_scale == 0) throw DomainError("n_scale must be positive");
    ModelParams p;
    p.p_halt = p_halt;
    p.p_zero = p.p_one = 0.5 * (1.0 - p_halt);
    p.n_scale = n_scale;
    p.lambda = static_cast<double>(
        std::pow(1.0L - static_cast<long double>(p_halt), static_cast<long double>(n_scale)));
    return p;
}

void ModelParams::validate() const {
    if (!(p_halt > 0.0 && p_halt <= 1.0)) throw DomainError("p_halt outside (0, 1]");
    if (p_zero < 0.0 || p_one < 0.0) throw DomainError("negative bit probability");
    if (p_zero != p_one) throw DomainError("bit probabilities must be symmetric");
    if (std::abs(p_zero + p_one + p_halt - 1.0) > 4 * std::numeric_limits<double>::epsilon())
        throw DomainError("symbol probabilities do not sum to 1");
    if (n_scale == 0) throw DomainError("n_scale must be positive");
}

double integrand(double u) {
    if (!(u > 0.0) || u > 1.0)
        throw DomainError("integrand defined on (0, 1], got " + std::to_string(u));
    if (u < kEndpointPatch) return std::exp(-1.0);
    if (u == 1.0) return 0.0;
    return std::exp(std::log1p(-u) / u);
}

QuadratureResult integrate_lambda(double abs_tol, QuadratureOptions opts) {
    if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");

    std::priority_queue<Panel> panels;
    panels.push(gauss_kronrod(0.0, 1.0));
    double total = panels.top().value;
    double error = panels.top().error;

    while (error > abs_tol) {
        if (panels.size() >= opts.max_subdivisions)
            throw ConvergenceError("lambda quadrature: subdivision budget of " +
                                   std::to_string(opts.max_subdivisions) + " exhausted");
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(worst.a, mid);
        const Panel right = gauss_kronrod(mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift from incremental updates.
    QuadratureResult r;
    r.intervals = panels.size();
    std::vector<Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : all) {
        r.value += p.value;
        r.abs_error += p.error;
    }
    return r;
}

double compute_lambda_star(double abs_tol) { return integrate_lambda(abs_tol).value; }

double lambda_star() {
    static const double value = compute_lambda_star(1e-13);
    return value;
}

ModelParams maxent_params(double lambda, std::uint32_t n_scale) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw DomainError("lambda must lie in (0, 1), got " + std::to_string(lambda));
    if (n_scale == 0) throw DomainError("n_scale must be positive");
    const long double log_root = std::log(static_cast<long double>(lambda)) / n_scale;
    ModelParams p;
    p.lambda = lambda;
    p.n_scale = n_scale;
    p.p_halt = static_cast<double>(-std::expm1(log_root));
    p.p_zero = p.p_one = static_cast<double>(std::exp(log_root) / 2);
    return p;
}

double cdf_halt(const ModelParams& params, std::uint64_t k) {
    if (k == 0) throw DomainError("cdf_halt requires k >= 1");
    if (params.p_halt >= 1.0) return 1.0;
    const long double log_keep = std::log1p(-static_cast<long double>(params.p_halt));
    return static_cast<double>(-std::expm1(static_cast<long double>(k) * log_keep));
}

}  // namespace benford
