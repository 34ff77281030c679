#include "fracmem/arfima.hpp"

#include "fracmem/glops.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace fracmem::arfima {
namespace {

constexpr std::array<double, 6> acklam_a = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                            1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> acklam_b = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                            6.680131188771972e+01, -1.328068155288572e+01};
constexpr std::array<double, 6> acklam_c = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                            -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr std::array<double, 4> acklam_d = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                            3.754408661907416e+00};
constexpr double acklam_p_low = 0.02425;

double tail_quantile(double q) {
    // lower tail; q = sqrt(-2 log p)
    const auto& c = acklam_c;
    const auto& d = acklam_d;
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_normal_cdf: p must lie in (0, 1)");
    if (p < acklam_p_low) return tail_quantile(std::sqrt(-2.0 * std::log(p)));
    if (p > 1.0 - acklam_p_low) return -tail_quantile(std::sqrt(-2.0 * std::log1p(-p)));
    const auto& a = acklam_a;
    const auto& b = acklam_b;
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

Series white_noise(const NoiseSpec& spec, std::size_t n) {
    if (n == 0) throw std::invalid_argument("white_noise: n must be at least 1");
    if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
        throw std::invalid_argument("white_noise: sigma must be positive");
    }
    std::mt19937_64 engine(spec.seed);
    constexpr double scale = 0x1.0p-53;
    std::vector<double> v(n);
    for (auto& x : v) {
        const double u = (static_cast<double>(engine() >> 11) + 0.5) * scale;
        x = spec.sigma * inverse_normal_cdf(u);
    }
    return Series(std::move(v));
}

std::vector<spectral::Complex> ar_characteristic_roots(std::span<const double> ar) {
    const auto p = static_cast<Eigen::Index>(ar.size());
    if (p == 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index j = 0; j < p; ++j) companion(0, j) = ar[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("ar_characteristic_roots: eigen solver failed");
    std::vector<spectral::Complex> roots(static_cast<std::size_t>(p));
    for (Eigen::Index i = 0; i < p; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

void ArfimaSpec::validate() const {
    if (!(std::abs(d) < 1.0)) throw std::invalid_argument("arfima: |d| must be < 1, got " + std::to_string(d));
    if (n == 0) throw std::invalid_argument("arfima: n must be at least 1");
    if (truncation > glops::max_truncation) throw std::invalid_argument("arfima: truncation too large");
    for (double v : ar) {
        if (!std::isfinite(v)) throw std::invalid_argument("arfima: non-finite AR coefficient");
    }
    for (double v : ma) {
        if (!std::isfinite(v)) throw std::invalid_argument("arfima: non-finite MA coefficient");
    }
    for (const auto& r : ar_characteristic_roots(ar)) {
        if (!(std::abs(r) < 1.0 - ar_root_tolerance)) {
            throw std::invalid_argument("arfima: unstable AR polynomial (root magnitude " +
                                        std::to_string(std::abs(r)) + ")");
        }
    }
}

Series simulate_arfima(const ArfimaSpec& spec, const NoiseSpec& noise) {
    spec.validate();
    const std::size_t total = spec.n + spec.burn_in;
    const Series eps = white_noise(noise, total);

    std::vector<double> x(total);
    for (std::size_t t = 0; t < total; ++t) {
        double s = eps.values[t];
        for (std::size_t j = 1; j <= spec.ma.size() && j <= t; ++j) s += spec.ma[j - 1] * eps.values[t - j];
        x[t] = s;
    }

    std::vector<double> u = std::move(x);
    if (spec.d != 0.0) u = glops::gl_difference(Series(std::move(u)), -spec.d, spec.truncation).values;

    std::vector<double> y(total);
    for (std::size_t t = 0; t < total; ++t) {
        double s = u[t];
        for (std::size_t i = 1; i <= spec.ar.size() && i <= t; ++i) s += spec.ar[i - 1] * y[t - i];
        y[t] = s;
    }
    std::vector<double> kept(y.begin() + static_cast<std::ptrdiff_t>(spec.burn_in), y.end());
    return Series(std::move(kept), 1.0, static_cast<double>(spec.burn_in));
}

std::string_view to_string(MemoryClass c) noexcept {
    switch (c) {
        case MemoryClass::long_memory: return "long";
        case MemoryClass::short_memory: return "short";
        case MemoryClass::none: break;
    }
    return "none";
}

MemoryClass classify_memory(double d_hat, double std_err) noexcept {
    const double threshold = 2.0 * std_err;
    if (d_hat > threshold) return MemoryClass::long_memory;
    if (d_hat < -threshold) return MemoryClass::short_memory;
    return MemoryClass::none;
}

std::size_t default_bandwidth(std::size_t n) {
    auto b = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    while ((b + 1) * (b + 1) <= n) ++b;
    while (b * b > n) --b;
    return b;
}

MemoryEstimate estimate_memory(std::span<const spectral::PeriodogramPoint> points, std::size_t bandwidth,
                               std::size_t n) {
    if (bandwidth < 3 || bandwidth > n / 2 || bandwidth > points.size()) {
        throw std::invalid_argument("estimate_memory: bandwidth " + std::to_string(bandwidth) +
                                    " outside [3, n/2] for n = " + std::to_string(n));
    }
    std::vector<double> xs(bandwidth);
    std::vector<double> ys(bandwidth);
    for (std::size_t j = 0; j < bandwidth; ++j) {
        const auto& p = points[j];
        if (!(p.power > 0.0)) {
            throw std::domain_error("estimate_memory: zero periodogram value at frequency index " +
                                    std::to_string(j + 1));
        }
        xs[j] = -2.0 * std::log(p.omega);
        ys[j] = std::log(p.power);
    }
    const auto fit = spectral::linear_fit(xs, ys);
    MemoryEstimate est;
    est.d_hat = fit.slope;
    // an exact power law leaves zero residual; keep the standard error strictly positive
    est.std_err = std::max(fit.stderr_slope, std::numeric_limits<double>::min());
    est.bandwidth = bandwidth;
    est.n = n;
    est.classification = classify_memory(est.d_hat, est.std_err);
    return est;
}

MemoryEstimate estimate_memory(const Series& y, std::size_t bandwidth) {
    const std::size_t n = y.size();
    if (bandwidth < 3 || bandwidth > n / 2) {
        throw std::invalid_argument("estimate_memory: bandwidth " + std::to_string(bandwidth) +
                                    " outside [3, n/2] for n = " + std::to_string(n));
    }
    const auto points = spectral::periodogram(y);
    return estimate_memory(points, bandwidth, n);
}

std::vector<double> theoretical_acf(double d, double sigma, std::size_t max_lag, std::size_t truncation,
                                    double tail_tolerance) {
    if (!(std::abs(d) < 0.5)) throw std::invalid_argument("theoretical_acf: |d| must be < 0.5");
    if (!(sigma > 0.0)) throw std::invalid_argument("theoretical_acf: sigma must be positive");
    if (truncation < 10 * max_lag || truncation == 0) {
        throw std::invalid_argument("theoretical_acf: truncation must be at least 10 * max_lag");
    }
    // psi_j = (-1)^j C(-d, j), the (1 - L)^-d weights
    const auto psi = glops::gl_coefficients(-d, truncation + max_lag);
    std::vector<double> gamma(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= truncation; ++j) s += psi[j] * psi[j + k];
        gamma[k] = sigma * sigma * s;
    }
    const double psi_m = psi[truncation];
    const double tail = sigma * sigma * psi_m * psi_m * static_cast<double>(truncation) / (1.0 - 2.0 * d);
    if (tail > tail_tolerance * gamma[0]) {
        throw std::invalid_argument("theoretical_acf: truncation too small (tail estimate " + std::to_string(tail) +
                                    " exceeds " + std::to_string(tail_tolerance) + " of gamma(0))");
    }
    return gamma;
}

}  // namespace fracmem::arfima
