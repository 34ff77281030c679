#pragma once

#include "fracmem/series.hpp"
#include "fracmem/spectral.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fracmem::arfima {

/// Gaussian white noise: sigma * N(0, 1), fully determined by the seed.
struct NoiseSpec {
    double sigma = 1.0;
    std::uint64_t seed = 0;
};

/**
 * @brief Inverse standard normal CDF (Acklam's rational approximation,
 *        relative error below 1.15e-9).
 * @throws std::domain_error outside (0, 1).
 */
[[nodiscard]] double inverse_normal_cdf(double p);

/**
 * @brief n normal deviates with standard deviation spec.sigma.
 *
 * Uniforms come from std::mt19937_64 (whose output sequence is fixed by the
 * C++ standard) as (k + 0.5) 2^-53 with k the top 53 bits; each uniform is
 * mapped through inverse_normal_cdf. Identical specs give identical series on
 * every platform with an IEEE-754 libm.
 *
 * @throws std::invalid_argument for n == 0 or sigma <= 0.
 */
[[nodiscard]] Series white_noise(const NoiseSpec& spec, std::size_t n);

/// ARFIMA(p, d, q) simulation settings.
struct ArfimaSpec {
    double d = 0.0;
    std::vector<double> ar;  ///< phi_1..phi_p in y_t = sum phi_i y_{t-i} + u_t
    std::vector<double> ma;  ///< theta_1..theta_q in x_t = e_t + sum theta_j e_{t-j}
    std::size_t n = 0;
    std::size_t burn_in = 0;
    std::size_t truncation = 0;  ///< fractional filter length M

    /// @throws std::invalid_argument for |d| >= 1, n == 0, or an unstable AR polynomial.
    void validate() const;
};

/// Tolerance on AR root magnitudes.
inline constexpr double ar_root_tolerance = 1e-6;

/// Roots of z^p - phi_1 z^(p-1) - ... - phi_p, as complex values.
[[nodiscard]] std::vector<spectral::Complex> ar_characteristic_roots(std::span<const double> ar);

/// |d| < 0.5, where the ACF/spectrum power laws describe a stationary process.
[[nodiscard]] constexpr bool in_classical_stationary_range(double d) noexcept { return d > -0.5 && d < 0.5; }

/**
 * @brief white noise -> MA(q) -> (1 - L)^-d with truncation M -> AR(p); drop burn_in.
 *
 * With p = q = 0 and burn_in = 0, arfima_residuals(result, d, M) returns the
 * noise. The output's start is burn_in (unit step).
 */
[[nodiscard]] Series simulate_arfima(const ArfimaSpec& spec, const NoiseSpec& noise);

enum class MemoryClass { long_memory, short_memory, none };

[[nodiscard]] std::string_view to_string(MemoryClass c) noexcept;

struct MemoryEstimate {
    double d_hat = 0.0;
    double std_err = 0.0;
    std::size_t bandwidth = 0;
    std::size_t n = 0;
    MemoryClass classification = MemoryClass::none;
};

/// long if d_hat > 2 se, short if d_hat < -2 se, none otherwise.
[[nodiscard]] MemoryClass classify_memory(double d_hat, double std_err) noexcept;

/// Default bandwidth floor(sqrt(n)).
[[nodiscard]] std::size_t default_bandwidth(std::size_t n);

/**
 * @brief Log-periodogram regression of log S_j on -2 log omega_j, j = 1..bandwidth.
 *
 * @throws std::invalid_argument unless 3 <= bandwidth <= n/2.
 * @throws std::domain_error if a used periodogram value is zero.
 */
[[nodiscard]] MemoryEstimate estimate_memory(const Series& y, std::size_t bandwidth);

/// Same regression on precomputed periodogram points (n is the sample count behind them).
[[nodiscard]] MemoryEstimate estimate_memory(std::span<const spectral::PeriodogramPoint> points,
                                             std::size_t bandwidth, std::size_t n);

/// Default relative tail tolerance for theoretical_acf.
inline constexpr double acf_tail_tolerance = 5e-3;

/**
 * @brief gamma(k) = sigma^2 sum_{j=0}^{M} psi_j psi_{j+k} with psi the (1 - L)^-d weights.
 *
 * The neglected tail is estimated as |psi_M|^2 M / (1 - 2d) and must not
 * exceed tail_tolerance * gamma(0).
 *
 * @throws std::invalid_argument for |d| >= 0.5, sigma <= 0, truncation < 10 max_lag,
 *         or a tail estimate above tolerance.
 */
[[nodiscard]] std::vector<double> theoretical_acf(double d, double sigma, std::size_t max_lag,
                                                  std::size_t truncation,
                                                  double tail_tolerance = acf_tail_tolerance);

}  // namespace fracmem::arfima
