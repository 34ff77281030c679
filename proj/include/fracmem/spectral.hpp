#pragma once

#include "fracmem/exactops.hpp"
#include "fracmem/glops.hpp"
#include "fracmem/series.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Fourier conventions: yhat(omega) = sum_t y_t exp(-i omega t T), and an
// operator with lag weights K(m) has response H(omega T) = sum_m K(m) exp(-i omega T m).
// Under this convention the backward difference 1 - L responds as 1 - exp(-i omega T)
// and the exact fractional difference as (i omega T)^alpha.

namespace fracmem::spectral {

using Complex = std::complex<double>;

/// Discrete Fourier transform of a real series.
struct Spectrum {
    std::vector<double> frequencies;  ///< omega_j = 2 pi j / (N T), j = 0..N-1
    std::vector<Complex> values;      ///< yhat(omega_j)
    std::size_t original_length = 0;  ///< samples before zero-padding
    double step = 1.0;

    /// Transform length N (padded length when padding was applied).
    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

/// Series up to this length use the direct O(n^2) transform at exact length.
inline constexpr std::size_t direct_dft_max_length = 64;

/**
 * @brief Spectrum of y.
 *
 * n <= 64: direct transform at length n. Otherwise the series is zero-padded
 * to the next power of two and transformed with a radix-2 FFT.
 */
[[nodiscard]] Spectrum dft(const Series& y);

/// Direct O(n^2) transform at exact length; reference path.
[[nodiscard]] std::vector<Complex> direct_dft(std::span<const Complex> x, bool inverse = false);

/// In-place radix-2 transform; length must be a power of two. Inverse is unscaled.
void fft_radix2(std::vector<Complex>& x, bool inverse = false);

/// Inverse of dft(): the first original_length real samples.
[[nodiscard]] std::vector<double> inverse_dft(const Spectrum& spectrum);

struct PeriodogramPoint {
    double omega = 0.0;
    double power = 0.0;
};

/// Minimum series length accepted by periodogram().
inline constexpr std::size_t periodogram_min_length = 4;

/**
 * @brief S_j = |yhat(omega_j)|^2 / n after mean removal, for j = 1..floor(N/2).
 *
 * n is the original sample count; frequencies use the (possibly padded)
 * transform length N.
 *
 * @throws std::invalid_argument for fewer than 4 samples.
 */
[[nodiscard]] std::vector<PeriodogramPoint> periodogram(const Series& y);

/// Measured response against an analytic target.
struct ResponseSample {
    double omega_T = 0.0;
    Complex measured;
    Complex target;
    double abs_error = 0.0;
    double rel_error = 0.0;            ///< |measured - target| / max(|target|, floor)
    double magnitude_rel_error = 0.0;  ///< ||measured| - |target|| / max(|target|, floor)
};

/// Denominator floor in relative errors.
inline constexpr double rel_error_floor = 1e-300;

/// Fill target and error fields of a sample.
[[nodiscard]] ResponseSample with_target(ResponseSample sample, Complex target);

/**
 * @brief H(omega T) = sum_j weights[j] exp(-i omega T (first_lag + j)) by direct summation.
 *
 * Returned samples carry only omega_T and measured; target fields are NaN.
 *
 * @throws std::domain_error if a grid value lies outside (0, pi].
 */
[[nodiscard]] std::vector<ResponseSample> operator_response(std::span<const double> weights, long first_lag,
                                                            std::span<const double> grid);

[[nodiscard]] std::vector<ResponseSample> operator_response(const glops::GLCoefficients& coeffs,
                                                            std::span<const double> grid);

[[nodiscard]] std::vector<ResponseSample> operator_response(const exactops::KernelWindow& window,
                                                            std::span<const double> grid);

/**
 * @brief (1 - exp(-i omega T))^order on the principal branch,
 *        = (2 sin(omega T / 2))^order exp(i order (pi - omega T) / 2).
 *
 * @throws std::domain_error outside (0, pi], except omega_T = 0 for order >= 0.
 */
[[nodiscard]] Complex gl_response_target(double order, double omega_T);

enum class PhaseConvention {
    negative_exponent,  ///< exp(-i omega t) transform: (i omega T)^alpha, phase +pi alpha / 2
    positive_exponent,  ///< exp(+i omega t) transform: (-i omega T)^alpha, phase -pi alpha / 2
};

/**
 * @brief Power-law response (omega T)^order exp(+-i pi order / 2).
 * @throws std::domain_error for omega_T <= 0.
 */
[[nodiscard]] Complex power_law_target(double order, double omega_T,
                                       PhaseConvention convention = PhaseConvention::negative_exponent);

enum class OperatorFamily { gl, exact };

[[nodiscard]] std::string_view to_string(OperatorFamily family) noexcept;

struct ResponseReport {
    OperatorFamily family = OperatorFamily::gl;
    double order = 0.0;
    std::size_t truncation = 0;
    std::vector<ResponseSample> vs_power_law;  ///< against (i omega T)^order
    std::vector<ResponseSample> vs_gl_target;  ///< against (1 - exp(-i omega T))^order; gl family only
};

/**
 * @brief Response of the GL (truncation M) or exact (half-width M) operator on a grid.
 * @throws std::domain_error if a grid value lies outside (0, pi].
 */
[[nodiscard]] ResponseReport response_report(double order, OperatorFamily family, std::size_t truncation,
                                             std::span<const double> grid);

/// omega_T_j = pi j / count for j = 1..count.
[[nodiscard]] std::vector<double> uniform_grid(std::size_t count);

/// Evenly spaced grid on [lo, hi] inclusive, count >= 2.
[[nodiscard]] std::vector<double> linear_grid(double lo, double hi, std::size_t count);

/**
 * @brief Biased sample autocovariance (1/n) sum_t (y_t - ybar)(y_{t+k} - ybar), k = 0..max_lag.
 * @throws std::out_of_range if max_lag >= n.
 */
[[nodiscard]] std::vector<double> sample_autocovariance(const Series& y, std::size_t max_lag);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
};

/**
 * @brief Least-squares line through (log x, log y).
 * @throws std::invalid_argument for fewer than 3 points, mismatched lengths, or nonpositive values.
 */
[[nodiscard]] SlopeFit loglog_slope_fit(std::span<const double> xs, std::span<const double> ys);

/// Ordinary least squares y = intercept + slope x with the slope's standard error.
[[nodiscard]] SlopeFit linear_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace fracmem::spectral
