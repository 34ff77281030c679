#pragma once

#include "fracmem/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

// Exact fractional differences: two-sided convolution with the kernel K_alpha(m)
// whose discrete-time Fourier transform is (i x)^alpha on x in (-pi, pi).
//
//   K_alpha(m) = cos(pi alpha / 2) K+(m) + sin(pi alpha / 2) K-(m)
//   K+(m) =  (1/pi) int_0^pi x^alpha cos(m x) dx
//         =  pi^alpha / (alpha+1) 1F2((alpha+1)/2; 1/2, (alpha+3)/2; -pi^2 m^2 / 4)
//   K-(m) = -(1/pi) int_0^pi x^alpha sin(m x) dx
//         = -pi^(alpha+1) m / (alpha+2) 1F2((alpha+2)/2; 3/2, (alpha+4)/2; -pi^2 m^2 / 4)
//
// The operator carries no step^alpha factor: the step only rescales the
// frequency axis of the response (i omega T)^alpha.

namespace fracmem::exactops {

/// Largest |m| evaluated through the hypergeometric series.
inline constexpr int series_max_abs_m = 4;

/// Allowed disagreement between the series and quadrature routes.
inline constexpr double overlap_tolerance = 1e-8;

/// Cosine- and sine-weighted halves of the kernel at one lag.
struct KernelParts {
    double plus = 0.0;   ///< K+(m), even in m
    double minus = 0.0;  ///< K-(m), odd in m

    /// cos(pi alpha/2) K+ + sin(pi alpha/2) K-
    [[nodiscard]] double combine(double order) const;
};

/// Kernel parts through the 1F2 series. Requires order > -1 and |m| <= 4.
[[nodiscard]] KernelParts exact_kernel_parts_series(double order, int m);

/// Kernel parts through oscillation-aligned Gauss-Legendre quadrature. Requires order > -1.
[[nodiscard]] KernelParts exact_kernel_parts_quadrature(double order, int m);

/**
 * @brief K_alpha(m) from the hypergeometric series.
 * @throws std::domain_error for order <= -1.
 * @throws std::out_of_range for |m| > 4 (use the quadrature route).
 */
[[nodiscard]] double exact_kernel_series(double order, int m);

/**
 * @brief K_alpha(m) as the inverse transform of (i x)^alpha on [-pi, pi].
 *
 * (1/pi) int_0^pi x^alpha [cos(mx) cos(pi alpha/2) - sin(mx) sin(pi alpha/2)] dx,
 * integrated with 20-point Gauss-Legendre panels on each half period pi/|m|.
 * For non-integer order the first panel is refined geometrically toward the
 * x^alpha endpoint singularity.
 *
 * @throws std::domain_error for order <= -1.
 */
[[nodiscard]] double exact_kernel_quadrature(double order, int m);

/// Truncated two-sided kernel K(-M)..K(M).
class KernelWindow {
public:
    KernelWindow(double order, std::size_t half_width, std::vector<double> weights);

    [[nodiscard]] double order() const noexcept { return order_; }
    [[nodiscard]] std::size_t half_width() const noexcept { return half_width_; }
    /// Weights in lag order m = -M..M.
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    /// Weight at lag m, |m| <= M.
    [[nodiscard]] double at(long m) const;
    /// Lag of weights()[0], i.e. -M.
    [[nodiscard]] long first_lag() const noexcept { return -static_cast<long>(half_width_); }

private:
    double order_;
    std::size_t half_width_;
    std::vector<double> weights_;
};

/**
 * @brief Build (or fetch from the process-wide cache) the window of half-width M.
 *
 * |m| <= 4 uses the series route and is cross-checked against quadrature;
 * larger lags use quadrature.
 *
 * @throws std::domain_error for order <= -1.
 * @throws std::invalid_argument for half_width == 0.
 * @throws ConsistencyError when the two routes disagree by more than overlap_tolerance.
 */
[[nodiscard]] KernelWindow exact_kernel_window(double order, std::size_t half_width);

/// Drop every cached window. Mainly for tests and long-running tools.
void clear_window_cache();

/// Number of distinct windows currently cached.
[[nodiscard]] std::size_t window_cache_size();

enum class Boundary { zero, periodic };

/**
 * @brief z_t = sum_{m=-M}^{M} K(m) y_{t-m}.
 *
 * Out-of-range samples are zero or wrap around, per `boundary`.
 *
 * @throws std::invalid_argument for an empty series.
 */
[[nodiscard]] Series exact_difference(const Series& y, const KernelWindow& window, Boundary boundary);

}  // namespace fracmem::exactops
