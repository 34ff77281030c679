#pragma once

#include "fracmem/series.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

// Grunwald-Letnikov fractional differences (1 - L)^alpha on sampled series.
//
// All operators use the zero pre-sample convention: values before the first
// sample are taken as zero. Negative orders give discrete fractional
// integration through the same code path.

namespace fracmem::glops {

/// Upper bound on the truncation accepted by the series operators.
inline constexpr std::size_t max_truncation = 1'000'000;

/// Causal weights c_0..c_M of (1 - L)^order, c_m = (-1)^m C(order, m).
class GLCoefficients {
public:
    GLCoefficients(double order, std::vector<double> coefficients);

    [[nodiscard]] double order() const noexcept { return order_; }
    [[nodiscard]] std::size_t truncation() const noexcept { return coefficients_.size() - 1; }
    [[nodiscard]] std::span<const double> coefficients() const noexcept { return coefficients_; }
    [[nodiscard]] double operator[](std::size_t m) const noexcept { return coefficients_[m]; }

private:
    double order_;
    std::vector<double> coefficients_;
};

/// c_0 = 1, c_m = c_{m-1} (m - 1 - order) / m for m = 1..truncation.
[[nodiscard]] GLCoefficients gl_coefficients(double order, std::size_t truncation);

/// Full linear convolution of two coefficient sequences, cut to `length` terms.
[[nodiscard]] std::vector<double> convolve_truncated(std::span<const double> a, std::span<const double> b,
                                                     std::size_t length);

/**
 * @brief z_t = sum_{m=0}^{min(t, M)} c_m y_{t-m}.
 *
 * Output keeps the step, start and length of `y`.
 *
 * @throws std::invalid_argument for an empty series or truncation > max_truncation.
 */
[[nodiscard]] Series gl_difference(const Series& y, double order, std::size_t truncation);

/// Same as gl_difference with precomputed weights.
[[nodiscard]] Series gl_difference(const Series& y, const GLCoefficients& coeffs);

/**
 * @brief Discrete fractional integration, i.e. gl_difference(y, -order, M).
 *
 * The MA weights psi_m = Gamma(m+order)/(Gamma(order) Gamma(m+1)) are positive
 * for 0 < order < 1.
 *
 * @throws std::invalid_argument when order <= 0.
 */
[[nodiscard]] Series fractional_integrate(const Series& y, double order, std::size_t truncation);

/// Recover the ARFIMA(0,d,0) driving noise: (1 - L)^d y_t.
[[nodiscard]] Series arfima_residuals(const Series& y, double d, std::size_t truncation);

/// Sampled function used by the derivative quotient.
using FunctionProvider = std::function<double(double)>;

/**
 * @brief Grunwald-Letnikov quotient step^-order * sum_{m=0}^{M} c_m f(t - m*step).
 *
 * Approaches the fractional derivative of order `order` as step -> 0.
 * Exceptions thrown by `f` propagate unchanged.
 *
 * @throws std::invalid_argument for step <= 0 or a non-finite sample of f.
 */
[[nodiscard]] double gl_derivative_approx(const FunctionProvider& f, double order, double t, double step,
                                          std::size_t truncation);

}  // namespace fracmem::glops
