#pragma once

#include <cstdint>

namespace fracmem::specfun {

/**
 * @brief Euler gamma function for real arguments.
 *
 * Lanczos approximation (g = 7, nine terms) with the reflection formula for
 * x < 0.5. Small positive integers return the exact factorial.
 *
 * @throws std::domain_error at the poles x = 0, -1, -2, ...
 * @throws std::overflow_error when the result exceeds the double range.
 */
[[nodiscard]] double gamma(double x);

/// sin(pi*x) with exact zeros at integers and exact +-1 at half-integers.
[[nodiscard]] double sin_pi(double x);

/// cos(pi*x) with exact zeros at half-integers and exact +-1 at integers.
[[nodiscard]] double cos_pi(double x);

/// True when x is an integer value (finite, no fractional part).
[[nodiscard]] bool is_integer(double x) noexcept;

/**
 * @brief Generalized binomial coefficient C(d, m) for any real d.
 *
 * Uses the pole-free recurrence C(d,0) = 1, C(d,m) = C(d,m-1)*(d-m+1)/m, so
 * integer d with m > d yields an exact zero.
 */
[[nodiscard]] double gen_binomial(double d, std::uint64_t m);

/**
 * @brief C(d, m) through the gamma-function representation
 *        (-1)^(m-1) d Gamma(m-d) / (Gamma(1-d) Gamma(m+1)).
 *
 * Cross-check for gen_binomial; m = 0 returns 1 by convention.
 *
 * @throws std::domain_error when d is a nonnegative integer (gamma pole).
 */
[[nodiscard]] double gen_binomial_gamma_form(double d, std::uint64_t m);

/// Parameters of 1F2(a; b, c; z).
struct HypergeometricParams {
    double a = 0.0;
    double b = 1.0;
    double c = 1.0;

    /// @throws std::invalid_argument if b or c is zero or a negative integer.
    void validate() const;
};

/// Largest |z| accepted by hyp1f2 before cancellation ruins double precision.
inline constexpr double hyp1f2_z_max = 40.0;

/// Maximum number of series terms before hyp1f2 reports non-convergence.
inline constexpr int hyp1f2_term_cap = 10000;

/**
 * @brief Generalized hypergeometric function 1F2(a; b, c; z).
 *
 * Sums the power series with the term recurrence
 * t_{k+1} = t_k (a+k) z / ((b+k)(c+k)(k+1)) and Neumaier-compensated
 * accumulation. Stops once two consecutive terms fall below 1e-16 of the
 * partial sum (never before k = 8).
 *
 * @throws std::invalid_argument for invalid b or c.
 * @throws std::domain_error for |z| > hyp1f2_z_max.
 * @throws ConvergenceError when hyp1f2_term_cap terms are exceeded.
 */
[[nodiscard]] double hyp1f2(const HypergeometricParams& params, double z);

}  // namespace fracmem::specfun
