#include "fracmem/glops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracmem::glops {

GLCoefficients::GLCoefficients(double order, std::vector<double> coefficients)
    : order_(order), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("GLCoefficients: need at least c_0");
}

GLCoefficients gl_coefficients(double order, std::size_t truncation) {
    if (!std::isfinite(order)) throw std::invalid_argument("gl_coefficients: order must be finite");
    std::vector<double> c(truncation + 1);
    c[0] = 1.0;
    for (std::size_t m = 1; m <= truncation; ++m) {
        const double md = static_cast<double>(m);
        c[m] = c[m - 1] * (md - 1.0 - order) / md;
    }
    return GLCoefficients(order, std::move(c));
}

std::vector<double> convolve_truncated(std::span<const double> a, std::span<const double> b, std::size_t length) {
    std::vector<double> out(length, 0.0);
    for (std::size_t i = 0; i < a.size() && i < length; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < length; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series gl_difference(const Series& y, const GLCoefficients& coeffs) {
    y.validate();
    if (coeffs.truncation() > max_truncation) {
        throw std::invalid_argument("gl_difference: truncation exceeds " + std::to_string(max_truncation));
    }
    const auto c = coeffs.coefficients();
    const std::size_t n = y.size();
    std::vector<double> z(n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t mmax = std::min(t, coeffs.truncation());
        double s = 0.0;
        for (std::size_t m = 0; m <= mmax; ++m) s += c[m] * y.values[t - m];
        z[t] = s;
    }
    return y.with_values(std::move(z));
}

Series gl_difference(const Series& y, double order, std::size_t truncation) {
    if (y.empty()) throw std::invalid_argument("gl_difference: empty series");
    if (truncation > max_truncation) {
        throw std::invalid_argument("gl_difference: truncation exceeds " + std::to_string(max_truncation));
    }
    // weights past the last sample never contribute
    const std::size_t effective = std::min(truncation, y.size() - 1);
    return gl_difference(y, gl_coefficients(order, effective));
}

Series fractional_integrate(const Series& y, double order, std::size_t truncation) {
    if (!(order > 0.0)) {
        throw std::invalid_argument("fractional_integrate: order must be > 0, got " + std::to_string(order));
    }
    return gl_difference(y, -order, truncation);
}

Series arfima_residuals(const Series& y, double d, std::size_t truncation) {
    return gl_difference(y, d, truncation);
}

double gl_derivative_approx(const FunctionProvider& f, double order, double t, double step, std::size_t truncation) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("gl_derivative_approx: step must be positive");
    }
    if (truncation > max_truncation) {
        throw std::invalid_argument("gl_derivative_approx: truncation exceeds " + std::to_string(max_truncation));
    }
    const auto coeffs = gl_coefficients(order, truncation);
    double s = 0.0;
    for (std::size_t m = 0; m <= truncation; ++m) {
        const double v = f(t - static_cast<double>(m) * step);
        if (!std::isfinite(v)) {
            throw std::invalid_argument("gl_derivative_approx: provider returned a non-finite value at m = " +
                                        std::to_string(m));
        }
        s += coeffs[m] * v;
    }
    return s / std::pow(step, order);
}

}  // namespace fracmem::glops
