#include "fracmem/spectral.hpp"

#include "fracmem/specfun.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracmem::spectral {
namespace {

using std::numbers::pi;

void check_grid(std::span<const double> grid) {
    for (double w : grid) {
        if (!(w > 0.0 && w <= pi)) {
            throw std::domain_error("response grid value " + std::to_string(w) + " outside (0, pi]");
        }
    }
}

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

std::vector<Complex> direct_dft(std::span<const Complex> x, bool inverse) {
    const std::size_t n = x.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex s{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t) {
            // reduce j*t mod n so the angle stays in [0, 2 pi)
            const double angle = 2.0 * pi * static_cast<double>((j * t) % n) / static_cast<double>(n);
            s += x[t] * Complex(std::cos(angle), sign * std::sin(angle));
        }
        out[j] = s;
    }
    return out;
}

void fft_radix2(std::vector<Complex>& x, bool inverse) {
    const std::size_t n = x.size();
    if (n == 0 || !std::has_single_bit(n)) throw std::invalid_argument("fft_radix2: length must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Complex> twiddle(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        twiddle[k] = Complex(std::cos(angle), sign * std::sin(angle));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = x[i + k];
                const Complex v = x[i + k + len / 2] * twiddle[k * stride];
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
            }
        }
    }
}

Spectrum dft(const Series& y) {
    y.validate();
    const std::size_t n = y.size();
    Spectrum spec;
    spec.original_length = n;
    spec.step = y.step;
    if (n <= direct_dft_max_length) {
        std::vector<Complex> x(y.values.begin(), y.values.end());
        spec.values = direct_dft(x);
    } else {
        std::vector<Complex> x(std::bit_ceil(n), Complex{0.0, 0.0});
        std::copy(y.values.begin(), y.values.end(), x.begin());
        fft_radix2(x);
        spec.values = std::move(x);
    }
    const std::size_t N = spec.values.size();
    spec.frequencies.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
        spec.frequencies[j] = 2.0 * pi * static_cast<double>(j) / (static_cast<double>(N) * y.step);
    }
    return spec;
}

std::vector<double> inverse_dft(const Spectrum& spectrum) {
    const std::size_t N = spectrum.size();
    std::vector<Complex> x;
    if (std::has_single_bit(N) && N > direct_dft_max_length) {
        x = spectrum.values;
        fft_radix2(x, true);
    } else {
        x = direct_dft(spectrum.values, true);
    }
    std::vector<double> out(spectrum.original_length);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = x[t].real() / static_cast<double>(N);
    return out;
}

std::vector<PeriodogramPoint> periodogram(const Series& y) {
    if (y.size() < periodogram_min_length) {
        throw std::invalid_argument("periodogram: need at least 4 samples, got " + std::to_string(y.size()));
    }
    const double mu = mean_of(y.values);
    std::vector<double> centered(y.values);
    for (double& v : centered) v -= mu;
    const Spectrum spec = dft(y.with_values(std::move(centered)));
    const double n = static_cast<double>(y.size());
    std::vector<PeriodogramPoint> out;
    out.reserve(spec.size() / 2);
    for (std::size_t j = 1; j <= spec.size() / 2; ++j) {
        out.push_back({spec.frequencies[j], std::norm(spec.values[j]) / n});
    }
    return out;
}

ResponseSample with_target(ResponseSample sample, Complex target) {
    sample.target = target;
    const double denom = std::max(std::abs(target), rel_error_floor);
    sample.abs_error = std::abs(sample.measured - target);
    sample.rel_error = sample.abs_error / denom;
    sample.magnitude_rel_error = std::abs(std::abs(sample.measured) - std::abs(target)) / denom;
    return sample;
}

std::vector<ResponseSample> operator_response(std::span<const double> weights, long first_lag,
                                              std::span<const double> grid) {
    check_grid(grid);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ResponseSample> out;
    out.reserve(grid.size());
    for (double w : grid) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t j = 0; j < weights.size(); ++j) {
            const double angle = w * static_cast<double>(first_lag + static_cast<long>(j));
            re += weights[j] * std::cos(angle);
            im -= weights[j] * std::sin(angle);
        }
        ResponseSample s;
        s.omega_T = w;
        s.measured = Complex(re, im);
        s.target = Complex(nan, nan);
        s.abs_error = s.rel_error = s.magnitude_rel_error = nan;
        out.push_back(s);
    }
    return out;
}

std::vector<ResponseSample> operator_response(const glops::GLCoefficients& coeffs, std::span<const double> grid) {
    return operator_response(coeffs.coefficients(), 0, grid);
}

std::vector<ResponseSample> operator_response(const exactops::KernelWindow& window, std::span<const double> grid) {
    return operator_response(window.weights(), window.first_lag(), grid);
}

Complex gl_response_target(double order, double omega_T) {
    if (omega_T == 0.0) {
        if (order < 0.0) throw std::domain_error("gl_response_target: omega_T = 0 is a pole for negative order");
        return order == 0.0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    if (!(omega_T > 0.0 && omega_T <= pi)) {
        throw std::domain_error("gl_response_target: omega_T must lie in (0, pi]");
    }
    // 1 - exp(-i w) = 2 sin(w/2) exp(i (pi - w) / 2)
    const double magnitude = std::pow(2.0 * std::sin(0.5 * omega_T), order);
    return std::polar(magnitude, 0.5 * order * (pi - omega_T));
}

Complex power_law_target(double order, double omega_T, PhaseConvention convention) {
    if (!(omega_T > 0.0) || !std::isfinite(omega_T)) {
        throw std::domain_error("power_law_target: omega_T must be positive");
    }
    const double magnitude = std::pow(omega_T, order);
    const double sign = convention == PhaseConvention::negative_exponent ? 1.0 : -1.0;
    // exact phase factors at integer orders
    return magnitude * Complex(specfun::cos_pi(0.5 * order), sign * specfun::sin_pi(0.5 * order));
}

std::string_view to_string(OperatorFamily family) noexcept {
    return family == OperatorFamily::gl ? "gl" : "exact";
}

ResponseReport response_report(double order, OperatorFamily family, std::size_t truncation,
                               std::span<const double> grid) {
    check_grid(grid);
    ResponseReport report;
    report.family = family;
    report.order = order;
    report.truncation = truncation;

    std::vector<ResponseSample> measured;
    if (family == OperatorFamily::gl) {
        measured = operator_response(glops::gl_coefficients(order, truncation), grid);
    } else {
        measured = operator_response(exactops::exact_kernel_window(order, truncation), grid);
    }
    report.vs_power_law.reserve(measured.size());
    for (const auto& s : measured) {
        report.vs_power_law.push_back(with_target(s, power_law_target(order, s.omega_T)));
        if (family == OperatorFamily::gl) {
            report.vs_gl_target.push_back(with_target(s, gl_response_target(order, s.omega_T)));
        }
    }
    return report;
}

std::vector<double> uniform_grid(std::size_t count) {
    std::vector<double> g(count);
    for (std::size_t j = 0; j < count; ++j) g[j] = pi * static_cast<double>(j + 1) / static_cast<double>(count);
    if (count > 0) g.back() = pi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    if (count < 2) throw std::invalid_argument("linear_grid: need at least two points");
    std::vector<double> g(count);
    for (std::size_t j = 0; j < count; ++j) {
        g[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(count - 1);
    }
    g.back() = hi;
    return g;
}

std::vector<double> sample_autocovariance(const Series& y, std::size_t max_lag) {
    y.validate();
    const std::size_t n = y.size();
    if (max_lag >= n) {
        throw std::out_of_range("sample_autocovariance: max_lag " + std::to_string(max_lag) +
                                " must be below the series length " + std::to_string(n));
    }
    const double mu = mean_of(y.values);
    std::vector<double> acov(max_lag + 1);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) s += (y.values[t] - mu) * (y.values[t + k] - mu);
        acov[k] = s / static_cast<double>(n);
    }
    return acov;
}

SlopeFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("linear_fit: xs and ys differ in length");
    if (xs.size() < 3) throw std::invalid_argument("linear_fit: need at least 3 points");
    const double n = static_cast<double>(xs.size());
    const double xbar = mean_of(xs);
    const double ybar = mean_of(ys);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("linear_fit: all x values coincide");
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - fit.intercept - fit.slope * xs[i];
        ssr += r * r;
    }
    fit.stderr_slope = std::sqrt(ssr / (n - 2.0) / sxx);
    return fit;
}

SlopeFit loglog_slope_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("loglog_slope_fit: xs and ys differ in length");
    if (xs.size() < 3) throw std::invalid_argument("loglog_slope_fit: need at least 3 points");
    std::vector<double> lx(xs.size());
    std::vector<double> ly(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            throw std::invalid_argument("loglog_slope_fit: nonpositive value at index " + std::to_string(i));
        }
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    return linear_fit(lx, ly);
}

}  // namespace fracmem::spectral
