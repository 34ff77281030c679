#include "fracmem/errors.hpp"
#include "fracmem/exactops.hpp"
#include "fracmem/specfun.hpp"
#include "fracmem/spectral.hpp"
#include "test_util.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

using namespace fracmem;
using namespace fracmem::exactops;

namespace {

constexpr double pi = std::numbers::pi;

// (1/pi) int_0^pi x^a (cos(pi a/2) cos(mx) - sin(pi a/2) sin(mx)) dx, one
// tanh-sinh integral per half-period so each piece is non-oscillatory.
double kernel_reference(double a, int m) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double ca = std::cos(pi * a / 2), sa = std::sin(pi * a / 2);
    const auto f = [&](double x) { return std::pow(x, a) * (ca * std::cos(m * x) - sa * std::sin(m * x)); };
    const int pieces = std::max(1, 2 * std::abs(m));
    double total = 0.0;
    for (int p = 0; p < pieces; ++p) total += integrator.integrate(f, pi * p / pieces, pi * (p + 1) / pieces);
    return total / pi;
}

double alpha1(int m) { return m == 0 ? 0.0 : ((m % 2 == 0) ? 1.0 : -1.0) / m; }
double alpha2(int m) { return m == 0 ? -pi * pi / 3.0 : -2.0 * ((m % 2 == 0) ? 1.0 : -1.0) / (double(m) * m); }

}  // namespace

TEST_CASE("series kernel at m = 0") {
    const double expected = std::cos(pi / 4) * std::sqrt(pi) / 1.5;
    CHECK(expected == doctest::Approx(0.8355427582).epsilon(1e-10));
    CHECK(exact_kernel_series(0.5, 0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(std::abs(exact_kernel_series(1.0, 0)) <= 1e-15);
    CHECK(exact_kernel_series(1.0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(exact_kernel_series(0.0, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("kernel errors") {
    CHECK_THROWS_AS((void)exact_kernel_series(-1.0, 0), std::domain_error);
    CHECK_THROWS_AS((void)exact_kernel_series(-1.5, 2), std::domain_error);
    CHECK_THROWS_AS((void)exact_kernel_series(0.5, 5), std::out_of_range);
    CHECK_THROWS_AS((void)exact_kernel_series(0.5, -5), std::out_of_range);
    CHECK_THROWS_AS((void)exact_kernel_quadrature(-1.0, 3), std::domain_error);
    CHECK_THROWS_AS((void)exact_kernel_window(-1.0, 3), std::domain_error);
    CHECK_THROWS_AS((void)exact_kernel_window(0.5, 0), std::invalid_argument);
    const auto w = exact_kernel_window(1.0, 3);
    CHECK_THROWS_AS((void)w.at(4), std::out_of_range);
    CHECK_THROWS_AS((void)w.at(-4), std::out_of_range);
    CHECK_THROWS_AS((void)exact_difference(Series{}, w, Boundary::zero), std::invalid_argument);
}

TEST_CASE("quadrature closed forms at integer orders") {
    CHECK(exact_kernel_quadrature(2.0, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(exact_kernel_quadrature(2.0, 2) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(exact_kernel_quadrature(2.0, 0) == doctest::Approx(-3.28986813369645).epsilon(1e-12));
    CHECK(exact_kernel_quadrature(1.0, 3) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    for (int m = -40; m <= 40; ++m) {
        CAPTURE(m);
        CHECK(std::abs(exact_kernel_quadrature(1.0, m) - alpha1(m)) <= 1e-12);
        CHECK(std::abs(exact_kernel_quadrature(2.0, m) - alpha2(m)) <= 1e-11);
    }
}

TEST_CASE("series and quadrature agree on the overlap") {
    for (double a : {-0.9, -0.5, -0.2, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 2.7}) {
        for (int m = -4; m <= 4; ++m) {
            CAPTURE(a);
            CAPTURE(m);
            CHECK(std::abs(exact_kernel_series(a, m) - exact_kernel_quadrature(a, m)) <= 1e-8);
            const auto s = exact_kernel_parts_series(a, m);
            const auto q = exact_kernel_parts_quadrature(a, m);
            CHECK(std::abs(s.plus - q.plus) <= 1e-8);
            CHECK(std::abs(s.minus - q.minus) <= 1e-8);
        }
    }
}

TEST_CASE("quadrature matches an independent tanh-sinh integration") {
    for (double a : {-0.5, 0.3, 0.5, 1.5}) {
        for (int m : {0, 1, 3, 7, 10, 33, 100}) {
            CAPTURE(a);
            CAPTURE(m);
            CHECK(std::abs(exact_kernel_quadrature(a, m) - kernel_reference(a, m)) <= 1e-10);
        }
    }
}

TEST_CASE("kernel parts have fixed parity") {
    for (double a : {-0.5, 0.5, 1.5}) {
        for (int m = 1; m <= 12; ++m) {
            const auto p = exact_kernel_parts_quadrature(a, m);
            const auto q = exact_kernel_parts_quadrature(a, -m);
            CHECK(p.plus == q.plus);
            CHECK(p.minus == -q.minus);
        }
        const auto w = exact_kernel_window(a, 40);
        for (long m = 0; m <= 40; ++m) {
            const double plus = exact_kernel_parts_quadrature(a, static_cast<int>(m)).plus;
            CHECK(std::abs(w.at(m) + w.at(-m) - 2.0 * specfun::cos_pi(a / 2) * plus) <= 1e-10);
        }
    }
}

TEST_CASE("window examples") {
    const auto w1 = exact_kernel_window(1.0, 3);
    const std::vector<double> expected1{1.0 / 3, -0.5, 1.0, 0.0, -1.0, 0.5, -1.0 / 3};
    REQUIRE(w1.weights().size() == 7);
    CHECK(w1.first_lag() == -3);
    for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(w1.weights()[i] - expected1[i]) <= 1e-12);
    CHECK(std::abs(w1.at(0)) <= 1e-12);

    const auto w2 = exact_kernel_window(2.0, 2);
    const std::vector<double> expected2{-0.5, 2.0, -pi * pi / 3, 2.0, -0.5};
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(w2.weights()[i] - expected2[i]) <= 1e-11);

    const auto w0 = exact_kernel_window(0.0, 10);
    CHECK(w0.at(0) == doctest::Approx(1.0).epsilon(1e-14));
    for (long m = 1; m <= 10; ++m) {
        CHECK(std::abs(w0.at(m)) <= 1e-12);
        CHECK(std::abs(w0.at(-m)) <= 1e-12);
    }
}

TEST_CASE("integer-order closed forms across a wide window") {
    const auto w1 = exact_kernel_window(1.0, 20);
    const auto w2 = exact_kernel_window(2.0, 20);
    for (int m = -20; m <= 20; ++m) {
        CHECK(std::abs(w1.at(m) - alpha1(m)) <= 1e-9);
        CHECK(std::abs(w2.at(m) - alpha2(m)) <= 1e-9);
    }
}

TEST_CASE("kernel decay over dyadic blocks") {
    for (double a : {0.5, 1.5}) {
        const auto w = exact_kernel_window(a, 1024);
        double previous = INFINITY;
        for (long lo = 1; lo < 1024; lo *= 2) {
            double block_max = 0.0;
            for (long m = lo; m < 2 * lo; ++m) block_max = std::max({block_max, std::abs(w.at(m)), std::abs(w.at(-m))});
            CAPTURE(a);
            CAPTURE(lo);
            CHECK(block_max < previous);
            CHECK(std::isfinite(block_max));
            previous = block_max;
        }
        // (ix)^a cut off at +-pi jumps by 2 i pi^a sin(pi a/2) in the periodic
        // extension, so m |K(m)| tends to pi^(a-1) |sin(pi a/2)|
        const double jump = std::pow(pi, a - 1.0) * std::abs(std::sin(pi * a / 2));
        double last_ratio = 0.0;
        for (long m : {64L, 128L, 256L, 512L}) {
            const double ratio = double(m) * std::abs(w.at(m)) / jump;
            CAPTURE(m);
            CHECK(ratio > last_ratio);
            CHECK(ratio <= 1.0);
            last_ratio = ratio;
        }
        CHECK(last_ratio >= 0.95);
    }
}

TEST_CASE("window cache returns identical windows") {
    clear_window_cache();
    CHECK(window_cache_size() == 0);
    const auto a = exact_kernel_window(0.37, 50);
    CHECK(window_cache_size() == 1);
    const auto b = exact_kernel_window(0.37, 50);
    CHECK(window_cache_size() == 1);
    CHECK(std::equal(a.weights().begin(), a.weights().end(), b.weights().begin()));
    (void)exact_kernel_window(0.37, 51);
    CHECK(window_cache_size() == 2);

    std::vector<std::vector<double>> results(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&results, i] {
            const auto w = exact_kernel_window(0.61, 200);
            results[i].assign(w.weights().begin(), w.weights().end());
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == results.front());
    clear_window_cache();
    CHECK(window_cache_size() == 0);
}

TEST_CASE("exact_difference on simple inputs") {
    // the order-0 window is the identity
    const auto y = testing::random_series(50, 4, 0.5);
    const auto z0 = exact_difference(y, exact_kernel_window(0.0, 8), Boundary::zero);
    CHECK(z0.step == 0.5);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(std::abs(z0[i] - y[i]) <= 1e-12);

    // odd kernel annihilates constants away from the edges
    const std::size_t M = 64;
    const double c = 3.5;
    const auto w1 = exact_kernel_window(1.0, M);
    const auto zc = exact_difference(Series(std::vector<double>(300, c)), w1, Boundary::zero);
    for (std::size_t t = M; t + M < 300; ++t) CHECK(std::abs(zc[t]) <= 1e-10 * c * std::log(double(M)));
    CHECK(std::abs(zc[0]) > 0.1);  // edge effect of the zero pre-sample

    // periodic boundary of a constant is exactly the weight sum times c
    const auto zp = exact_difference(Series(std::vector<double>(32, c)), w1, Boundary::periodic);
    for (double v : zp.values) CHECK(std::abs(v) <= 1e-10 * c * std::log(double(M)));
}

TEST_CASE("periodic cosine is an eigenfunction") {
    const std::size_t n = 16;
    const double w0 = 2.0 * pi / n;
    std::vector<double> v(n);
    for (std::size_t t = 0; t < n; ++t) v[t] = std::cos(w0 * double(t));
    const auto window = exact_kernel_window(0.5, 1024);
    const auto z = exact_difference(Series(v), window, Boundary::periodic);

    const double grid[] = {w0};
    const auto H = spectral::operator_response(window, grid)[0].measured;
    const auto target = spectral::power_law_target(0.5, w0);
    CHECK(std::abs(std::abs(H) - std::abs(target)) <= 1e-2 * std::abs(target));
    for (std::size_t t = 0; t < n; ++t) {
        const double expected = std::real(H * std::polar(1.0, w0 * double(t)));
        CHECK(std::abs(z[t] - expected) <= 1e-10);
    }
    // amplitude of the output is |(i w0)^0.5|
    const double amplitude = *std::max_element(z.values.begin(), z.values.end(),
                                               [](double a, double b) { return std::abs(a) < std::abs(b); });
    CHECK(std::abs(amplitude) <= std::abs(H) + 1e-12);
    CHECK(std::abs(amplitude) >= std::abs(H) * std::cos(w0 / 2) - 1e-12);
}

TEST_CASE("kernel semigroup in frequency") {
    // convolve the order 0.3 and 0.7 windows; the result should approach order 1
    const auto grid = spectral::linear_grid(0.2 * pi, 0.8 * pi, 61);
    double previous = INFINITY;
    for (std::size_t M : {128u, 512u}) {
        const auto a = exact_kernel_window(0.3, M);
        const auto b = exact_kernel_window(0.7, M);
        std::vector<double> c(4 * M + 1, 0.0);
        for (std::size_t i = 0; i < a.weights().size(); ++i)
            for (std::size_t j = 0; j < b.weights().size(); ++j) c[i + j] += a.weights()[i] * b.weights()[j];
        const auto resp = spectral::operator_response(c, -2 * static_cast<long>(M), grid);
        double worst = 0.0;
        for (const auto& s : resp) {
            const auto target = spectral::power_law_target(1.0, s.omega_T);
            worst = std::max(worst, std::abs(s.measured - target) / std::abs(target));
        }
        CAPTURE(M);
        CHECK(worst <= 2e-2);
        CHECK(worst < previous);
        previous = worst;
    }
}
