#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace fracmem::detail {

/// N-point Gauss-Legendre rule on [-1, 1], nodes ascending.
template <std::size_t N>
struct GaussLegendreRule {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussLegendreRule() {
        const std::size_t half = (N + 1) / 2;
        for (std::size_t i = 0; i < half; ++i) {
            // Chebyshev-like initial guess, then Newton on P_N
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(N) + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (std::size_t k = 2; k <= N; ++k) {
                    const double kd = static_cast<double>(k);
                    const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
                    p0 = p1;
                    p1 = p2;
                }
                // p1 = P_N(x), p0 = P_{N-1}(x)
                dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[N - 1 - i] = x;
            weights[i] = w;
            weights[N - 1 - i] = w;
        }
        if constexpr (N % 2 == 1) nodes[N / 2] = 0.0;
    }
};

template <std::size_t N>
const GaussLegendreRule<N>& gauss_legendre() {
    static const GaussLegendreRule<N> rule;
    return rule;
}

}  // namespace fracmem::detail
