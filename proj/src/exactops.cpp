#include "fracmem/exactops.hpp"

#include "fracmem/errors.hpp"
#include "fracmem/specfun.hpp"
#include "gauss_legendre.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracmem::exactops {
namespace {

using std::numbers::pi;

constexpr std::size_t panel_nodes = 20;
// geometric refinement of the first panel toward x = 0
constexpr double grading_ratio = 0.2;
constexpr int grading_levels = 40;

void check_order(double order, const char* who) {
    if (!(order > -1.0) || !std::isfinite(order)) {
        throw std::domain_error(std::string(who) + ": order must be > -1, got " + std::to_string(order));
    }
}

// Integrals of x^alpha cos(k x) and x^alpha sin(k x) over [0, pi], k >= 0.
struct TrigMoments {
    double cos_part = 0.0;
    double sin_part = 0.0;
};

TrigMoments trig_moments(double order, long k) {
    const auto& rule = detail::gauss_legendre<panel_nodes>();
    const long panels = std::max(k, 1L);
    const double h = pi / static_cast<double>(panels);
    const double kd = static_cast<double>(k);
    const bool smooth_at_origin = specfun::is_integer(order) && order >= 0.0;

    // On panel p the phase k*x runs over [p*pi, (p+1)*pi] when k >= 1, so the
    // trig factor at node i is (-1)^p times a panel-independent value.
    std::array<double, panel_nodes> node_cos{};
    std::array<double, panel_nodes> node_sin{};
    for (std::size_t i = 0; i < panel_nodes; ++i) {
        const double u = 0.5 * (rule.nodes[i] + 1.0);  // in (0, 1)
        const double phase = (k == 0) ? 0.0 : pi * u;
        node_cos[i] = std::cos(phase);
        node_sin[i] = std::sin(phase);
    }

    double c_sum = 0.0;
    double s_sum = 0.0;
    long first_regular_panel = 0;

    if (!smooth_at_origin) {
        // [0, eps] analytically, then panels [h q^{j+1}, h q^j] inward-out
        const double eps = h * std::pow(grading_ratio, grading_levels);
        c_sum += std::pow(eps, order + 1.0) / (order + 1.0);
        s_sum += kd * std::pow(eps, order + 2.0) / (order + 2.0);
        for (int j = grading_levels - 1; j >= 0; --j) {
            const double lo = h * std::pow(grading_ratio, j + 1);
            const double hi = h * std::pow(grading_ratio, j);
            const double half = 0.5 * (hi - lo);
            double c_panel = 0.0;
            double s_panel = 0.0;
            for (std::size_t i = 0; i < panel_nodes; ++i) {
                const double x = lo + half * (rule.nodes[i] + 1.0);
                const double f = rule.weights[i] * std::pow(x, order);
                c_panel += f * std::cos(kd * x);
                s_panel += f * std::sin(kd * x);
            }
            c_sum += half * c_panel;
            s_sum += half * s_panel;
        }
        first_regular_panel = 1;
    }

    const double half = 0.5 * h;
    for (long p = first_regular_panel; p < panels; ++p) {
        const double lo = static_cast<double>(p) * h;
        double c_panel = 0.0;
        double s_panel = 0.0;
        for (std::size_t i = 0; i < panel_nodes; ++i) {
            const double x = lo + half * (rule.nodes[i] + 1.0);
            const double f = rule.weights[i] * std::pow(x, order);
            c_panel += f * node_cos[i];
            s_panel += f * node_sin[i];
        }
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        c_sum += sign * half * c_panel;
        s_sum += sign * half * s_panel;
    }
    return {c_sum, s_sum};
}

struct WindowKey {
    long long order_key;
    std::size_t half_width;
    auto operator<=>(const WindowKey&) const = default;
};

struct WindowCache {
    std::shared_mutex mutex;
    std::map<WindowKey, std::shared_ptr<const KernelWindow>> windows;
};

WindowCache& window_cache() {
    static WindowCache cache;
    return cache;
}

KernelWindow build_window(double order, std::size_t half_width) {
    const long M = static_cast<long>(half_width);
    std::vector<double> weights(2 * half_width + 1);
    for (long m = 0; m <= M; ++m) {
        const KernelParts quad = exact_kernel_parts_quadrature(order, static_cast<int>(m));
        KernelParts pos = quad;
        if (m <= series_max_abs_m) {
            pos = exact_kernel_parts_series(order, static_cast<int>(m));
            const double diff = std::abs(pos.combine(order) - quad.combine(order));
            if (!(diff <= overlap_tolerance)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "exact_kernel_window: series and quadrature disagree at order " << order << ", m = " << m
                    << " (|diff| = " << diff << ")";
                throw ConsistencyError(msg.str());
            }
        }
        const KernelParts neg{pos.plus, -pos.minus};
        weights[static_cast<std::size_t>(M + m)] = pos.combine(order);
        weights[static_cast<std::size_t>(M - m)] = neg.combine(order);
    }
    return KernelWindow(order, half_width, std::move(weights));
}

}  // namespace

double KernelParts::combine(double order) const {
    return specfun::cos_pi(0.5 * order) * plus + specfun::sin_pi(0.5 * order) * minus;
}

KernelParts exact_kernel_parts_series(double order, int m) {
    check_order(order, "exact_kernel_series");
    if (std::abs(m) > series_max_abs_m) {
        throw std::out_of_range("exact_kernel_series: |m| = " + std::to_string(std::abs(m)) +
                                " exceeds 4; use exact_kernel_quadrature");
    }
    const double md = static_cast<double>(m);
    const double z = -pi * pi * md * md / 4.0;
    const specfun::HypergeometricParams even{(order + 1.0) / 2.0, 0.5, (order + 3.0) / 2.0};
    const specfun::HypergeometricParams odd{(order + 2.0) / 2.0, 1.5, (order + 4.0) / 2.0};
    KernelParts parts;
    parts.plus = std::pow(pi, order) / (order + 1.0) * specfun::hyp1f2(even, z);
    parts.minus = (m == 0) ? 0.0 : -std::pow(pi, order + 1.0) * md / (order + 2.0) * specfun::hyp1f2(odd, z);
    return parts;
}

KernelParts exact_kernel_parts_quadrature(double order, int m) {
    check_order(order, "exact_kernel_quadrature");
    const TrigMoments moments = trig_moments(order, std::abs(static_cast<long>(m)));
    const double sign = (m < 0) ? -1.0 : 1.0;
    return {moments.cos_part / pi, -sign * moments.sin_part / pi};
}

double exact_kernel_series(double order, int m) { return exact_kernel_parts_series(order, m).combine(order); }

double exact_kernel_quadrature(double order, int m) {
    return exact_kernel_parts_quadrature(order, m).combine(order);
}

KernelWindow::KernelWindow(double order, std::size_t half_width, std::vector<double> weights)
    : order_(order), half_width_(half_width), weights_(std::move(weights)) {
    if (weights_.size() != 2 * half_width_ + 1) {
        throw std::invalid_argument("KernelWindow: expected 2*half_width+1 weights");
    }
}

double KernelWindow::at(long m) const {
    const long M = static_cast<long>(half_width_);
    if (m < -M || m > M) throw std::out_of_range("KernelWindow::at: lag outside the window");
    return weights_[static_cast<std::size_t>(m + M)];
}

KernelWindow exact_kernel_window(double order, std::size_t half_width) {
    check_order(order, "exact_kernel_window");
    if (half_width == 0) throw std::invalid_argument("exact_kernel_window: half_width must be positive");

    const WindowKey key{std::llround(order * 1e12), half_width};
    auto& cache = window_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.windows.find(key); it != cache.windows.end()) return *it->second;
    }
    auto built = std::make_shared<const KernelWindow>(build_window(order, half_width));
    std::unique_lock lock(cache.mutex);
    // a concurrent builder may have won; its window is identical, keep the first
    auto [it, inserted] = cache.windows.try_emplace(key, std::move(built));
    return *it->second;
}

void clear_window_cache() {
    auto& cache = window_cache();
    std::unique_lock lock(cache.mutex);
    cache.windows.clear();
}

std::size_t window_cache_size() {
    auto& cache = window_cache();
    std::shared_lock lock(cache.mutex);
    return cache.windows.size();
}

Series exact_difference(const Series& y, const KernelWindow& window, Boundary boundary) {
    if (y.empty()) throw std::invalid_argument("exact_difference: empty series");
    y.validate();
    const long n = static_cast<long>(y.size());
    const long M = static_cast<long>(window.half_width());
    const auto w = window.weights();
    std::vector<double> z(y.size());
    for (long t = 0; t < n; ++t) {
        double s = 0.0;
        for (long m = -M; m <= M; ++m) {
            long idx = t - m;
            if (boundary == Boundary::periodic) {
                idx %= n;
                if (idx < 0) idx += n;
            } else if (idx < 0 || idx >= n) {
                continue;
            }
            s += w[static_cast<std::size_t>(m + M)] * y.values[static_cast<std::size_t>(idx)];
        }
        z[static_cast<std::size_t>(t)] = s;
    }
    return y.with_values(std::move(z));
}

}  // namespace fracmem::exactops
