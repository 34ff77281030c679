#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fracmem {

/**
 * @brief Uniformly sampled real-valued series.
 *
 * Sample i sits at time start + i*step.
 */
struct Series {
    std::vector<double> values;
    double step = 1.0;
    double start = 0.0;

    Series() = default;
    explicit Series(std::vector<double> v, double step_ = 1.0, double start_ = 0.0)
        : values(std::move(v)), step(step_), start(start_) {}

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] bool empty() const noexcept { return values.empty(); }
    [[nodiscard]] double time(std::size_t i) const noexcept { return start + static_cast<double>(i) * step; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values[i]; }

    /// Same step and start, new values.
    [[nodiscard]] Series with_values(std::vector<double> v) const { return Series(std::move(v), step, start); }

    /// @throws std::invalid_argument if empty, step <= 0, or any value is non-finite.
    void validate() const;
};

}  // namespace fracmem
