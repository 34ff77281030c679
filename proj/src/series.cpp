#include "fracmem/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracmem {

void Series::validate() const {
    if (values.empty()) throw std::invalid_argument("series: empty series");
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("series: step must be positive");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("series: non-finite value at index " + std::to_string(i));
        }
    }
}

}  // namespace fracmem
