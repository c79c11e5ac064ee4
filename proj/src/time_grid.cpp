#include "heraldsim/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace heraldsim {

TimeGrid::TimeGrid(double span, int divisions)
    : span_(span), divisions_(divisions), bin_width_(span / divisions) {
    if (!(span > 0.0)) {
        throw std::invalid_argument("TimeGrid: span must be positive");
    }
    if (divisions < 2) {
        throw std::invalid_argument("TimeGrid: need at least 2 divisions");
    }
    centers_.resize(static_cast<size_t>(divisions));
    for (int j = 0; j < divisions; ++j) {
        centers_[static_cast<size_t>(j)] = (j + 0.5) * bin_width_ - span / 2.0;
    }
}

int TimeGrid::nearest_bin(double t) const {
    double x = (t + span_ / 2.0) / bin_width_ - 0.5;
    int j = static_cast<int>(std::floor(x + 0.5));
    if (j < 0) j = 0;
    if (j >= divisions_) j = divisions_ - 1;
    // Exact midpoints round up above; hand ties to the lower index.
    if (j > 0 && std::abs(centers_[static_cast<size_t>(j - 1)] - t) <=
                     std::abs(centers_[static_cast<size_t>(j)] - t)) {
        --j;
    }
    return j;
}

}  // namespace heraldsim
