#include "heraldsim/mode.hpp"

#include <stdexcept>

#include "heraldsim/kernels.hpp"

namespace heraldsim {

double mode_overlap(const DiscreteMode& a, const DiscreteMode& b) {
    if (!(a.grid == b.grid)) {
        throw std::invalid_argument("mode_overlap: modes live on different grids");
    }
    return a.values.dot(b.values);
}

DiscreteMode normalized_source_mode(const TimeGrid& grid, double gamma, double tc) {
    Eigen::VectorXd v(grid.divisions());
    for (int j = 0; j < grid.divisions(); ++j) {
        v[j] = source_envelope(gamma, grid.center(j) - tc);
    }
    v /= v.norm();
    return DiscreteMode{grid, std::move(v)};
}

}  // namespace heraldsim
