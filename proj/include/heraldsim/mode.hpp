#pragma once

#include <Eigen/Core>

#include "heraldsim/time_grid.hpp"

namespace heraldsim {

/// Discrete temporal mode function: values[j] holds the mode coefficient
/// on bin j, normalized so the squared coefficients sum to 1.
struct DiscreteMode {
    TimeGrid grid;
    Eigen::VectorXd values;
};

/// Discrete inner product sum_j a[j]*b[j].  Throws std::invalid_argument
/// when the modes live on different grids.
double mode_overlap(const DiscreteMode& a, const DiscreteMode& b);

/// The source envelope exp(-gamma*|t - tc|/2) sampled on the grid and
/// scaled to unit discrete norm.
DiscreteMode normalized_source_mode(const TimeGrid& grid, double gamma, double tc);

}  // namespace heraldsim
