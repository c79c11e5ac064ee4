#pragma once

#include <vector>

namespace heraldsim {

/// Uniform time grid over the window [-T/2, T/2], split into M bins.
///
/// All kernels and mode functions are sampled at bin centers
/// t_j = (j + 1/2) * T/M - T/2.  Times are in units of 1/bandwidth
/// (the library works with the source bandwidth fixed to 1).
class TimeGrid {
public:
    /// Throws std::invalid_argument for span <= 0 or divisions < 2.
    TimeGrid(double span, int divisions);

    double span() const { return span_; }
    int divisions() const { return divisions_; }
    double bin_width() const { return bin_width_; }

    const std::vector<double>& bin_centers() const { return centers_; }
    double center(int j) const { return centers_[static_cast<size_t>(j)]; }

    /// Index of the bin whose center is closest to t (ties -> lower index),
    /// clamped to [0, M-1].
    int nearest_bin(double t) const;

    friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
        return a.span_ == b.span_ && a.divisions_ == b.divisions_;
    }

private:
    double span_;
    int divisions_;
    double bin_width_;
    std::vector<double> centers_;
};

}  // namespace heraldsim
