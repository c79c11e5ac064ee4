#pragma once

#include <Eigen/Core>

#include "heraldsim/herald_kernel.hpp"
#include "heraldsim/mode.hpp"

namespace heraldsim {

/// Eigendecomposition of a trace-normalized heralded kernel:
/// eigenvalues descending and summing to 1, modes orthonormal, each mode
/// signed so its value at the bin nearest the detection time is >= 0.
struct ModeDecomposition {
    TimeGrid grid;
    Eigen::VectorXd eigenvalues;  // descending, trace-normalized
    Eigen::MatrixXd modes;        // column k = k-th mode function
    double source_B = 0.0;
    JitterShape jitter_shape = JitterShape::delta;
    double detection_time_tc = 0.0;

    int count() const { return static_cast<int>(eigenvalues.size()); }
    DiscreteMode mode(int k) const;
};

/// Full symmetric eigendecomposition of the trace-normalized kernel.
///
/// Throws std::invalid_argument if the input matrix is not symmetric to
/// within 1e-12 of its largest entry, NumericalFailure if the eigensolver
/// does not converge or an eigenvalue is more negative than -1e-12
/// (eigenvalues in [-1e-12, 0) are clamped to zero).
ModeDecomposition decompose(const HeraldedKernel1& kernel);

/// tr(rho^2) = sum of squared eigenvalues.
double purity(const ModeDecomposition& d);

/// Overlap with the leading eigenmode, i.e. the largest eigenvalue.
double fidelity(const ModeDecomposition& d);

/// Diagnostic: overlap of the leading mode with the normalized source
/// envelope centered at the detection time.
double overlap_with_source(const ModeDecomposition& d);

/// Unnormalized detection probability density: eps^2 * raw kernel trace
/// * bin width.  Constant in tc for an interior detection time (the CW
/// source is stationary); used to test that stationarity.
double herald_rate_density(const TimeGrid& grid, JitterShape shape,
                           double B, double tc, double eps = 1.0);

}  // namespace heraldsim
