#pragma once

#include <Eigen/Core>

#include "heraldsim/kernels.hpp"
#include "heraldsim/time_grid.hpp"

namespace heraldsim {

/// Discretized density kernel of the state heralded by a single photon
/// detection: rho(t',t'') = integral dt g(t - tc) r(t'-t) r(t''-t),
/// sampled at bin centers.
///
/// The matrix is normalized so that the zero-jitter limit equals the
/// outer product of the unit-peak source envelope; the pump amplitude
/// enters only through trace_raw-based rates and cancels everywhere else.
struct HeraldedKernel1 {
    TimeGrid grid;
    Eigen::MatrixXd matrix;       // symmetric, positive semidefinite
    double detection_time_tc = 0.0;
    JitterKernel jitter;          // width_dt = B in normalized units
    double source_B = 0.0;        // 0 for the delta shape
    double amplitude_eps = 1.0;
    double trace_raw = 0.0;       // trace of `matrix`, before eps^2 scaling
    bool edge_warning = false;    // envelope at the window edge > 1e-6 of peak
};

/// Closed form of the kernel for gaussian jitter: three erf/erfc terms,
/// evaluated through scaled complementary error functions so large
/// exponents never overflow.  Symmetric in (t1, t2).
double rho1_gaussian_analytic(double t1, double t2, double dt, double gamma);

/// Closed form for rectangular jitter: six-region piecewise expression
/// selected after ordering the arguments, continuous across every
/// region boundary.
double rho1_rect_analytic(double t1, double t2, double dt, double gamma);

/// Adaptive-quadrature evaluation of the defining integral, subdividing
/// at the envelope kinks t = t1, t = t2 and at rectangular support edges.
/// Independent of the closed forms above; used to validate them.
///
/// tol is a relative tolerance (the integrand is nonnegative, so relative
/// control is meaningful).  Throws NumericalFailure, carrying the achieved
/// error estimate, if the subdivision budget is exhausted; throws
/// std::invalid_argument for the delta shape or tol <= 0.
double rho1_quadrature(double t1, double t2, const JitterKernel& g,
                       double gamma, double tol);

/// Builds the M x M kernel for jitter width dt = B (bandwidth-normalized).
/// B = 0 or shape = delta selects the exact zero-jitter outer product.
/// Throws std::invalid_argument for B < 0.
HeraldedKernel1 build_kernel1(const TimeGrid& grid, JitterShape shape,
                              double B, double tc, double eps = 1.0);

namespace fault {

/// Diagnostic hook: flips the sign of the middle erf term in the gaussian
/// closed form, so oracle cross-checks can demonstrate that they catch a
/// formula transcription error.  Never enabled in normal operation.
void set_gaussian_erf_sign_flip(bool enabled);
bool gaussian_erf_sign_flip();

}  // namespace fault

}  // namespace heraldsim
