#pragma once

#include <string>

namespace heraldsim {

/// Photon-pair correlation envelope of a CW-pumped squeezed-light source:
/// a both-side exponential r(t) = eps * sqrt(2*pi) * exp(-gamma*|t|/2)
/// with gamma = 4*pi*bandwidth (bandwidth given as HWHM).
struct SourceKernel {
    double bandwidth_df = 1.0;
    double amplitude_eps = 1.0;

    double gamma() const;
};

double source_eval(const SourceKernel& k, double t);

/// Unit-peak envelope exp(-gamma*|t|/2); every normalized result in the
/// library is expressed through this shape, so the pump amplitude cancels.
double source_envelope(double gamma, double t);

enum class JitterShape { rectangular, gaussian, delta };

/// Detector response g(t): probability density of the reported detection
/// time around the true arrival time, normalized to unit integral.
///
/// width_dt is the FWHM for the gaussian shape and the full support width
/// for the rectangular shape.  The delta shape marks the ideal-resolution
/// limit and is handled analytically, never sampled pointwise.
struct JitterKernel {
    JitterShape shape = JitterShape::gaussian;
    double width_dt = 0.0;

    /// Gaussian exponent coefficient 4*ln2/dt^2 (so the FWHM equals width_dt).
    double mu() const;
};

/// Throws UnsupportedOperation for the delta shape and
/// std::invalid_argument for non-positive widths.
double jitter_eval(const JitterKernel& g, double t);

const char* to_string(JitterShape shape);
JitterShape jitter_shape_from_string(const std::string& name);

/// Physical detector/source parameters, reduced to the dimensionless
/// quantities the simulation actually depends on.
struct PhysicalParams {
    double bandwidth_hz;       // source HWHM
    double jitter_fwhm_s;      // detector resolution
    double window_s;           // analysis window width
    double detection_time_s = 0.0;
};

struct NormalizedParams {
    double B;        // bandwidth * jitter width
    double span_T;   // window in units of 1/bandwidth
    double tc;       // detection time in units of 1/bandwidth
};

/// All outputs depend on (bandwidth, jitter, window) only through these
/// products, so (s*df, dt/s, T/s, tc/s) maps to the same normalized run.
NormalizedParams reduce(const PhysicalParams& p);

}  // namespace heraldsim
