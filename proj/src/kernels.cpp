#include "heraldsim/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heraldsim/errors.hpp"

namespace heraldsim {

double SourceKernel::gamma() const { return 4.0 * std::numbers::pi * bandwidth_df; }

double source_envelope(double gamma, double t) {
    return std::exp(-0.5 * gamma * std::abs(t));
}

double source_eval(const SourceKernel& k, double t) {
    return k.amplitude_eps * std::sqrt(2.0 * std::numbers::pi) *
           source_envelope(k.gamma(), t);
}

double JitterKernel::mu() const {
    return 4.0 * std::numbers::ln2 / (width_dt * width_dt);
}

double jitter_eval(const JitterKernel& g, double t) {
    switch (g.shape) {
        case JitterShape::delta:
            throw UnsupportedOperation(
                "jitter_eval: delta response has no pointwise density; "
                "use the exact zero-jitter path");
        case JitterShape::rectangular: {
            if (!(g.width_dt > 0.0)) {
                throw std::invalid_argument("jitter_eval: width must be positive");
            }
            return std::abs(t) <= g.width_dt / 2.0 ? 1.0 / g.width_dt : 0.0;
        }
        case JitterShape::gaussian: {
            if (!(g.width_dt > 0.0)) {
                throw std::invalid_argument("jitter_eval: width must be positive");
            }
            double m = g.mu();
            return std::sqrt(m / std::numbers::pi) * std::exp(-m * t * t);
        }
    }
    throw std::invalid_argument("jitter_eval: unknown shape");
}

const char* to_string(JitterShape shape) {
    switch (shape) {
        case JitterShape::rectangular: return "rect";
        case JitterShape::gaussian: return "gaussian";
        case JitterShape::delta: return "delta";
    }
    return "unknown";
}

JitterShape jitter_shape_from_string(const std::string& name) {
    if (name == "rect" || name == "rectangular") return JitterShape::rectangular;
    if (name == "gaussian" || name == "gauss") return JitterShape::gaussian;
    if (name == "delta") return JitterShape::delta;
    throw std::invalid_argument("unknown jitter shape: " + name);
}

NormalizedParams reduce(const PhysicalParams& p) {
    if (!(p.bandwidth_hz > 0.0)) {
        throw std::invalid_argument("reduce: bandwidth must be positive");
    }
    if (p.jitter_fwhm_s < 0.0) {
        throw std::invalid_argument("reduce: jitter width must be nonnegative");
    }
    return NormalizedParams{p.bandwidth_hz * p.jitter_fwhm_s,
                            p.bandwidth_hz * p.window_s,
                            p.bandwidth_hz * p.detection_time_s};
}

}  // namespace heraldsim
