#include "heraldsim/herald_kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heraldsim/errors.hpp"

namespace heraldsim {

namespace fault {

namespace {
std::atomic<bool> g_flip_gaussian_erf{false};
}

void set_gaussian_erf_sign_flip(bool enabled) { g_flip_gaussian_erf = enabled; }
bool gaussian_erf_sign_flip() { return g_flip_gaussian_erf; }

}  // namespace fault

namespace {

/// exp(x^2)*erfc(x) for x >= 0.  Direct evaluation is exact enough until
/// erfc approaches the underflow range; past that an asymptotic series
/// takes over.
double erfcx_positive(double x) {
    if (x < 20.0) {
        return std::exp(x * x) * std::erfc(x);
    }
    double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
        if (std::abs(term) < 1e-17 * sum) break;
    }
    return sum * std::numbers::inv_sqrtpi / x;
}

/// exp(s + x^2)*erfc(x), written so the exponent s + x^2 never has to be
/// formed when it would overflow.  Every call below has s + x^2 < 0
/// whenever x < 0, so the direct branch stays bounded.
double exp_shifted_erfc(double s, double x) {
    if (x >= 0.0) {
        return std::exp(s) * erfcx_positive(x);
    }
    return std::exp(s + x * x) * std::erfc(x);
}

constexpr double kGammaFromUnitBandwidth = 4.0 * std::numbers::pi;

}  // namespace

double rho1_gaussian_analytic(double t1, double t2, double dt, double gamma) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("rho1_gaussian_analytic: dt must be positive");
    }
    if (t1 < t2) std::swap(t1, t2);

    const double mu = 4.0 * std::numbers::ln2 / (dt * dt);
    const double sq = std::sqrt(mu);
    const double decay = -0.5 * gamma * (t1 - t2);

    // Contribution with the response entirely below both arguments.
    double left = exp_times_erfc(decay - mu * t2 * t2 +
                                     (0.5 * gamma / sq - sq * t2 >= 0.0
                                          ? (0.5 * gamma / sq - sq * t2) *
                                                (0.5 * gamma / sq - sq * t2)
                                          : 0.0),
                                 0.5 * gamma / sq - sq * t2);
    // Contribution between the two arguments, where the envelope product
    // is flat in the integration variable.
    double mid_erf = std::erf(sq * t1) - std::erf(sq * t2);
    if (fault::gaussian_erf_sign_flip()) {
        mid_erf = -std::erf(sq * t1) - std::erf(sq * t2);
    }
    double mid = std::exp(decay) * mid_erf;
    // Contribution with the response entirely above both arguments.
    double right = exp_times_erfc(decay - mu * t1 * t1 +
                                      (sq * t1 + 0.5 * gamma / sq >= 0.0
                                           ? (sq * t1 + 0.5 * gamma / sq) *
                                                 (sq * t1 + 0.5 * gamma / sq)
                                           : 0.0),
                                  sq * t1 + 0.5 * gamma / sq);
    return 0.5 * (left + mid + right);
}

double rho1_rect_analytic(double t1, double t2, double dt, double gamma) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("rho1_rect_analytic: dt must be positive");
    }
    if (t1 < t2) std::swap(t1, t2);

    const double h = dt / 2.0;
    const double g = gamma;
    auto E = [](double x) { return std::exp(x); };

    double v;
    if (t2 > h) {
        v = E(-0.5 * g * (t1 + t2 - dt)) - E(-0.5 * g * (t1 + t2 + dt));
    } else if (t1 > h && t2 > -h) {
        v = E(-0.5 * g * (t1 - t2)) - E(-0.5 * g * (t1 + t2 + dt)) +
            g * (h - t2) * E(-0.5 * g * (t1 - t2));
    } else if (t1 > h) {
        v = g * dt * E(-0.5 * g * (t1 - t2));
    } else if (t1 > -h && t2 > -h) {
        v = 2.0 * E(-0.5 * g * (t1 - t2)) - E(-0.5 * g * (t1 + t2 + dt)) -
            E(0.5 * g * (t1 + t2 - dt)) + g * (t1 - t2) * E(-0.5 * g * (t1 - t2));
    } else if (t1 > -h) {
        v = E(-0.5 * g * (t1 - t2)) - E(0.5 * g * (t1 + t2 - dt)) +
            g * (t1 + h) * E(-0.5 * g * (t1 - t2));
    } else {
        v = E(0.5 * g * (t1 + t2 + dt)) - E(0.5 * g * (t1 + t2 - dt));
    }
    return v / (g * dt);
}

namespace {

struct AdaptState {
    double tol_abs = 0.0;      // per-segment absolute budget at the root
    long intervals_left = 0;
    double err_accum = 0.0;
    int unconverged = 0;
};

template <typename F>
double adapt_simpson(const F& f, double a, double m, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth,
                     AdaptState& st) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol || depth >= 50 || st.intervals_left <= 0) {
        if (std::abs(err) > tol) ++st.unconverged;
        st.err_accum += std::abs(err);
        return left + right + err;
    }
    st.intervals_left -= 2;
    return adapt_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, st) +
           adapt_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, st);
}

/// Integrates f over the sorted segment edges with the stated relative
/// tolerance.  The integrand must be nonnegative for the relative control
/// to be meaningful.
template <typename F>
double integrate_segments(const F& f, const std::vector<double>& edges,
                          double rel_tol, long budget) {
    const size_t nseg = edges.size() - 1;

    // Coarse pass to set the absolute scale of the tolerance.
    double scale = 0.0;
    for (size_t s = 0; s < nseg; ++s) {
        double a = edges[s], b = edges[s + 1];
        scale += (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    }

    double total = 0.0;
    AdaptState st;
    for (int pass = 0; pass < 3; ++pass) {
        st = AdaptState{};
        st.tol_abs = rel_tol * std::max(scale, 1e-300) / static_cast<double>(nseg);
        st.intervals_left = budget;
        total = 0.0;
        for (size_t s = 0; s < nseg; ++s) {
            double a = edges[s], b = edges[s + 1];
            double m = 0.5 * (a + b);
            double fa = f(a), fm = f(m), fb = f(b);
            double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            total += adapt_simpson(f, a, m, b, fa, fm, fb, whole, st.tol_abs, 0, st);
        }
        // The coarse scale can misjudge a peaked integrand; re-run against
        // the refined value until the tolerance basis is consistent.
        if (total <= 2.0 * scale && scale <= 2.0 * std::max(total, 1e-300)) break;
        scale = total;
    }
    if (st.unconverged > 0) {
        throw NumericalFailure(
            "rho1_quadrature: subdivision budget exhausted before reaching "
            "the requested tolerance",
            st.err_accum / std::max(std::abs(total), 1e-300));
    }
    return total;
}

}  // namespace

double rho1_quadrature(double t1, double t2, const JitterKernel& g,
                       double gamma, double tol) {
    if (g.shape == JitterShape::delta) {
        throw std::invalid_argument(
            "rho1_quadrature: delta response is handled analytically");
    }
    if (!(g.width_dt > 0.0)) {
        throw std::invalid_argument("rho1_quadrature: jitter width must be positive");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("rho1_quadrature: tol must be positive");
    }

    double lo, hi;
    if (g.shape == JitterShape::rectangular) {
        lo = -g.width_dt / 2.0;
        hi = g.width_dt / 2.0;
    } else {
        // Beyond 9 scaled widths the gaussian factor is ~1e-35 of its peak
        // while the envelope product never exceeds its value on [t2, t1].
        double w = 9.0 / std::sqrt(g.mu());
        lo = -w;
        hi = w;
    }

    std::vector<double> edges{lo};
    for (double kink : {std::min(t1, t2), std::max(t1, t2)}) {
        if (kink > edges.back() + 1e-14 && kink < hi - 1e-14) {
            edges.push_back(kink);
        }
    }
    edges.push_back(hi);

    auto integrand = [&](double t) {
        double base = source_envelope(gamma, t1 - t) * source_envelope(gamma, t2 - t);
        if (g.shape == JitterShape::rectangular) {
            return base / g.width_dt;
        }
        double m = g.mu();
        return base * std::sqrt(m / std::numbers::pi) * std::exp(-m * t * t);
    };

    return integrate_segments(integrand, edges, tol, 1L << 21);
}

HeraldedKernel1 build_kernel1(const TimeGrid& grid, JitterShape shape, double B,
                              double tc, double eps) {
    if (B < 0.0) {
        throw std::invalid_argument("build_kernel1: B must be nonnegative");
    }
    if (B == 0.0) {
        shape = JitterShape::delta;
    }

    const double gamma = kGammaFromUnitBandwidth;
    const int M = grid.divisions();

    HeraldedKernel1 k;
    k.grid = grid;
    k.detection_time_tc = tc;
    k.jitter = JitterKernel{shape, shape == JitterShape::delta ? 0.0 : B};
    k.source_B = shape == JitterShape::delta ? 0.0 : B;
    k.amplitude_eps = eps;
    k.matrix.resize(M, M);

    if (shape == JitterShape::delta) {
        Eigen::VectorXd v(M);
        for (int j = 0; j < M; ++j) {
            v[j] = source_envelope(gamma, grid.center(j) - tc);
        }
        k.matrix.noalias() = v * v.transpose();
    } else {
        auto eval = shape == JitterShape::gaussian ? rho1_gaussian_analytic
                                                   : rho1_rect_analytic;
        for (int i = 0; i < M; ++i) {
            const double ti = grid.center(i) - tc;
            for (int j = i; j < M; ++j) {
                const double v = eval(ti, grid.center(j) - tc, B, gamma);
                k.matrix(i, j) = v;
                k.matrix(j, i) = v;
            }
        }
    }

    k.trace_raw = k.matrix.trace();
    const double edge = std::max(source_envelope(gamma, -grid.span() / 2.0 - tc),
                                 source_envelope(gamma, grid.span() / 2.0 - tc));
    k.edge_warning = edge > 1e-6;
    return k;
}

}  // namespace heraldsim
