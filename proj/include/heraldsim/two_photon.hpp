#pragma once

#include <Eigen/Core>

#include "heraldsim/herald_kernel.hpp"
#include "heraldsim/mode_analysis.hpp"

namespace heraldsim {

/// First-order autocorrelation matrix of the two-photon heralded state
/// (both detections at the same time).  The four-index density tensor
/// factorizes through the single-photon kernel P, which collapses E to a
/// polynomial in P; E therefore shares P's eigenvectors.
struct Autocorrelation2 {
    TimeGrid grid;
    Eigen::MatrixXd matrix;   // trace-normalized E
    double source_B = 0.0;
    JitterShape jitter_shape = JitterShape::delta;
    double detection_time_tc = 0.0;
};

/// Computes E along two independent routes -- the literal four-term
/// contraction of the factorized tensor and the reduced closed form
/// 2*(tr(P)*P + P^2) -- and cross-checks them to 1e-10 before returning
/// the trace-normalized result.  Throws ConsistencyError on disagreement.
Autocorrelation2 autocorr2(const HeraldedKernel1& P);

/// Same contract as decompose(), applied to the autocorrelation matrix.
ModeDecomposition two_photon_modes(const Autocorrelation2& E);

/// tr(rho^2)/tr(rho)^2 of the bosonic two-photon state, via the closed
/// form 2*(tr(P^2)^2 + tr(P^4)) / (tr(P)^2 + tr(P^2))^2.
double two_photon_purity(const HeraldedKernel1& P);

/// Overlap of the state with a normalized two-photon Fock state in the
/// given temporal mode: 2*(f'Pf)^2 / (tr(P)^2 + tr(P^2)).  Throws
/// std::invalid_argument when the target is not unit-normalized.
double two_photon_fidelity(const HeraldedKernel1& P, const DiscreteMode& target);

/// Fidelity against the default target: the leading mode of the
/// autocorrelation matrix.
double two_photon_fidelity(const HeraldedKernel1& P);

struct TwoPhotonMetrics {
    double purity = 0.0;
    double fidelity = 0.0;
    double lambda1_E = 0.0;   // leading normalized eigenvalue of E
    DiscreteMode mode1;
};

/// One-pass computation sharing a single diagonalization of E.
TwoPhotonMetrics two_photon_metrics(const HeraldedKernel1& P);

struct TensorOracleResult {
    Eigen::MatrixXd E;        // un-normalized four-term contraction
    double trace = 0.0;
    double purity = 0.0;
    double fidelity = 0.0;    // against the leading mode of the oracle's own E
};

/// Ground-truth reference: materializes the dense four-index tensor
/// rho[a,b,c,d] = P[a,c]*P[b,d] and contracts every quantity by explicit
/// index loops.  Guarded to M <= 24 (throws ResourceLimit above that);
/// the production closed forms are validated against this.
TensorOracleResult tensor_oracle(const HeraldedKernel1& P);

}  // namespace heraldsim
