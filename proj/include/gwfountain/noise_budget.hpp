#ifndef GWFOUNTAIN_NOISE_BUDGET_HPP
#define GWFOUNTAIN_NOISE_BUDGET_HPP

#include <optional>

#include "gwfountain/core_model.hpp"

// Detected-atom counts under per-pulse loss and the shot-noise-limited
// strain uncertainty.

namespace gwfountain {

struct StrainUncertainty {
    double delta_h;           // carries the normalization of the input phase uncertainty
    double phase_uncertainty; // rad (or rad/sqrt(Hz))
    double detected_atoms;
};

// N_at = N0 (1 - lambda)^{N_P}
double detected_atoms(double n0, double loss_lambda, double np);

// Delta Phi = sqrt(2 / (nu N_at C^2)), or the fixed/flux override.
double phase_uncertainty(const NoiseBudget& noise, double np);

// Delta h = Delta Phi / (2 k L N Q |sinc(sinc_arg)|).
StrainUncertainty strain_uncertainty(const NoiseBudget& noise, double k,
                                     double separation_L, double n, double q,
                                     double np,
                                     std::optional<double> sinc_arg = std::nullopt);

}  // namespace gwfountain

#endif
