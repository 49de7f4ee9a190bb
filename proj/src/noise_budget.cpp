#include "gwfountain/noise_budget.hpp"

#include <cmath>
#include <stdexcept>

#include "gwfountain/signal_response.hpp"

namespace gwfountain {

double detected_atoms(double n0, double loss_lambda, double np) {
    if (n0 <= 0.0)
        throw std::domain_error("detected_atoms: initial atom number must be positive");
    if (loss_lambda < 0.0 || loss_lambda >= 1.0)
        throw std::domain_error("detected_atoms: loss per pulse must lie in [0, 1)");
    if (np < 1.0)
        throw std::domain_error("detected_atoms: pulse count must be >= 1");
    // exp(N_P log(1-lambda)) keeps precision for tiny losses
    return n0 * std::exp(np * std::log1p(-loss_lambda));
}

double phase_uncertainty(const NoiseBudget& noise, double np) {
    noise.validate();
    if (noise.fixed_phase_uncertainty)
        return *noise.fixed_phase_uncertainty;

    double nu_nat;
    if (noise.atom_flux) {
        // nu * N_at = flux * T_int, dead times and interleaving absorbed
        nu_nat = *noise.atom_flux * *noise.integration_time;
    } else {
        nu_nat = noise.repetitions_nu *
                 detected_atoms(noise.initial_atoms_N0, noise.loss_lambda, np);
    }
    const double c2 = noise.contrast_C * noise.contrast_C;
    if (!(nu_nat * c2 > 0.0) || !std::isfinite(2.0 / (nu_nat * c2)))
        throw std::overflow_error("phase_uncertainty: no atoms survive the pulse sequence");
    return std::sqrt(2.0 / (nu_nat * c2));
}

StrainUncertainty strain_uncertainty(const NoiseBudget& noise, double k,
                                     double separation_L, double n, double q,
                                     double np, std::optional<double> sinc_arg) {
    if (k <= 0.0 || separation_L <= 0.0 || n < 1.0 || q < 1.0)
        throw std::domain_error("strain_uncertainty: invalid detector parameters");

    double response = 2.0 * k * separation_L * n * q;
    if (sinc_arg) {
        const double s = std::abs(sinc(*sinc_arg));
        if (s == 0.0)
            throw std::domain_error("strain_uncertainty: signal null: division by zero response");
        response *= s;
    }

    const double dphi = phase_uncertainty(noise, np);
    double nat = noise.initial_atoms_N0;
    if (!noise.fixed_phase_uncertainty && !noise.atom_flux)
        nat = detected_atoms(noise.initial_atoms_N0, noise.loss_lambda, np);
    return StrainUncertainty{dphi / response, dphi, nat};
}

}  // namespace gwfountain
