#ifndef GWFOUNTAIN_CORE_MODEL_HPP
#define GWFOUNTAIN_CORE_MODEL_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

// Shared domain types and unit conventions. All quantities are SI
// internally; interfaces take Hz and meters.

namespace gwfountain {

inline constexpr double pi = 3.14159265358979323846;

struct PhysicalConstants {
    double g = 9.80665;          // m/s^2, standard gravity
    double c = 2.99792458e8;     // m/s
    double hbar = 1.054571817e-34;  // J s

    void validate() const {
        if (g <= 0.0 || c <= 0.0 || hbar <= 0.0)
            throw std::domain_error("PhysicalConstants: g, c, hbar must be positive");
    }
};

inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

// Atom species driving the single-photon transition.
struct AtomSpecies {
    double mass;         // kg
    double wave_number;  // rad/m

    AtomSpecies(double mass_kg, double wave_number_rad_per_m)
        : mass(mass_kg), wave_number(wave_number_rad_per_m) {
        if (mass <= 0.0 || wave_number <= 0.0)
            throw std::domain_error("AtomSpecies: mass and wave number must be positive");
    }

    static AtomSpecies from_wavelength(double mass_kg, double wavelength_m) {
        return AtomSpecies(mass_kg, 2.0 * pi / wavelength_m);
    }

    // Sr-87 single-photon clock transition at 698.4 nm.
    static AtomSpecies sr87() {
        return from_wavelength(86.9088 * atomic_mass_unit, 698.4e-9);
    }

    double recoil_velocity(double hbar = PhysicalConstants{}.hbar) const {
        return hbar * wave_number / mass;
    }

    // eta = g m / (hbar k); separates the loss regimes where the lower
    // arm reaches the bottom of the baseline.
    double eta(double g = PhysicalConstants{}.g,
               double hbar = PhysicalConstants{}.hbar) const {
        return g / recoil_velocity(hbar);
    }
};

struct DetectorGeometry {
    double baseline_B;     // m
    double fountain_H;     // m
    double separation_L;   // m, L = B - H
    double rel_height_ell; // H / B
    double tau_B;          // s, B / c
    double tau_L;          // s, L / c

    DetectorGeometry(double baseline_m, double fountain_m,
                     double c = PhysicalConstants{}.c)
        : baseline_B(baseline_m),
          fountain_H(fountain_m),
          separation_L(baseline_m - fountain_m),
          rel_height_ell(fountain_m / baseline_m),
          tau_B(baseline_m / c),
          tau_L((baseline_m - fountain_m) / c) {
        if (baseline_m <= 0.0)
            throw std::domain_error("DetectorGeometry: baseline must be positive");
        if (!(fountain_m > 0.0 && fountain_m < baseline_m))
            throw std::domain_error("DetectorGeometry: fountain height must lie in (0, B)");
    }
};

// One multi-diamond scheme: Q diamonds of duration 2T each, LMT order N.
struct PulseScheme {
    int diamonds_Q;
    int lmt_N;
    long long total_pulses_NP;  // 4 Q N - 2 Q + 1
    double interrogation_T;     // s
    double total_time_TAI;      // s, 2 Q T

    PulseScheme(int q, int n, double t_interrogation)
        : diamonds_Q(q),
          lmt_N(n),
          total_pulses_NP(total_pulses(q, n)),
          interrogation_T(t_interrogation),
          total_time_TAI(2.0 * q * t_interrogation) {
        if (q < 1 || n < 1)
            throw std::domain_error("PulseScheme: Q and N must be >= 1");
        if (t_interrogation <= 0.0)
            throw std::domain_error("PulseScheme: interrogation time must be positive");
    }

    static long long total_pulses(long long q, long long n) {
        return 4 * q * n - 2 * q + 1;
    }
};

// Shot-noise budget. Exactly one of three parametrizations applies:
// fixed phase uncertainty, atom flux, or (nu, N0, lambda, C).
struct NoiseBudget {
    double loss_lambda = 0.0;     // per-pulse loss, in [0, 1)
    double contrast_C = 1.0;      // in (0, 1]
    double repetitions_nu = 1.0;
    double initial_atoms_N0 = 1.0;
    std::optional<double> fixed_phase_uncertainty;  // rad or rad/sqrt(Hz)
    std::optional<double> atom_flux;                // atoms/s, replaces nu*N_at
    std::optional<double> integration_time;         // s

    void validate() const {
        if (loss_lambda < 0.0 || loss_lambda >= 1.0)
            throw std::domain_error("NoiseBudget: loss per pulse must lie in [0, 1)");
        if (contrast_C <= 0.0 || contrast_C > 1.0)
            throw std::domain_error("NoiseBudget: contrast must lie in (0, 1]");
        if (repetitions_nu <= 0.0 || initial_atoms_N0 <= 0.0)
            throw std::domain_error("NoiseBudget: repetitions and atom number must be positive");
        if (atom_flux.has_value() != integration_time.has_value())
            throw std::domain_error("NoiseBudget: atom flux requires an integration time");
    }
};

struct GwSignal {
    double strain_h;
    double frequency_f;  // Hz
    double omega;        // rad/s

    GwSignal(double h, double f) : strain_h(h), frequency_f(f), omega(2.0 * pi * f) {
        if (f <= 0.0)
            throw std::domain_error("GwSignal: frequency must be positive");
    }
};

// Resonant-mode condition omega T = pi, i.e. T = 1/(2f).
inline double resonant_interrogation_time(double f_hz) {
    if (f_hz <= 0.0)
        throw std::domain_error("resonant_interrogation_time: frequency must be positive");
    return 1.0 / (2.0 * f_hz);
}

// Scaling factor xi = sqrt(2B/(g T^2)); equals sqrt(8 B f^2 / g) at resonance.
inline double xi_factor(double baseline_m, double t_interrogation, double g) {
    if (baseline_m <= 0.0 || t_interrogation <= 0.0 || g <= 0.0)
        throw std::domain_error("xi_factor: inputs must be positive");
    return std::sqrt(2.0 * baseline_m / (g * t_interrogation * t_interrogation));
}

inline double xi_at_resonance(double baseline_m, double f_hz, double g) {
    return xi_factor(baseline_m, resonant_interrogation_time(f_hz), g);
}

// Fountain time T_tot = sqrt(8H/g) of a ballistic fountain of height H.
inline double fountain_time(double height_m, double g) {
    if (height_m < 0.0)
        throw std::domain_error("fountain_time: height must be non-negative");
    return std::sqrt(8.0 * height_m / g);
}

}  // namespace gwfountain

#endif
