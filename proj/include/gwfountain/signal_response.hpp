#ifndef GWFOUNTAIN_SIGNAL_RESPONSE_HPP
#define GWFOUNTAIN_SIGNAL_RESPONSE_HPP

#include <vector>

#include "gwfountain/core_model.hpp"

// Differential-phase signal amplitude in broadband and resonant mode,
// including the multi-diamond Dirichlet-kernel resonance structure.

namespace gwfountain {

// sin(x)/x with a series branch near zero.
double sinc(double x);

// sin(Qx)/sin(x), continuous at x = m*pi where the limit is
// (-1)^{m(Q-1)} * Q. Total function for Q >= 1.
double dirichlet_ratio(int q, double x);

struct ResponsePoint {
    double frequency_f;   // Hz
    double amplitude_Phi; // rad, absolute value
};

struct BroadbandAmplitude {
    double phi;               // rad
    bool low_frequency_valid; // omega * tau_B below the validity guard
};

// Low-frequency-band amplitude of the differential phase for strain h.
BroadbandAmplitude signal_amplitude_broadband(double h, double k,
                                              const DetectorGeometry& geometry,
                                              int q, int n, double t_interrogation,
                                              double omega, double guard = 0.1);

// Resonant-mode amplitude 2 h k L N Q |sinc(omega tau_B N)|.
double signal_amplitude_resonant(double h, double k, double separation_L,
                                 int n, int q, double omega, double tau_B);

struct ResponseConfig {
    double strain_h;
    double wave_number_k;
    DetectorGeometry geometry;
    int diamonds_Q;
    int lmt_N;
    double interrogation_T;  // s
};

// Broadband amplitude sampled over a strictly increasing frequency grid.
std::vector<ResponsePoint> response_curve(const ResponseConfig& config,
                                          const std::vector<double>& frequency_grid_hz);

}  // namespace gwfountain

#endif
