#include "gwfountain/signal_response.hpp"

#include <cmath>
#include <stdexcept>

namespace gwfountain {

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        // quadratic series, avoids 0/0 in the omega*tau_B*N -> 0 regime
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

double dirichlet_ratio(int q, double x) {
    if (q < 1)
        throw std::domain_error("dirichlet_ratio: Q must be >= 1");
    if (q == 1)
        return 1.0;

    const double m = std::round(x / pi);
    const double delta = x - m * pi;
    if (std::abs(delta) < 1e-6) {
        // Direct quotient loses all digits at resonance, which is exactly
        // the operating point. Taylor-expand sin(Q(m pi + d))/sin(m pi + d)
        // around d = 0.
        const long long mi = static_cast<long long>(m);
        const double sign = ((mi * (q - 1)) % 2 == 0) ? 1.0 : -1.0;
        const double qq = static_cast<double>(q) * q;
        const double d2 = delta * delta;
        const double c2 = (1.0 - qq) / 6.0;
        const double c4 = qq * qq / 120.0 - qq / 36.0 + 7.0 / 360.0;
        return sign * q * (1.0 + c2 * d2 + c4 * d2 * d2);
    }
    return std::sin(q * x) / std::sin(x);
}

BroadbandAmplitude signal_amplitude_broadband(double h, double k,
                                              const DetectorGeometry& geometry,
                                              int q, int n, double t_interrogation,
                                              double omega, double guard) {
    if (q < 1 || n < 1)
        throw std::domain_error("signal_amplitude_broadband: Q and N must be >= 1");
    if (omega <= 0.0)
        throw std::domain_error("signal_amplitude_broadband: omega must be positive");

    const double tau_b = geometry.tau_B;
    const double c = geometry.tau_B > 0.0 ? geometry.baseline_B / geometry.tau_B : 0.0;
    const double t = t_interrogation;
    const double kernel = std::sin(omega * tau_b * n / 2.0) * std::sin(omega * t / 2.0) *
                          std::sin(omega * (t - (n - 1) * tau_b) / 2.0) *
                          dirichlet_ratio(q, omega * t);
    const double phi = 4.0 * h * k * c / omega *
                       (geometry.separation_L / geometry.baseline_B) * std::abs(kernel);
    return BroadbandAmplitude{phi, omega * tau_b < guard};
}

double signal_amplitude_resonant(double h, double k, double separation_L,
                                 int n, int q, double omega, double tau_B) {
    if (q < 1 || n < 1)
        throw std::domain_error("signal_amplitude_resonant: Q and N must be >= 1");
    return 2.0 * h * k * separation_L * n * q * std::abs(sinc(omega * tau_B * n));
}

std::vector<ResponsePoint> response_curve(const ResponseConfig& config,
                                          const std::vector<double>& frequency_grid_hz) {
    if (frequency_grid_hz.empty())
        throw std::domain_error("response_curve: frequency grid must not be empty");
    for (std::size_t i = 1; i < frequency_grid_hz.size(); ++i)
        if (frequency_grid_hz[i] <= frequency_grid_hz[i - 1])
            throw std::domain_error("response_curve: frequency grid must be strictly increasing");

    std::vector<ResponsePoint> points;
    points.reserve(frequency_grid_hz.size());
    for (double f : frequency_grid_hz) {
        const double omega = 2.0 * pi * f;
        const auto amp = signal_amplitude_broadband(config.strain_h, config.wave_number_k,
                                                    config.geometry, config.diamonds_Q,
                                                    config.lmt_N, config.interrogation_T,
                                                    omega);
        points.push_back(ResponsePoint{f, amp.phi});
    }
    return points;
}

}  // namespace gwfountain
