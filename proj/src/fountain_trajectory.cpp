#include "gwfountain/fountain_trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwfountain/detail/golden.hpp"

namespace gwfountain {

std::string to_string(Binding binding) {
    switch (binding) {
        case Binding::none: return "none";
        case Binding::bottom: return "bottom";
        case Binding::top: return "top";
        case Binding::both: return "both";
    }
    return "unknown";
}

double ArmTrajectory::separation(double t) const {
    const double two_t = 2.0 * interrogation_T;
    if (t <= 0.0 || t >= duration())
        return 0.0;
    const double u = std::fmod(t, two_t);
    return kick * (u <= interrogation_T ? u : two_t - u);
}

PulseTimeline build_timeline(int q, int n, double t_interrogation) {
    PulseScheme scheme(q, n, t_interrogation);
    PulseTimeline timeline{{}, {}, scheme};
    timeline.pulse_times.reserve(static_cast<std::size_t>(scheme.total_pulses_NP));
    timeline.pulse_roles.reserve(static_cast<std::size_t>(scheme.total_pulses_NP));

    auto emit = [&](double t, PulseRole role, int count) {
        for (int i = 0; i < count; ++i) {
            timeline.pulse_times.push_back(t);
            timeline.pulse_roles.push_back(role);
        }
    };
    emit(0.0, PulseRole::beam_splitter_sequence, n);
    for (int j = 1; j <= 2 * q - 1; ++j)
        emit(j * t_interrogation, PulseRole::mirror_sequence, 2 * n - 1);
    emit(2.0 * q * t_interrogation, PulseRole::final_beam_splitter, n);
    return timeline;
}

double arm_separation_peak(int n, double t_interrogation, const AtomSpecies& species,
                           double hbar) {
    if (n < 0 || t_interrogation <= 0.0)
        throw std::domain_error("arm_separation_peak: invalid scheme");
    return n * species.recoil_velocity(hbar) * t_interrogation;
}

ArmTrajectory arm_paths(int q, int n, double t_interrogation, double z0, double v0,
                        const AtomSpecies& species, double g, double hbar) {
    if (q < 1 || n < 0 || t_interrogation <= 0.0)
        throw std::domain_error("arm_paths: invalid scheme");
    const double kick = n * species.recoil_velocity(hbar);
    return ArmTrajectory{z0, v0, g, t_interrogation, q, n, kick,
                         kick * t_interrogation};
}

std::pair<double, double> envelope(const ArmTrajectory& traj) {
    const double dur = traj.duration();
    const double t_seg = traj.interrogation_T;

    // lower arm is a single downward parabola, its minimum sits at an endpoint
    const double min_lower = std::min(traj.lower(0.0), traj.lower(dur));

    // upper arm: parabola plus a linear ramp on each [jT, (j+1)T];
    // candidates are segment endpoints and interior stationary points
    double max_upper = std::max(traj.upper(0.0), traj.upper(dur));
    for (int j = 0; j < 2 * traj.diamonds_Q; ++j) {
        const double t0 = j * t_seg;
        const double t1 = (j + 1) * t_seg;
        max_upper = std::max({max_upper, traj.upper(t0), traj.upper(t1)});
        const double slope = (j % 2 == 0) ? traj.kick : -traj.kick;
        const double t_star = (traj.v0 + slope) / traj.g;
        if (t_star > t0 && t_star < t1)
            max_upper = std::max(max_upper, traj.upper(t_star));
    }
    return {min_lower, max_upper};
}

FeasibilityReport check_confinement(const ArmTrajectory& traj, double window_height_m) {
    if (window_height_m <= 0.0)
        throw std::domain_error("check_confinement: window height must be positive");
    const auto [min_lower, max_upper] = envelope(traj);
    const bool feasible = min_lower >= -confinement_tol &&
                          max_upper <= window_height_m + confinement_tol;
    const bool bottom = min_lower < confinement_tol;
    const bool top = max_upper > window_height_m - confinement_tol;
    Binding binding = Binding::none;
    if (bottom && top)
        binding = Binding::both;
    else if (bottom)
        binding = Binding::bottom;
    else if (top)
        binding = Binding::top;
    return FeasibilityReport{feasible, min_lower, max_upper, binding};
}

HeightSolution min_required_height(int q, int n, double t_interrogation,
                                   const AtomSpecies& species, double g, double hbar) {
    const ArmTrajectory base = arm_paths(q, n, t_interrogation, 0.0, 0.0, species, g, hbar);

    auto span = [&](double v0) {
        ArmTrajectory traj = base;
        traj.v0 = v0;
        const auto [lo, hi] = envelope(traj);
        return hi - lo;
    };

    // span(v0) is a maximum of convex pieces minus a concave floor, hence
    // convex; golden-section is reliable on this bracket
    const double v_hi = 2.0 * g * q * t_interrogation + 2.0 * base.kick;
    auto [v0, h_req] = detail::golden_min(span, 0.0, v_hi, 1e-12 * std::max(1.0, v_hi), 200);
    if (!std::isfinite(h_req))
        throw std::runtime_error("min_required_height: launch optimization failed to converge");

    ArmTrajectory traj = base;
    traj.v0 = v0;
    const auto [lo, hi] = envelope(traj);
    (void)hi;
    return HeightSolution{h_req, lo == 0.0 ? 0.0 : -lo, v0};
}

}  // namespace gwfountain
