#ifndef GWFOUNTAIN_FOUNTAIN_TRAJECTORY_HPP
#define GWFOUNTAIN_FOUNTAIN_TRAJECTORY_HPP

#include <string>
#include <utility>
#include <vector>

#include "gwfountain/core_model.hpp"

// Vertical two-arm trajectory of one multi-diamond interferometer with
// instantaneous LMT kicks: arm separation, spatial envelope, and
// confinement within an allotted height window.

namespace gwfountain {

enum class PulseRole { beam_splitter_sequence, mirror_sequence, final_beam_splitter };

struct PulseTimeline {
    std::vector<double> pulse_times;     // s, ordered; sequence durations collapsed
    std::vector<PulseRole> pulse_roles;  // one tag per pulse
    PulseScheme scheme;
};

// Lower arm is the unkicked ballistic parabola; the upper arm adds a
// triangular separation of period 2T peaking at N v_r T.
struct ArmTrajectory {
    double z0;    // m, launch position
    double v0;    // m/s, launch velocity
    double g;     // m/s^2
    double interrogation_T;  // s
    int diamonds_Q;
    int lmt_N;
    double kick;  // m/s, N * v_r
    double separation_peak;  // m, N v_r T

    double duration() const { return 2.0 * diamonds_Q * interrogation_T; }
    double lower(double t) const { return z0 + v0 * t - 0.5 * g * t * t; }
    double separation(double t) const;
    double upper(double t) const { return lower(t) + separation(t); }
};

enum class Binding { none, bottom, top, both };

std::string to_string(Binding binding);

struct FeasibilityReport {
    bool feasible;
    double min_lower_arm;  // m
    double max_upper_arm;  // m
    Binding binding_constraint;
};

// Smallest window height admitting a confined trajectory, with witness
// launch conditions. z0 normalizes the lower-arm minimum to zero.
struct HeightSolution {
    double h_req;  // m
    double z0;     // m
    double v0;     // m/s
};

PulseTimeline build_timeline(int q, int n, double t_interrogation);

// Delta z = N hbar k T / m
double arm_separation_peak(int n, double t_interrogation, const AtomSpecies& species,
                           double hbar = PhysicalConstants{}.hbar);

ArmTrajectory arm_paths(int q, int n, double t_interrogation, double z0, double v0,
                        const AtomSpecies& species, double g,
                        double hbar = PhysicalConstants{}.hbar);

// Exact extrema (min of lower arm, max of upper arm) via per-segment analysis.
std::pair<double, double> envelope(const ArmTrajectory& traj);

inline constexpr double confinement_tol = 1e-9;  // m

FeasibilityReport check_confinement(const ArmTrajectory& traj, double window_height_m);

HeightSolution min_required_height(int q, int n, double t_interrogation,
                                   const AtomSpecies& species, double g,
                                   double hbar = PhysicalConstants{}.hbar);

}  // namespace gwfountain

#endif
