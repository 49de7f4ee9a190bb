#ifndef GWFOUNTAIN_NUMERIC_OPTIMUM_HPP
#define GWFOUNTAIN_NUMERIC_OPTIMUM_HPP

#include <string>
#include <vector>

#include "gwfountain/analytic_optimum.hpp"
#include "gwfountain/core_model.hpp"
#include "gwfountain/fountain_trajectory.hpp"

// Constrained optimization at resonance: integer Q, even integer N,
// continuous launch kinematics, maximizing sensitivity under baseline
// confinement, a total-pulse budget, and fountain-time limits.

namespace gwfountain {

struct SearchConstraints {
    double frequency_f;   // Hz
    double baseline_B;    // m
    AtomSpecies species = AtomSpecies::sr87();
    NoiseBudget noise;
    PhysicalConstants constants;
    long long np_max = 160000;  // total-pulse budget
    int q_max = 1000;
    bool enforce_arm_separation = true;
    bool enforce_even_N = true;
    double wave_number_k() const { return species.wave_number; }
};

struct OptimumRecord {
    bool feasible = false;
    double frequency_f = 0.0;  // Hz
    int diamonds_Q = 0;
    int lmt_N = 0;
    long long total_pulses_NP = 0;
    double ell = 0.0;   // H / B
    double height_H = 0.0;  // m
    double separation_L = 0.0;  // m
    double z0 = 0.0;    // m
    double v0 = 0.0;    // m/s
    double interrogation_T = 0.0;  // s
    double total_time_TAI = 0.0;   // s
    double delta_h = 0.0;  // noise-normalization units
    std::string binding = "none";
    double f_min = 0.0;  // Hz, resonant-mode cutoff of this baseline
};

struct ComparisonRow {
    OptimumRecord numeric;
    AnalyticOptimum analytic;
    double analytic_delta_h;
    double gap_rel;  // (numeric - analytic) / analytic
};

// Exhaustive scan over Q and even N within the per-Q pulse-budget bound.
OptimumRecord optimize_at_frequency(const SearchConstraints& constraints);

// One record per grid frequency; entries below the resonant cutoff become
// explicit infeasible records. Deterministic; grid points evaluated
// concurrently with results ordered by input index.
std::vector<OptimumRecord> sweep(const SearchConstraints& constraints,
                                 const std::vector<double>& frequency_grid_hz,
                                 int workers = 0);

// Numeric records paired with the corresponding analytic optimum.
std::vector<ComparisonRow> compare_with_analytic(const SearchConstraints& constraints,
                                                 const std::vector<double>& frequency_grid_hz,
                                                 int workers = 0);

}  // namespace gwfountain

#endif
