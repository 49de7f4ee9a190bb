#ifndef GWFOUNTAIN_ANALYTIC_OPTIMUM_HPP
#define GWFOUNTAIN_ANALYTIC_OPTIMUM_HPP

#include <optional>
#include <string>

#include "gwfountain/core_model.hpp"

// Closed-form optima of the strain uncertainty with respect to the
// relative fountain height and the total pulse number, together with the
// clamped boundary regimes and the arm-separation regime thresholds.
// Q and N are continuous here; integerization happens in numeric_optimum.

namespace gwfountain {

enum class Regime { interior, q1_clamped, n2_clamped, lossless };

std::string to_string(Regime regime);

struct AnalyticOptimum {
    double rel_height_ell;  // in (0, 1)
    double total_pulses_np; // continuous, not rounded
    double diamonds_q;      // >= 1
    double lmt_n;           // >= 2
    Regime regime;
    double objective;       // maximized proportionality bracket, Delta h ~ 1/objective
};

struct RegimeBoundaries {
    double f_min_resonant;     // Hz
    double lambda_bottom_q1;   // loss threshold, single-diamond branch
    double lambda_bottom_highf;// loss threshold, Q>1 / N>2 branch
};

// Proportionality bracket maximized by the analytic optimum:
//   (1-lambda)^{(NP-1)/2} (1-ell) (xi sqrt(ell) + (NP-1)/2).
double objective_bracket(double ell, double np, double xi, double loss_lambda);

// Optimal relative height for lossy operation.
double optimal_height_lossy(double xi, double loss_lambda);

// Exact continuous optimum of the total pulse number.
double optimal_np_exact(double loss_lambda, double xi);

// Small-loss expansion N_P ~ 2/lambda + (-1/6 - xi^2) lambda.
double approx_np(double loss_lambda, double xi);

// Continuous optimal diamond count; below 1 the Q=1 regime applies.
double optimal_q_lossy(double loss_lambda, double baseline_m, double f_hz, double g);

// Boundary regime clamped at a single diamond.
AnalyticOptimum optimum_q1_regime(double loss_lambda, double xi);

// Boundary regime clamped at N = 2; relative height from a bounded 1D
// maximization of 4 xi sqrt(ell) (1-lambda)^{3 xi sqrt(ell)} (1-ell).
AnalyticOptimum optimum_n2_regime(double loss_lambda, double xi);

// Lossless case: fixed N_P, optimize the relative height only.
double optimal_height_lossless(double np, double xi);

// Lossless optimum record, clamped to Q >= 1 and N >= 2.
AnalyticOptimum optimum_lossless(double np, double xi);

// Full regime selection at resonance for frequency f.
AnalyticOptimum select_regime(double loss_lambda, double baseline_m, double f_hz,
                              double g, std::optional<double> np_lossless = std::nullopt);

// f_min = sqrt(g/(8B)) below which resonant mode is impossible.
double min_resonant_frequency(double baseline_m, double g);

// Loss thresholds above which the lower arm reaches the baseline bottom.
RegimeBoundaries bottom_constraint_thresholds(double f_hz, double baseline_m,
                                              const AtomSpecies& species, double g);

// Strain uncertainty of an analytic optimum for a concrete noise budget
// and detector scale; mirrors the numeric objective for comparisons.
double analytic_delta_h(const AnalyticOptimum& opt, const NoiseBudget& noise,
                        double k, double baseline_m);

}  // namespace gwfountain

#endif
