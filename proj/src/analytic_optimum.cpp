#include "gwfountain/analytic_optimum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwfountain/detail/golden.hpp"
#include "gwfountain/noise_budget.hpp"

namespace gwfountain {

namespace {

// natural log throughout; the 2/lambda expansion only follows from ln
double log1m(double loss_lambda) {
    if (loss_lambda <= 0.0 || loss_lambda >= 1.0)
        throw std::domain_error("analytic optimum: loss per pulse must lie in (0, 1)");
    return std::log1p(-loss_lambda);
}

double continuous_n(double np, double q) { return (np + 2.0 * q - 1.0) / (4.0 * q); }

AnalyticOptimum interior_optimum(double loss_lambda, double xi) {
    const double ell = optimal_height_lossy(xi, loss_lambda);
    const double np = optimal_np_exact(loss_lambda, xi);
    const double q = xi * std::sqrt(ell);
    return AnalyticOptimum{ell, np, q, continuous_n(np, q), Regime::interior,
                           objective_bracket(ell, np, xi, loss_lambda)};
}

}  // namespace

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::interior: return "interior";
        case Regime::q1_clamped: return "Q1_clamped";
        case Regime::n2_clamped: return "N2_clamped";
        case Regime::lossless: return "lossless";
    }
    return "unknown";
}

double objective_bracket(double ell, double np, double xi, double loss_lambda) {
    const double half = (np - 1.0) / 2.0;
    const double survival = loss_lambda > 0.0
                                ? std::exp(half * std::log1p(-loss_lambda))
                                : 1.0;
    return survival * (1.0 - ell) * (xi * std::sqrt(ell) + half);
}

double optimal_height_lossy(double xi, double loss_lambda) {
    if (loss_lambda == 0.0)
        throw std::domain_error("optimal_height_lossy: lossless case requires fixed N_P");
    if (xi <= 0.0)
        throw std::domain_error("optimal_height_lossy: xi must be positive");
    const double a = 1.0 / (xi * log1m(loss_lambda));  // negative
    const double sqrt_ell = a + std::sqrt(a * a + 1.0);
    return sqrt_ell * sqrt_ell;
}

double optimal_np_exact(double loss_lambda, double xi) {
    if (loss_lambda == 0.0)
        throw std::domain_error("optimal_np_exact: no finite optimum for lossless pulses");
    const double inv_log = 1.0 / log1m(loss_lambda);
    return -4.0 * inv_log - 2.0 * std::sqrt(inv_log * inv_log + xi * xi) + 1.0;
}

double approx_np(double loss_lambda, double xi) {
    if (loss_lambda <= 0.0 || loss_lambda >= 1.0)
        throw std::domain_error("approx_np: loss per pulse must lie in (0, 1)");
    return 2.0 / loss_lambda + (-1.0 / 6.0 - xi * xi) * loss_lambda;
}

double optimal_q_lossy(double loss_lambda, double baseline_m, double f_hz, double g) {
    const double inv_log = 1.0 / log1m(loss_lambda);
    const double xi2 = 8.0 * baseline_m * f_hz * f_hz / g;
    return inv_log + std::sqrt(inv_log * inv_log + xi2);
}

AnalyticOptimum optimum_q1_regime(double loss_lambda, double xi) {
    if (xi < 1.0)
        throw std::domain_error("optimum_q1_regime: below resonant-mode cutoff");
    const double np = -2.0 / log1m(loss_lambda) - 1.0;
    const double ell = 1.0 / (xi * xi);
    return AnalyticOptimum{ell, np, 1.0, (np + 1.0) / 4.0, Regime::q1_clamped,
                           objective_bracket(ell, np, xi, loss_lambda)};
}

AnalyticOptimum optimum_n2_regime(double loss_lambda, double xi) {
    if (loss_lambda < 0.0 || loss_lambda >= 1.0)
        throw std::domain_error("optimum_n2_regime: loss per pulse must lie in [0, 1)");
    const double log_term = loss_lambda > 0.0 ? std::log1p(-loss_lambda) : 0.0;
    auto objective = [&](double ell) {
        const double s = xi * std::sqrt(ell);
        return 4.0 * s * std::exp(3.0 * s * log_term) * (1.0 - ell);
    };
    auto [ell, value] = detail::golden_max(objective, 1e-12, 1.0 - 1e-12, 1e-10, 200);
    if (!std::isfinite(value) || value <= 0.0)
        throw std::runtime_error("optimum_n2_regime: height maximization failed to converge");
    const double q = xi * std::sqrt(ell);
    const double np = 6.0 * q + 1.0;
    return AnalyticOptimum{ell, np, q, 2.0, Regime::n2_clamped, value};
}

double optimal_height_lossless(double np, double xi) {
    if (np < 1.0 || xi <= 0.0)
        throw std::domain_error("optimal_height_lossless: need N_P >= 1 and xi > 0");
    const double r = (np - 1.0) / (6.0 * xi);
    const double sqrt_ell = std::sqrt(1.0 / 3.0 + r * r) - r;
    return sqrt_ell * sqrt_ell;
}

AnalyticOptimum optimum_lossless(double np, double xi) {
    const double ell = optimal_height_lossless(np, xi);
    const double q = xi * std::sqrt(ell);
    const double n = continuous_n(np, q);

    auto record = [&](double ell_c, double q_c) {
        return AnalyticOptimum{ell_c, np, q_c, continuous_n(np, q_c), Regime::lossless,
                               objective_bracket(ell_c, np, xi, 0.0)};
    };

    if (q >= 1.0 && n >= 2.0)
        return record(ell, q);

    AnalyticOptimum best{0, 0, 0, 0, Regime::lossless, -1.0};
    if (q < 1.0) {
        if (xi < 1.0)
            throw std::domain_error("optimum_lossless: below resonant-mode cutoff");
        best = record(1.0 / (xi * xi), 1.0);
    }
    if (n < 2.0) {
        const double q_n2 = (np - 1.0) / 6.0;
        if (q_n2 >= 1.0) {
            const double ell_n2 = std::min(1.0 - 1e-12, (q_n2 / xi) * (q_n2 / xi));
            auto cand = record(ell_n2, q_n2);
            if (cand.objective > best.objective)
                best = cand;
        }
    }
    if (best.objective < 0.0)
        throw std::domain_error("optimum_lossless: no admissible clamped configuration");
    return best;
}

AnalyticOptimum select_regime(double loss_lambda, double baseline_m, double f_hz,
                              double g, std::optional<double> np_lossless) {
    const double xi = xi_at_resonance(baseline_m, f_hz, g);
    if (loss_lambda == 0.0) {
        if (!np_lossless)
            throw std::domain_error("select_regime: lossless case requires fixed N_P");
        return optimum_lossless(*np_lossless, xi);
    }

    const AnalyticOptimum interior = interior_optimum(loss_lambda, xi);
    const bool q_ok = interior.diamonds_q >= 1.0;
    const bool n_ok = interior.lmt_n >= 2.0;
    if (q_ok && n_ok)
        return interior;

    AnalyticOptimum best = interior;
    best.objective = -1.0;  // interior invalid once a clamp triggers
    if (!q_ok) {
        auto q1 = optimum_q1_regime(loss_lambda, xi);
        if (q1.objective > best.objective)
            best = q1;
    }
    if (!n_ok) {
        auto n2 = optimum_n2_regime(loss_lambda, xi);
        if (n2.objective > best.objective)
            best = n2;
    }
    return best;
}

double min_resonant_frequency(double baseline_m, double g) {
    if (baseline_m <= 0.0)
        throw std::domain_error("min_resonant_frequency: baseline must be positive");
    return std::sqrt(g / (8.0 * baseline_m));
}

RegimeBoundaries bottom_constraint_thresholds(double f_hz, double baseline_m,
                                              const AtomSpecies& species, double g) {
    if (f_hz <= 0.0 || baseline_m <= 0.0)
        throw std::domain_error("bottom_constraint_thresholds: inputs must be positive");
    const double eta = species.eta(g);
    const double lambda_q1 = f_hz / eta;
    const double a = g / (8.0 * baseline_m);
    const double lambda_hf = std::pow(8.0 / eta * a * a * a / std::pow(f_hz, 5.0), 0.25);
    return RegimeBoundaries{min_resonant_frequency(baseline_m, g), lambda_q1, lambda_hf};
}

double analytic_delta_h(const AnalyticOptimum& opt, const NoiseBudget& noise,
                        double k, double baseline_m) {
    const double separation = (1.0 - opt.rel_height_ell) * baseline_m;
    const double dphi = phase_uncertainty(noise, opt.total_pulses_np);
    return dphi / (2.0 * k * separation * opt.lmt_n * opt.diamonds_q);
}

}  // namespace gwfountain
