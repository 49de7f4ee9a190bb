#include "gwfountain/numeric_optimum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "gwfountain/noise_budget.hpp"
#include "gwfountain/signal_response.hpp"

namespace gwfountain {

namespace {

struct Candidate {
    bool feasible = false;
    double delta_h = std::numeric_limits<double>::infinity();
    int q = 0;
    int n = 0;
    double height = 0.0;
    double z0 = 0.0;
    double v0 = 0.0;
};

bool better(const Candidate& a, const Candidate& b) {
    // smallest delta_h; ties prefer simpler schemes
    if (!a.feasible)
        return false;
    if (!b.feasible)
        return true;
    if (a.delta_h != b.delta_h)
        return a.delta_h < b.delta_h;
    if (a.q != b.q)
        return a.q < b.q;
    if (a.n != b.n)
        return a.n < b.n;
    return a.height < b.height;
}

class FrequencyScan {
  public:
    FrequencyScan(const SearchConstraints& c, double f)
        : c_(c),
          f_(f),
          t_(resonant_interrogation_time(f)),
          omega_(2.0 * pi * f),
          tau_b_(c.baseline_B / c.constants.c),
          xi_(xi_at_resonance(c.baseline_B, f, c.constants.g)),
          loss_rate_(!c.noise.fixed_phase_uncertainty && !c.noise.atom_flux
                         ? -std::log1p(-c.noise.loss_lambda)
                         : 0.0) {}

    Candidate run() {
        const long long np_cap_q = (c_.np_max - 1) / 6;
        const int q_max_eff = static_cast<int>(std::min<long long>(
            {c_.q_max, np_cap_q, static_cast<long long>(std::floor(xi_))}));
        if (q_max_eff < 1)
            throw std::domain_error("optimize_at_frequency: below resonant-mode cutoff");

        Candidate best;
        for (int q = 1; q <= q_max_eff; ++q) {
            const int n_hi = max_even_n(q);
            if (n_hi < n_min())
                continue;
            if (best.feasible && lower_bound_delta_h(q, n_hi) > best.delta_h)
                continue;
            scan_n(q, n_hi, best);
        }
        if (!best.feasible)
            throw std::domain_error("optimize_at_frequency: baseline cannot confine any scheme");
        return best;
    }

    OptimumRecord to_record(const Candidate& cand) const {
        OptimumRecord rec;
        rec.feasible = true;
        rec.frequency_f = f_;
        rec.diamonds_Q = cand.q;
        rec.lmt_N = cand.n;
        rec.total_pulses_NP = PulseScheme::total_pulses(cand.q, cand.n);
        rec.height_H = cand.height;
        rec.ell = cand.height / c_.baseline_B;
        rec.separation_L = c_.baseline_B - cand.height;
        rec.z0 = cand.z0;
        rec.v0 = cand.v0;
        rec.interrogation_T = t_;
        rec.total_time_TAI = 2.0 * cand.q * t_;
        rec.delta_h = cand.delta_h;
        rec.f_min = min_resonant_frequency(c_.baseline_B, c_.constants.g);

        const auto traj = arm_paths(cand.q, cand.n, t_, cand.z0, cand.v0, c_.species,
                                    c_.constants.g, c_.constants.hbar);
        rec.binding = to_string(check_confinement(traj, cand.height + confinement_tol)
                                    .binding_constraint);
        return rec;
    }

  private:
    int n_min() const { return 2; }

    int max_even_n(int q) const {
        const double bound = 0.5 + static_cast<double>(c_.np_max - 1) / (4.0 * q);
        long long n = static_cast<long long>(std::ceil(bound)) - 1;  // N < bound, strictly
        while (n >= 1 && !(static_cast<double>(n) < bound))
            --n;
        if (c_.enforce_even_N && n % 2 != 0)
            --n;
        return static_cast<int>(std::min<long long>(n, std::numeric_limits<int>::max()));
    }

    double l_upper_bound(int q) const {
        const double h_floor = 0.5 * c_.constants.g * (q * t_) * (q * t_);
        return c_.baseline_B - h_floor;
    }

    // Noise-per-response minimizer over continuous N; with per-pulse loss,
    // dPhi(NP)/N turns upward at N = 1/(2 Q |ln(1-lambda)|).
    double n_noise_optimum(int q) const {
        if (loss_rate_ <= 0.0)
            return std::numeric_limits<double>::infinity();
        return 1.0 / (2.0 * q * loss_rate_);
    }

    // Optimistic bound at a concrete N: L cannot exceed B minus the minimal
    // ballistic span g(QT)^2/2, and |sinc| <= 1.
    double per_n_bound(int q, double n, double l_ub) const {
        const double np = 4.0 * q * n - 2.0 * q + 1.0;
        double dphi;
        try {
            dphi = phase_uncertainty(c_.noise, np);
        } catch (const std::overflow_error&) {
            return std::numeric_limits<double>::infinity();
        }
        return dphi / (2.0 * c_.wave_number_k() * l_ub * n * q);
    }

    // Optimistic bound over the whole N range of this Q.
    double lower_bound_delta_h(int q, int n_hi) const {
        const double l_ub = l_upper_bound(q);
        if (l_ub <= 0.0)
            return std::numeric_limits<double>::infinity();
        const double n_best = std::clamp(n_noise_optimum(q), static_cast<double>(n_min()),
                                         static_cast<double>(n_hi));
        return per_n_bound(q, n_best, l_ub);
    }

    Candidate evaluate(int q, int n) const {
        Candidate cand;
        cand.q = q;
        cand.n = n;

        double height, z0, v0;
        if (c_.enforce_arm_separation) {
            const auto sol = min_required_height(q, n, t_, c_.species, c_.constants.g,
                                                 c_.constants.hbar);
            height = sol.h_req;
            z0 = sol.z0;
            v0 = sol.v0;
        } else {
            // fountain-time equality proxy, H from Q = xi sqrt(ell)
            height = 0.5 * c_.constants.g * (q * t_) * (q * t_);
            z0 = 0.0;
            v0 = c_.constants.g * q * t_;
        }
        const double separation = c_.baseline_B - height;
        if (separation <= 0.0)
            return cand;

        const double sinc_abs = std::abs(sinc(omega_ * tau_b_ * n));
        if (sinc_abs <= 0.0)
            return cand;

        const double np = static_cast<double>(PulseScheme::total_pulses(q, n));
        double dphi;
        try {
            dphi = phase_uncertainty(c_.noise, np);
        } catch (const std::overflow_error&) {
            return cand;
        }

        cand.feasible = true;
        cand.delta_h = dphi / (2.0 * c_.wave_number_k() * separation * n * q * sinc_abs);
        cand.height = height;
        cand.z0 = z0;
        cand.v0 = v0;
        return cand;
    }

    void consider(int q, int n, Candidate& best) const {
        const Candidate cand = evaluate(q, n);
        if (better(cand, best))
            best = cand;
    }

    void scan_n(int q, int n_hi, Candidate& best) const {
        const int step = c_.enforce_even_N ? 2 : 1;
        const int n_lo = n_min();
        const int count = (n_hi - n_lo) / step + 1;
        const double l_ub = l_upper_bound(q);
        const double n_turn = n_noise_optimum(q);

        // past the noise turnover the per-N optimistic bound is increasing,
        // so once it exceeds the incumbent no larger N can win
        auto prunable = [&](int n) {
            return best.feasible && l_ub > 0.0 && static_cast<double>(n) > n_turn &&
                   per_n_bound(q, n, l_ub) > best.delta_h;
        };

        if (count <= 512) {
            for (int n = n_lo; n <= n_hi; n += step) {
                if (prunable(n))
                    break;
                consider(q, n, best);
            }
            return;
        }

        // coarse scan, then a dense pass around the best coarse point
        const int coarse_points = 128;
        Candidate coarse_best;
        int best_idx = 0;
        std::vector<int> idx(coarse_points);
        for (int i = 0; i < coarse_points; ++i)
            idx[i] = static_cast<int>(static_cast<long long>(i) * (count - 1) /
                                      (coarse_points - 1));
        for (int i = 0; i < coarse_points; ++i) {
            const int n = n_lo + idx[i] * step;
            if (prunable(n))
                break;
            const Candidate cand = evaluate(q, n);
            if (better(cand, coarse_best)) {
                coarse_best = cand;
                best_idx = i;
            }
        }
        if (better(coarse_best, best))
            best = coarse_best;

        const int lo_idx = idx[std::max(0, best_idx - 1)];
        const int hi_idx = idx[std::min(coarse_points - 1, best_idx + 1)];
        for (int i = lo_idx; i <= hi_idx; ++i) {
            const int n = n_lo + i * step;
            if (prunable(n))
                break;
            consider(q, n, best);
        }
    }

    const SearchConstraints& c_;
    double f_;
    double t_;
    double omega_;
    double tau_b_;
    double xi_;
    double loss_rate_;  // -ln(1-lambda), zero when the noise ignores NP
};

OptimumRecord infeasible_record(const SearchConstraints& c, double f) {
    OptimumRecord rec;
    rec.feasible = false;
    rec.frequency_f = f;
    rec.binding = "infeasible";
    rec.f_min = min_resonant_frequency(c.baseline_B, c.constants.g);
    return rec;
}

template <typename Work>
void run_indexed(std::size_t count, int workers, Work&& work) {
    unsigned n_workers = workers > 0 ? static_cast<unsigned>(workers)
                                     : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, count));
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                work(i);
        });
    for (auto& th : pool)
        th.join();
}

}  // namespace

OptimumRecord optimize_at_frequency(const SearchConstraints& constraints) {
    if (constraints.np_max < 7)
        throw std::domain_error("optimize_at_frequency: pulse budget below the smallest scheme");
    if (constraints.frequency_f <= 0.0)
        throw std::domain_error("optimize_at_frequency: frequency must be positive");
    constraints.noise.validate();
    FrequencyScan scan(constraints, constraints.frequency_f);
    return scan.to_record(scan.run());
}

std::vector<OptimumRecord> sweep(const SearchConstraints& constraints,
                                 const std::vector<double>& frequency_grid_hz,
                                 int workers) {
    for (std::size_t i = 1; i < frequency_grid_hz.size(); ++i)
        if (frequency_grid_hz[i] <= frequency_grid_hz[i - 1])
            throw std::domain_error("sweep: frequency grid must be strictly increasing");

    std::vector<OptimumRecord> records(frequency_grid_hz.size());
    run_indexed(frequency_grid_hz.size(), workers, [&](std::size_t i) {
        SearchConstraints point = constraints;
        point.frequency_f = frequency_grid_hz[i];
        try {
            records[i] = optimize_at_frequency(point);
        } catch (const std::domain_error&) {
            records[i] = infeasible_record(constraints, frequency_grid_hz[i]);
        }
    });
    return records;
}

std::vector<ComparisonRow> compare_with_analytic(const SearchConstraints& constraints,
                                                 const std::vector<double>& frequency_grid_hz,
                                                 int workers) {
    const auto records = sweep(constraints, frequency_grid_hz, workers);
    const bool shot_noise_mode = !constraints.noise.fixed_phase_uncertainty &&
                                 !constraints.noise.atom_flux &&
                                 constraints.noise.loss_lambda > 0.0;

    std::vector<ComparisonRow> rows;
    rows.reserve(records.size());
    for (const auto& rec : records) {
        ComparisonRow row{rec, AnalyticOptimum{}, std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN()};
        try {
            row.analytic = shot_noise_mode
                               ? select_regime(constraints.noise.loss_lambda,
                                               constraints.baseline_B, rec.frequency_f,
                                               constraints.constants.g)
                               : select_regime(0.0, constraints.baseline_B, rec.frequency_f,
                                               constraints.constants.g,
                                               static_cast<double>(constraints.np_max));
            row.analytic_delta_h = analytic_delta_h(row.analytic, constraints.noise,
                                                    constraints.wave_number_k(),
                                                    constraints.baseline_B);
            if (rec.feasible)
                row.gap_rel = (rec.delta_h - row.analytic_delta_h) / row.analytic_delta_h;
        } catch (const std::domain_error&) {
            // below the analytic cutoff; leave the analytic side empty
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gwfountain
