#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gwfountain/noise_budget.hpp"
#include "gwfountain/numeric_optimum.hpp"
#include "gwfountain/signal_response.hpp"

using namespace gwfountain;

namespace {

SearchConstraints proposal_budget(double f, double b) {
    SearchConstraints c;
    c.frequency_f = f;
    c.baseline_B = b;
    c.noise.fixed_phase_uncertainty = 1e-5;
    c.np_max = 160000;
    return c;
}

SearchConstraints loss_budget(double f, double b, double lambda) {
    SearchConstraints c;
    c.frequency_f = f;
    c.baseline_B = b;
    c.noise.loss_lambda = lambda;
    c.noise.initial_atoms_N0 = 1e6;
    return c;
}

// reference: exhaustive scan over every admissible (Q, N) pair
OptimumRecord brute_force(const SearchConstraints& c) {
    const double t = resonant_interrogation_time(c.frequency_f);
    const double omega = 2.0 * pi * c.frequency_f;
    const double tau_b = c.baseline_B / c.constants.c;
    OptimumRecord best;
    best.delta_h = 1e300;
    for (int q = 1; q <= c.q_max; ++q) {
        if (PulseScheme::total_pulses(q, 2) > c.np_max)
            break;
        for (int n = 2;; n += c.enforce_even_N ? 2 : 1) {
            const long long np = PulseScheme::total_pulses(q, n);
            if (np > c.np_max)
                break;
            double height, z0, v0;
            if (c.enforce_arm_separation) {
                const auto sol =
                    min_required_height(q, n, t, c.species, c.constants.g, c.constants.hbar);
                height = sol.h_req;
                z0 = sol.z0;
                v0 = sol.v0;
            } else {
                height = 0.5 * c.constants.g * (q * t) * (q * t);
                z0 = 0.0;
                v0 = c.constants.g * q * t;
            }
            if (height >= c.baseline_B)
                continue;
            const double su =
                strain_uncertainty(c.noise, c.wave_number_k(), c.baseline_B - height,
                                   n, q, static_cast<double>(np), omega * tau_b * n)
                    .delta_h;
            if (su < best.delta_h) {
                best.feasible = true;
                best.delta_h = su;
                best.diamonds_Q = q;
                best.lmt_N = n;
                best.total_pulses_NP = np;
                best.height_H = height;
                best.z0 = z0;
                best.v0 = v0;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("optimizer respects the pulse budget and evenness") {
    for (long long np_max : {200LL, 5000LL, 160000LL}) {
        auto c = proposal_budget(1.0, 100.0);
        c.np_max = np_max;
        const auto rec = optimize_at_frequency(c);
        CHECK(rec.feasible);
        CHECK(rec.total_pulses_NP <= np_max);
        CHECK(rec.lmt_N % 2 == 0);
        CHECK(rec.diamonds_Q >= 1);
        CHECK(PulseScheme::total_pulses(rec.diamonds_Q, rec.lmt_N) ==
              rec.total_pulses_NP);
    }
}

TEST_CASE("record geometry is self-consistent and confined") {
    const auto rec = optimize_at_frequency(proposal_budget(0.5, 100.0));
    CHECK(rec.interrogation_T == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rec.total_time_TAI ==
          doctest::Approx(2.0 * rec.diamonds_Q * rec.interrogation_T).epsilon(1e-15));
    CHECK(rec.separation_L == doctest::Approx(100.0 - rec.height_H).epsilon(1e-12));
    CHECK(rec.ell == doctest::Approx(rec.height_H / 100.0).epsilon(1e-12));
    CHECK(rec.f_min == doctest::Approx(min_resonant_frequency(100.0, 9.80665)));

    // replay the witness kinematics against the reported window
    const auto traj = arm_paths(rec.diamonds_Q, rec.lmt_N, rec.interrogation_T, rec.z0,
                                rec.v0, AtomSpecies::sr87(), 9.80665);
    const auto report = check_confinement(traj, rec.height_H + 2.0 * confinement_tol);
    CHECK(report.feasible);
}

TEST_CASE("optimizer matches exhaustive brute force on small budgets") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> f_dist(0.4, 5.0);
    for (int trial = 0; trial < 4; ++trial) {
        auto c = proposal_budget(f_dist(rng), trial % 2 == 0 ? 100.0 : 2000.0);
        c.np_max = 200;
        const auto fast = optimize_at_frequency(c);
        const auto slow = brute_force(c);
        REQUIRE(slow.feasible);
        CHECK(fast.delta_h == doctest::Approx(slow.delta_h).epsilon(1e-12));
        CHECK(fast.diamonds_Q == slow.diamonds_Q);
        CHECK(fast.lmt_N == slow.lmt_N);
    }
    // the same holds in shot-noise mode where pruning is loss-aware
    auto c = loss_budget(0.9, 100.0, 5e-3);
    c.np_max = 400;
    const auto fast = optimize_at_frequency(c);
    const auto slow = brute_force(c);
    CHECK(fast.delta_h == doctest::Approx(slow.delta_h).epsilon(1e-12));
    CHECK(fast.diamonds_Q == slow.diamonds_Q);
    CHECK(fast.lmt_N == slow.lmt_N);
}

TEST_CASE("a larger budget never hurts") {
    double prev = 1e300;
    for (long long np_max : {50LL, 200LL, 1000LL, 10000LL}) {
        auto c = proposal_budget(1.0, 100.0);
        c.np_max = np_max;
        const double dh = optimize_at_frequency(c).delta_h;
        CHECK(dh <= prev * (1.0 + 1e-12));
        prev = dh;
    }
}

TEST_CASE("arm separation can only worsen the optimum") {
    for (double f : {0.3, 0.5, 2.0}) {
        auto on = proposal_budget(f, 100.0);
        auto off = on;
        off.enforce_arm_separation = false;
        const double dh_on = optimize_at_frequency(on).delta_h;
        const double dh_off = optimize_at_frequency(off).delta_h;
        CHECK(dh_on >= dh_off * (1.0 - 1e-12));
    }
}

TEST_CASE("proxy mode reproduces the fountain-equality kinematics") {
    auto c = proposal_budget(1.0, 100.0);
    c.enforce_arm_separation = false;
    const auto rec = optimize_at_frequency(c);
    const double qt = rec.diamonds_Q * rec.interrogation_T;
    CHECK(rec.height_H == doctest::Approx(0.5 * 9.80665 * qt * qt).epsilon(1e-12));
    CHECK(rec.z0 == 0.0);
    CHECK(rec.v0 == doctest::Approx(9.80665 * qt).epsilon(1e-12));
}

TEST_CASE("sweep marks points below the resonant cutoff infeasible") {
    const auto c = proposal_budget(1.0, 100.0);
    CHECK_THROWS_AS(optimize_at_frequency(proposal_budget(0.05, 100.0)),
                    std::domain_error);
    const auto recs = sweep(c, {0.05, 0.5, 1.0});
    REQUIRE(recs.size() == 3);
    CHECK_FALSE(recs[0].feasible);
    CHECK(recs[0].binding == "infeasible");
    CHECK(recs[1].feasible);
    CHECK(recs[2].feasible);
    CHECK_THROWS_AS(sweep(c, {1.0, 1.0}), std::domain_error);
}

TEST_CASE("sweeps are deterministic across worker counts") {
    const auto c = proposal_budget(1.0, 100.0);
    const std::vector<double> grid{0.3, 0.7, 1.3, 2.9, 6.1};
    const auto a = sweep(c, grid, 1);
    const auto b = sweep(c, grid, 4);
    const auto c2 = sweep(c, grid, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].delta_h == b[i].delta_h);
        CHECK(a[i].diamonds_Q == b[i].diamonds_Q);
        CHECK(a[i].lmt_N == b[i].lmt_N);
        CHECK(a[i].v0 == b[i].v0);
        CHECK(b[i].delta_h == c2[i].delta_h);
        CHECK(b[i].v0 == c2[i].v0);
    }
}

TEST_CASE("comparison rows pair numeric and analytic optima") {
    const auto c = loss_budget(1.0, 2000.0, 1.1e-3);
    const auto rows = compare_with_analytic(c, {0.01, 0.5, 2.0});
    REQUIRE(rows.size() == 3);
    // below the cutoff: no numeric result, NaN gap
    CHECK_FALSE(rows[0].numeric.feasible);
    CHECK(std::isnan(rows[0].gap_rel));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].numeric.feasible);
        CHECK(rows[i].analytic_delta_h > 0.0);
        CHECK(rows[i].gap_rel ==
              doctest::Approx((rows[i].numeric.delta_h - rows[i].analytic_delta_h) /
                              rows[i].analytic_delta_h)
                  .epsilon(1e-12));
        // integer restrictions and arm separation cannot beat the relaxation
        // by more than rounding noise
        CHECK(rows[i].gap_rel > -1e-6);
    }
}

TEST_CASE("tiny budgets are rejected") {
    auto c = proposal_budget(1.0, 100.0);
    c.np_max = 6;
    CHECK_THROWS_AS(optimize_at_frequency(c), std::domain_error);
}
