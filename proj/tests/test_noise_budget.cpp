#include <doctest.h>

#include <cmath>

#include "gwfountain/core_model.hpp"
#include "gwfountain/noise_budget.hpp"

using namespace gwfountain;

TEST_CASE("detected atoms under per-pulse loss") {
    // 1e6 atoms through 1800 pulses at the state-of-the-art loss
    CHECK(detected_atoms(1e6, 1.1e-3, 1800.0) ==
          doctest::Approx(137918.85151836858).epsilon(1e-12));
    CHECK(detected_atoms(5e4, 0.0, 1e6) == 5e4);
    // exp/log1p path keeps precision where pow(1-lambda, np) would not
    CHECK(detected_atoms(1.0, 1e-12, 1e6) ==
          doctest::Approx(std::exp(-1e-6)).epsilon(1e-12));
    CHECK_THROWS_AS(detected_atoms(0.0, 0.1, 10.0), std::domain_error);
    CHECK_THROWS_AS(detected_atoms(1.0, 1.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(detected_atoms(1.0, 0.1, 0.5), std::domain_error);

    // strictly decreasing in both loss and pulse count
    CHECK(detected_atoms(1e6, 1e-3, 2000.0) < detected_atoms(1e6, 1e-3, 1000.0));
    CHECK(detected_atoms(1e6, 2e-3, 1000.0) < detected_atoms(1e6, 1e-3, 1000.0));
}

TEST_CASE("phase uncertainty parametrizations") {
    NoiseBudget nb;
    nb.loss_lambda = 1.1e-3;
    nb.contrast_C = 0.8;
    nb.repetitions_nu = 2.0;
    nb.initial_atoms_N0 = 1e6;

    const double nat = detected_atoms(1e6, 1.1e-3, 1800.0);
    CHECK(phase_uncertainty(nb, 1800.0) ==
          doctest::Approx(std::sqrt(2.0 / (2.0 * nat * 0.64))).epsilon(1e-14));

    nb.fixed_phase_uncertainty = 1e-5;
    CHECK(phase_uncertainty(nb, 1800.0) == 1e-5);
    CHECK(phase_uncertainty(nb, 7.0) == 1e-5);

    nb.fixed_phase_uncertainty.reset();
    nb.atom_flux = 1e8;
    nb.integration_time = 2.0;
    CHECK(phase_uncertainty(nb, 1800.0) ==
          doctest::Approx(std::sqrt(2.0 / (2e8 * 0.64))).epsilon(1e-14));

    // all atoms lost: the uncertainty diverges
    NoiseBudget dead;
    dead.loss_lambda = 0.5;
    dead.initial_atoms_N0 = 1e6;
    CHECK_THROWS_AS(phase_uncertainty(dead, 1e6), std::overflow_error);
}

TEST_CASE("strain uncertainty") {
    NoiseBudget nb;
    nb.fixed_phase_uncertainty = 1e-3;
    const double k = AtomSpecies::sr87().wave_number;

    // Delta h = Delta Phi / (2 k L N Q); Fig-scale cross-check at
    // L = 100 m, N = 100, Q = 1
    const auto su = strain_uncertainty(nb, k, 100.0, 100.0, 1.0, 399.0);
    CHECK(su.delta_h == doctest::Approx(1e-3 / (2.0 * k * 100.0 * 100.0)).epsilon(1e-14));
    CHECK(su.phase_uncertainty == 1e-3);

    // doubling any response factor halves the uncertainty
    CHECK(strain_uncertainty(nb, k, 200.0, 100.0, 1.0, 399.0).delta_h ==
          doctest::Approx(su.delta_h / 2.0).epsilon(1e-14));
    CHECK(strain_uncertainty(nb, k, 100.0, 200.0, 1.0, 799.0).delta_h ==
          doctest::Approx(su.delta_h / 2.0).epsilon(1e-14));
    CHECK(strain_uncertainty(nb, k, 100.0, 100.0, 2.0, 798.0).delta_h ==
          doctest::Approx(su.delta_h / 2.0).epsilon(1e-14));

    // finite-speed-of-light roll-off through the sinc argument
    const auto rolled = strain_uncertainty(nb, k, 100.0, 100.0, 1.0, 399.0, 1.0);
    CHECK(rolled.delta_h == doctest::Approx(su.delta_h / std::sin(1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(strain_uncertainty(nb, -k, 100.0, 100.0, 1.0, 399.0),
                    std::domain_error);
}

TEST_CASE("shot-noise strain uncertainty has a pulse-count optimum") {
    // with losses, pushing NP forever is counterproductive: the uncertainty
    // in Q = 1 mode is minimized near NP = -2/ln(1-lambda) - 1
    NoiseBudget nb;
    nb.loss_lambda = 1.1e-3;
    nb.initial_atoms_N0 = 1e6;
    const double k = AtomSpecies::sr87().wave_number;

    auto dh = [&](double n) {
        const double np = 4.0 * n - 1.0;
        return strain_uncertainty(nb, k, 100.0, n, 1.0, np).delta_h;
    };
    const double n_star = 0.25 * (-2.0 / std::log1p(-1.1e-3) - 1.0 + 1.0);
    CHECK(dh(n_star) < dh(n_star * 0.8));
    CHECK(dh(n_star) < dh(n_star * 1.25));
}
