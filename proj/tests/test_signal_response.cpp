#include <doctest.h>

#include <cmath>
#include <vector>

#include "gwfountain/core_model.hpp"
#include "gwfountain/signal_response.hpp"

using namespace gwfountain;

TEST_CASE("sinc basics") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(pi)) < 1e-15);
    CHECK(sinc(0.5) == doctest::Approx(std::sin(0.5) / 0.5).epsilon(1e-15));
    // series branch continuous against the quotient branch
    CHECK(sinc(1e-8) == doctest::Approx(sinc(1.000001e-8)).epsilon(1e-12));
    CHECK(sinc(-0.3) == doctest::Approx(sinc(0.3)).epsilon(1e-15));
}

TEST_CASE("dirichlet ratio matches the quotient away from resonance") {
    for (int q : {2, 3, 5, 9, 100}) {
        for (double x : {0.1, 0.7, 1.2, 2.0, 4.5}) {
            CHECK(dirichlet_ratio(q, x) ==
                  doctest::Approx(std::sin(q * x) / std::sin(x)).epsilon(1e-12));
        }
    }
    CHECK(dirichlet_ratio(1, 123.456) == 1.0);
    CHECK_THROWS_AS(dirichlet_ratio(0, 1.0), std::domain_error);
}

TEST_CASE("dirichlet ratio is continuous through x = m pi") {
    // approach the resonance from both sides along a decade sequence that
    // crosses the Taylor-branch switchover at 1e-6
    for (int q : {2, 3, 5, 9, 47, 1000}) {
        for (int m : {0, 1, 2, 7}) {
            const double sign = (static_cast<long long>(m) * (q - 1)) % 2 == 0 ? 1.0 : -1.0;
            const double limit = sign * q;
            for (double eps = 1e-3; eps > 0.9e-12; eps *= 0.1) {
                for (double s : {1.0, -1.0}) {
                    const double val = dirichlet_ratio(q, m * pi + s * eps);
                    // the kernel moves away from +-Q quadratically, bounded by
                    // Q^3 eps^2 / 6; on top of that allow rounding noise
                    const double drift =
                        std::pow(q, 3) * eps * eps / 6.0 + 1e-9 * q;
                    CHECK(std::abs(val - limit) <= drift + 1e-6 * q);
                }
            }
            CHECK(dirichlet_ratio(q, m * pi) == doctest::Approx(limit).epsilon(1e-14));
        }
    }
}

TEST_CASE("broadband amplitude golden fixtures") {
    // frozen against a 50-digit evaluation of the product formula
    const DetectorGeometry geo(100.0, 35.0);
    const double k = AtomSpecies::sr87().wave_number;
    const auto a = signal_amplitude_broadband(2.5e-20, k, geo, 3, 7, 0.8,
                                              2.0 * pi * 0.37);
    CHECK(a.phi == doctest::Approx(8.877195419072650e-11).epsilon(1e-12));
    CHECK(a.low_frequency_valid);

    // resonance-grazing point exercising the Taylor branch of the kernel
    const DetectorGeometry geo2(2000.0, 700.0);
    const auto a2 = signal_amplitude_broadband(1e-21, k, geo2, 5, 12, 1.0 / (2.0 * 1.3),
                                               2.0 * pi * 1.3);
    CHECK(a2.phi == doctest::Approx(1.403460547587968e-9).epsilon(1e-12));
}

TEST_CASE("broadband amplitude is linear in strain and flags validity") {
    const DetectorGeometry geo(100.0, 20.0);
    const double k = AtomSpecies::sr87().wave_number;
    const double p1 = signal_amplitude_broadband(1e-20, k, geo, 2, 5, 0.7, 2.0).phi;
    const double p3 = signal_amplitude_broadband(3e-20, k, geo, 2, 5, 0.7, 2.0).phi;
    CHECK(p3 == doctest::Approx(3.0 * p1).epsilon(1e-14));

    // omega tau_B above the guard clears the low-frequency flag
    const double omega_hi = 0.2 / geo.tau_B;
    CHECK_FALSE(signal_amplitude_broadband(1e-20, k, geo, 2, 5, 0.7, omega_hi)
                    .low_frequency_valid);
    CHECK_THROWS_AS(signal_amplitude_broadband(1e-20, k, geo, 0, 5, 0.7, 2.0),
                    std::domain_error);
    CHECK_THROWS_AS(signal_amplitude_broadband(1e-20, k, geo, 2, 5, 0.7, 0.0),
                    std::domain_error);
}

TEST_CASE("broadband reduces to the resonant amplitude at omega T = pi") {
    const double k = AtomSpecies::sr87().wave_number;
    for (double b : {100.0, 2000.0}) {
        const DetectorGeometry geo(b, 0.05 * b);
        for (int q : {1, 2, 5}) {
            for (int n : {1, 10, 1000}) {
                const double f = 0.9;
                const double t = resonant_interrogation_time(f);
                const double omega = 2.0 * pi * f;
                const double broad =
                    signal_amplitude_broadband(1e-21, k, geo, q, n, t, omega).phi;
                const double reso = signal_amplitude_resonant(
                    1e-21, k, geo.separation_L, n, q, omega, geo.tau_B);
                const double tol = std::max(1e-6, omega * geo.tau_B);
                CHECK(broad == doctest::Approx(reso).epsilon(tol));
            }
        }
    }
}

TEST_CASE("response curve validates its grid") {
    const DetectorGeometry geo(100.0, 35.0);
    const ResponseConfig cfg{1e-21, AtomSpecies::sr87().wave_number, geo, 2, 10, 0.5};
    CHECK_THROWS_AS(response_curve(cfg, {}), std::domain_error);
    CHECK_THROWS_AS(response_curve(cfg, {1.0, 1.0}), std::domain_error);
    const auto pts = response_curve(cfg, {0.5, 1.0, 2.0});
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].frequency_f == 1.0);
    const auto direct =
        signal_amplitude_broadband(1e-21, cfg.wave_number_k, geo, 2, 10, 0.5, 2.0 * pi);
    CHECK(pts[1].amplitude_Phi == doctest::Approx(direct.phi).epsilon(1e-15));
}
