"""Smoke tests for the python bindings."""

import math

import pytest

import gwfountain as gw


def test_species_constants():
    sr = gw.AtomSpecies.sr87()
    assert sr.wave_number == pytest.approx(2 * math.pi / 698.4e-9, rel=1e-12)
    assert sr.recoil_velocity() == pytest.approx(0.0065741399879703805, rel=1e-12)
    assert sr.eta() == pytest.approx(1491.7008183495625, rel=1e-12)


def test_resonance_and_cutoff():
    assert gw.resonant_interrogation_time(0.5) == 1.0
    assert gw.min_resonant_frequency(100.0) == pytest.approx(0.1107, rel=5e-3)
    with pytest.raises(ValueError):
        gw.min_resonant_frequency(-1.0)


def test_analytic_optimum():
    xi = gw.xi_factor(100.0, gw.resonant_interrogation_time(0.5))
    assert 1764 < gw.optimal_np_exact(1.1e-3, xi) < 1836
    assert gw.approx_np(1.25e-5, 0.0) == pytest.approx(1.6e5, rel=5e-3)
    opt = gw.select_regime(1.1e-3, 2000.0, 10.0)
    assert opt.regime == gw.Regime.interior
    assert 0.0 < opt.rel_height_ell < 1.0


def test_noise_and_signal():
    nb = gw.NoiseBudget()
    nb.fixed_phase_uncertainty = 1e-5
    dh, dphi, _ = gw.strain_uncertainty(nb, gw.AtomSpecies.sr87().wave_number,
                                        100.0, 100.0, 1.0, 399.0)
    assert dphi == 1e-5
    assert dh > 0.0
    assert gw.dirichlet_ratio(5, math.pi) == pytest.approx(5.0)


def test_trajectory():
    sr = gw.AtomSpecies.sr87()
    sol = gw.min_required_height(1, 100, 1.0, sr)
    # single diamond: symmetric fountain plus the full arm separation
    expected = 0.5 * 9.80665 + gw.arm_separation_peak(100, 1.0, sr)
    assert sol.h_req == pytest.approx(expected, rel=1e-6)
    feasible, lo, hi, binding = gw.check_confinement(
        1, 100, 1.0, sol.z0, sol.v0, sr, sol.h_req + 1e-6)
    assert feasible
    assert hi - lo <= sol.h_req + 1e-6


def test_optimizer_and_sweep():
    c = gw.SearchConstraints()
    c.frequency_f = 1.0
    c.baseline_B = 100.0
    c.noise.fixed_phase_uncertainty = 1e-5
    c.np_max = 5000
    rec = gw.optimize_at_frequency(c)
    assert rec.feasible
    assert rec.lmt_N % 2 == 0
    assert rec.total_pulses_NP <= 5000
    assert rec.delta_h > 0.0

    recs = gw.sweep(c, [0.05, 0.5, 1.0])
    assert [r.feasible for r in recs] == [False, True, True]
    assert recs[2].delta_h == rec.delta_h
