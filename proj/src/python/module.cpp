#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwfountain/analytic_optimum.hpp"
#include "gwfountain/core_model.hpp"
#include "gwfountain/fountain_trajectory.hpp"
#include "gwfountain/noise_budget.hpp"
#include "gwfountain/numeric_optimum.hpp"
#include "gwfountain/signal_response.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace gwfountain;

PYBIND11_MODULE(_core, m) {
    m.doc() = "strain sensitivity and configuration optimization for differential "
              "multi-diamond atom-interferometer detectors";

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readwrite("g", &PhysicalConstants::g)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_readwrite("hbar", &PhysicalConstants::hbar);

    py::class_<AtomSpecies>(m, "AtomSpecies")
        .def(py::init<double, double>(), "mass_kg"_a, "wave_number_rad_per_m"_a)
        .def_static("from_wavelength", &AtomSpecies::from_wavelength,
                    "mass_kg"_a, "wavelength_m"_a)
        .def_static("sr87", &AtomSpecies::sr87)
        .def_readonly("mass", &AtomSpecies::mass)
        .def_readonly("wave_number", &AtomSpecies::wave_number)
        .def("recoil_velocity", &AtomSpecies::recoil_velocity,
             "hbar"_a = PhysicalConstants{}.hbar)
        .def("eta", &AtomSpecies::eta, "g"_a = PhysicalConstants{}.g,
             "hbar"_a = PhysicalConstants{}.hbar);

    py::class_<DetectorGeometry>(m, "DetectorGeometry")
        .def(py::init<double, double, double>(), "baseline_m"_a, "fountain_m"_a,
             "c"_a = PhysicalConstants{}.c)
        .def_readonly("baseline_B", &DetectorGeometry::baseline_B)
        .def_readonly("fountain_H", &DetectorGeometry::fountain_H)
        .def_readonly("separation_L", &DetectorGeometry::separation_L)
        .def_readonly("rel_height_ell", &DetectorGeometry::rel_height_ell)
        .def_readonly("tau_B", &DetectorGeometry::tau_B)
        .def_readonly("tau_L", &DetectorGeometry::tau_L);

    py::class_<NoiseBudget>(m, "NoiseBudget")
        .def(py::init<>())
        .def_readwrite("loss_lambda", &NoiseBudget::loss_lambda)
        .def_readwrite("contrast_C", &NoiseBudget::contrast_C)
        .def_readwrite("repetitions_nu", &NoiseBudget::repetitions_nu)
        .def_readwrite("initial_atoms_N0", &NoiseBudget::initial_atoms_N0)
        .def_readwrite("fixed_phase_uncertainty", &NoiseBudget::fixed_phase_uncertainty)
        .def_readwrite("atom_flux", &NoiseBudget::atom_flux)
        .def_readwrite("integration_time", &NoiseBudget::integration_time);

    m.def("resonant_interrogation_time", &resonant_interrogation_time, "f_hz"_a);
    m.def("xi_factor", &xi_factor, "baseline_m"_a, "t_interrogation"_a,
          "g"_a = PhysicalConstants{}.g);
    m.def("fountain_time", &fountain_time, "height_m"_a, "g"_a = PhysicalConstants{}.g);

    m.def("sinc", &sinc, "x"_a);
    m.def("dirichlet_ratio", &dirichlet_ratio, "q"_a, "x"_a);
    m.def("signal_amplitude_resonant", &signal_amplitude_resonant, "h"_a, "k"_a,
          "separation_L"_a, "n"_a, "q"_a, "omega"_a, "tau_B"_a);
    m.def(
        "signal_amplitude_broadband",
        [](double h, double k, const DetectorGeometry& geometry, int q, int n,
           double t_interrogation, double omega) {
            const auto amp =
                signal_amplitude_broadband(h, k, geometry, q, n, t_interrogation, omega);
            return py::make_tuple(amp.phi, amp.low_frequency_valid);
        },
        "h"_a, "k"_a, "geometry"_a, "q"_a, "n"_a, "t_interrogation"_a, "omega"_a);

    m.def("detected_atoms", &detected_atoms, "n0"_a, "loss_lambda"_a, "np"_a);
    m.def("phase_uncertainty", &phase_uncertainty, "noise"_a, "np"_a);
    m.def(
        "strain_uncertainty",
        [](const NoiseBudget& noise, double k, double separation_L, double n, double q,
           double np, std::optional<double> sinc_arg) {
            const auto su = strain_uncertainty(noise, k, separation_L, n, q, np, sinc_arg);
            return py::make_tuple(su.delta_h, su.phase_uncertainty, su.detected_atoms);
        },
        "noise"_a, "k"_a, "separation_L"_a, "n"_a, "q"_a, "np"_a,
        "sinc_arg"_a = std::nullopt);

    py::enum_<Regime>(m, "Regime")
        .value("interior", Regime::interior)
        .value("q1_clamped", Regime::q1_clamped)
        .value("n2_clamped", Regime::n2_clamped)
        .value("lossless", Regime::lossless);

    py::class_<AnalyticOptimum>(m, "AnalyticOptimum")
        .def_readonly("rel_height_ell", &AnalyticOptimum::rel_height_ell)
        .def_readonly("total_pulses_np", &AnalyticOptimum::total_pulses_np)
        .def_readonly("diamonds_q", &AnalyticOptimum::diamonds_q)
        .def_readonly("lmt_n", &AnalyticOptimum::lmt_n)
        .def_readonly("regime", &AnalyticOptimum::regime)
        .def_readonly("objective", &AnalyticOptimum::objective);

    m.def("optimal_height_lossy", &optimal_height_lossy, "xi"_a, "loss_lambda"_a);
    m.def("optimal_np_exact", &optimal_np_exact, "loss_lambda"_a, "xi"_a);
    m.def("approx_np", &approx_np, "loss_lambda"_a, "xi"_a);
    m.def("optimal_q_lossy", &optimal_q_lossy, "loss_lambda"_a, "baseline_m"_a, "f_hz"_a,
          "g"_a = PhysicalConstants{}.g);
    m.def("optimum_q1_regime", &optimum_q1_regime, "loss_lambda"_a, "xi"_a);
    m.def("optimum_n2_regime", &optimum_n2_regime, "loss_lambda"_a, "xi"_a);
    m.def("optimal_height_lossless", &optimal_height_lossless, "np"_a, "xi"_a);
    m.def("select_regime", &select_regime, "loss_lambda"_a, "baseline_m"_a, "f_hz"_a,
          "g"_a = PhysicalConstants{}.g, "np_lossless"_a = std::nullopt);
    m.def("min_resonant_frequency", &min_resonant_frequency, "baseline_m"_a,
          "g"_a = PhysicalConstants{}.g);
    m.def(
        "bottom_constraint_thresholds",
        [](double f_hz, double baseline_m, const AtomSpecies& species, double g) {
            const auto b = bottom_constraint_thresholds(f_hz, baseline_m, species, g);
            return py::make_tuple(b.f_min_resonant, b.lambda_bottom_q1,
                                  b.lambda_bottom_highf);
        },
        "f_hz"_a, "baseline_m"_a, "species"_a, "g"_a = PhysicalConstants{}.g);

    py::class_<HeightSolution>(m, "HeightSolution")
        .def_readonly("h_req", &HeightSolution::h_req)
        .def_readonly("z0", &HeightSolution::z0)
        .def_readonly("v0", &HeightSolution::v0);

    m.def("arm_separation_peak", &arm_separation_peak, "n"_a, "t_interrogation"_a,
          "species"_a, "hbar"_a = PhysicalConstants{}.hbar);
    m.def("min_required_height", &min_required_height, "q"_a, "n"_a, "t_interrogation"_a,
          "species"_a, "g"_a = PhysicalConstants{}.g,
          "hbar"_a = PhysicalConstants{}.hbar);
    m.def(
        "check_confinement",
        [](int q, int n, double t_interrogation, double z0, double v0,
           const AtomSpecies& species, double window_height_m, double g) {
            const auto traj = arm_paths(q, n, t_interrogation, z0, v0, species, g);
            const auto report = check_confinement(traj, window_height_m);
            return py::make_tuple(report.feasible, report.min_lower_arm,
                                  report.max_upper_arm,
                                  to_string(report.binding_constraint));
        },
        "q"_a, "n"_a, "t_interrogation"_a, "z0"_a, "v0"_a, "species"_a,
        "window_height_m"_a, "g"_a = PhysicalConstants{}.g);

    py::class_<SearchConstraints>(m, "SearchConstraints")
        .def(py::init<>())
        .def_readwrite("frequency_f", &SearchConstraints::frequency_f)
        .def_readwrite("baseline_B", &SearchConstraints::baseline_B)
        .def_readwrite("species", &SearchConstraints::species)
        .def_readwrite("noise", &SearchConstraints::noise)
        .def_readwrite("constants", &SearchConstraints::constants)
        .def_readwrite("np_max", &SearchConstraints::np_max)
        .def_readwrite("q_max", &SearchConstraints::q_max)
        .def_readwrite("enforce_arm_separation", &SearchConstraints::enforce_arm_separation)
        .def_readwrite("enforce_even_N", &SearchConstraints::enforce_even_N);

    py::class_<OptimumRecord>(m, "OptimumRecord")
        .def_readonly("feasible", &OptimumRecord::feasible)
        .def_readonly("frequency_f", &OptimumRecord::frequency_f)
        .def_readonly("diamonds_Q", &OptimumRecord::diamonds_Q)
        .def_readonly("lmt_N", &OptimumRecord::lmt_N)
        .def_readonly("total_pulses_NP", &OptimumRecord::total_pulses_NP)
        .def_readonly("ell", &OptimumRecord::ell)
        .def_readonly("height_H", &OptimumRecord::height_H)
        .def_readonly("separation_L", &OptimumRecord::separation_L)
        .def_readonly("z0", &OptimumRecord::z0)
        .def_readonly("v0", &OptimumRecord::v0)
        .def_readonly("interrogation_T", &OptimumRecord::interrogation_T)
        .def_readonly("total_time_TAI", &OptimumRecord::total_time_TAI)
        .def_readonly("delta_h", &OptimumRecord::delta_h)
        .def_readonly("binding", &OptimumRecord::binding)
        .def_readonly("f_min", &OptimumRecord::f_min);

    m.def("optimize_at_frequency", &optimize_at_frequency, "constraints"_a,
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep", &sweep, "constraints"_a, "frequency_grid_hz"_a, "workers"_a = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("analytic_delta_h", &analytic_delta_h, "optimum"_a, "noise"_a, "k"_a,
          "baseline_m"_a);
}
