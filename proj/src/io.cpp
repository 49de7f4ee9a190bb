#include "gwfountain/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

#include "gwfountain/noise_budget.hpp"
#include "gwfountain/signal_response.hpp"

namespace gwfountain {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& message) {
    throw std::runtime_error("config: field '" + field + "': " + message);
}

AtomSpecies species_from_json(const json& j) {
    if (j.is_string() || j.contains("name")) {
        const std::string name = j.is_string() ? j.get<std::string>()
                                               : j.at("name").get<std::string>();
        if (name == "sr87")
            return AtomSpecies::sr87();
        config_error("species.name", "unknown species '" + name + "'");
    }
    double mass_kg;
    if (j.contains("mass_kg"))
        mass_kg = j.at("mass_kg").get<double>();
    else if (j.contains("mass_u"))
        mass_kg = j.at("mass_u").get<double>() * atomic_mass_unit;
    else
        config_error("species", "needs mass_kg or mass_u");
    if (j.contains("wave_number_rad_per_m"))
        return AtomSpecies(mass_kg, j.at("wave_number_rad_per_m").get<double>());
    if (j.contains("wavelength_m"))
        return AtomSpecies::from_wavelength(mass_kg, j.at("wavelength_m").get<double>());
    if (j.contains("wavelength_nm"))
        return AtomSpecies::from_wavelength(mass_kg, j.at("wavelength_nm").get<double>() * 1e-9);
    config_error("species", "needs a wavelength or wave number");
}

NoiseBudget noise_from_json(const json& j) {
    NoiseBudget noise;
    const bool has_fixed = j.contains("phase_uncertainty");
    const bool has_flux = j.contains("atom_flux");
    const bool has_shot = j.contains("loss_per_pulse") || j.contains("initial_atoms");
    if (has_fixed + has_flux + has_shot > 1)
        config_error("noise", "exactly one noise mode may be set");
    if (j.contains("contrast"))
        noise.contrast_C = j.at("contrast").get<double>();
    if (has_fixed) {
        noise.fixed_phase_uncertainty = j.at("phase_uncertainty").get<double>();
    } else if (has_flux) {
        if (!j.contains("integration_time"))
            config_error("noise.integration_time", "required with atom_flux");
        noise.atom_flux = j.at("atom_flux").get<double>();
        noise.integration_time = j.at("integration_time").get<double>();
    } else {
        if (j.contains("loss_per_pulse"))
            noise.loss_lambda = j.at("loss_per_pulse").get<double>();
        if (j.contains("repetitions"))
            noise.repetitions_nu = j.at("repetitions").get<double>();
        if (j.contains("initial_atoms"))
            noise.initial_atoms_N0 = j.at("initial_atoms").get<double>();
    }
    noise.validate();
    return noise;
}

json noise_to_json(const NoiseBudget& noise) {
    json j;
    j["contrast"] = noise.contrast_C;
    if (noise.fixed_phase_uncertainty) {
        j["phase_uncertainty"] = *noise.fixed_phase_uncertainty;
    } else if (noise.atom_flux) {
        j["atom_flux"] = *noise.atom_flux;
        j["integration_time"] = *noise.integration_time;
    } else {
        j["loss_per_pulse"] = noise.loss_lambda;
        j["repetitions"] = noise.repetitions_nu;
        j["initial_atoms"] = noise.initial_atoms_N0;
    }
    return j;
}

}  // namespace

void RunConfig::validate() const {
    if (baseline_m <= 0.0)
        config_error("baseline_m", "must be positive");
    if (grid.points < 1)
        config_error("grid.points", "must be >= 1");
    if (grid.points > 1 && !(grid.f_min_hz < grid.f_max_hz))
        config_error("grid", "f_min_hz must be smaller than f_max_hz");
    if (grid.f_min_hz <= 0.0)
        config_error("grid.f_min_hz", "must be positive");
    if (np_max < 7)
        config_error("np_max", "must admit at least one scheme (>= 7)");
    if (q_max < 1)
        config_error("q_max", "must be >= 1");
    if (format != "csv" && format != "json")
        config_error("format", "must be 'csv' or 'json'");
    noise.validate();
}

SearchConstraints RunConfig::search_constraints(double f_hz) const {
    SearchConstraints sc;
    sc.frequency_f = f_hz;
    sc.baseline_B = baseline_m;
    sc.species = species;
    sc.noise = noise;
    sc.constants = constants;
    sc.np_max = np_max;
    sc.q_max = q_max;
    sc.enforce_arm_separation = enforce_arm_separation;
    sc.enforce_even_N = enforce_even_N;
    return sc;
}

RunConfig config_from_json(const json& j) {
    RunConfig config;
    if (j.contains("baseline_m"))
        config.baseline_m = j.at("baseline_m").get<double>();
    if (j.contains("species"))
        config.species = species_from_json(j.at("species"));
    if (j.contains("noise"))
        config.noise = noise_from_json(j.at("noise"));
    if (j.contains("np_max"))
        config.np_max = j.at("np_max").get<long long>();
    if (j.contains("q_max"))
        config.q_max = j.at("q_max").get<int>();
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.contains("f_min_hz"))
            config.grid.f_min_hz = g.at("f_min_hz").get<double>();
        if (g.contains("f_max_hz"))
            config.grid.f_max_hz = g.at("f_max_hz").get<double>();
        if (g.contains("points"))
            config.grid.points = g.at("points").get<int>();
        if (g.contains("log"))
            config.grid.log_spaced = g.at("log").get<bool>();
    }
    if (j.contains("enforce_arm_separation"))
        config.enforce_arm_separation = j.at("enforce_arm_separation").get<bool>();
    if (j.contains("enforce_even_N"))
        config.enforce_even_N = j.at("enforce_even_N").get<bool>();
    if (j.contains("workers"))
        config.workers = j.at("workers").get<int>();
    if (j.contains("output"))
        config.output = j.at("output").get<std::string>();
    if (j.contains("format"))
        config.format = j.at("format").get<std::string>();
    config.validate();
    return config;
}

json config_to_json(const RunConfig& config) {
    json j;
    j["baseline_m"] = config.baseline_m;
    j["species"] = {{"mass_kg", config.species.mass},
                    {"wave_number_rad_per_m", config.species.wave_number}};
    j["noise"] = noise_to_json(config.noise);
    j["np_max"] = config.np_max;
    j["q_max"] = config.q_max;
    j["grid"] = {{"f_min_hz", config.grid.f_min_hz},
                 {"f_max_hz", config.grid.f_max_hz},
                 {"points", config.grid.points},
                 {"log", config.grid.log_spaced}};
    j["enforce_arm_separation"] = config.enforce_arm_separation;
    j["enforce_even_N"] = config.enforce_even_N;
    j["workers"] = config.workers;
    j["output"] = config.output;
    j["format"] = config.format;
    return j;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config: parse error in '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

std::vector<double> frequency_grid(const GridSpec& spec) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(spec.points));
    if (spec.points == 1) {
        grid.push_back(spec.f_min_hz);
        return grid;
    }
    if (spec.log_spaced) {
        const double lo = std::log(spec.f_min_hz);
        const double hi = std::log(spec.f_max_hz);
        for (int i = 0; i < spec.points; ++i)
            grid.push_back(std::exp(lo + (hi - lo) * i / (spec.points - 1)));
    } else {
        for (int i = 0; i < spec.points; ++i)
            grid.push_back(spec.f_min_hz +
                           (spec.f_max_hz - spec.f_min_hz) * i / (spec.points - 1));
    }
    return grid;
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i)
                out << ",";
            const auto& cell = row.at(table.columns[i]);
            if (cell.is_number_float())
                out << format_double(cell.get<double>());
            else if (cell.is_string())
                out << cell.get<std::string>();
            else
                out << cell.dump();
        }
        out << "\n";
    }
}

void write_json(const Table& table, std::ostream& out) {
    json doc = json::array();
    for (const auto& row : table.rows)
        doc.push_back(row);
    out << doc.dump(2) << "\n";
}

void write_table(const Table& table, const std::string& output_path,
                 const std::string& format) {
    auto emit = [&](std::ostream& out) {
        if (format == "json")
            write_json(table, out);
        else
            write_csv(table, out);
    };
    if (output_path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw std::runtime_error("cannot open output file '" + output_path + "'");
    emit(out);
}

json record_to_json(const OptimumRecord& record) {
    return json{{"feasible", record.feasible},
                {"f_hz", record.frequency_f},
                {"delta_h", record.delta_h},
                {"Q", record.diamonds_Q},
                {"N", record.lmt_N},
                {"NP", record.total_pulses_NP},
                {"ell", record.ell},
                {"H_m", record.height_H},
                {"L_m", record.separation_L},
                {"z0_m", record.z0},
                {"v0_mps", record.v0},
                {"T_s", record.interrogation_T},
                {"TAI_s", record.total_time_TAI},
                {"binding", record.binding},
                {"f_min_hz", record.f_min}};
}

OptimumRecord record_from_json(const json& j) {
    OptimumRecord rec;
    // rows from the numeric table omit these two fields
    rec.feasible = j.value("feasible", true);
    rec.frequency_f = j.at("f_hz").get<double>();
    rec.delta_h = j.at("delta_h").get<double>();
    rec.diamonds_Q = j.at("Q").get<int>();
    rec.lmt_N = j.at("N").get<int>();
    rec.total_pulses_NP = j.at("NP").get<long long>();
    rec.ell = j.at("ell").get<double>();
    rec.height_H = j.at("H_m").get<double>();
    rec.separation_L = j.at("L_m").get<double>();
    rec.z0 = j.at("z0_m").get<double>();
    rec.v0 = j.at("v0_mps").get<double>();
    rec.interrogation_T = j.at("T_s").get<double>();
    rec.total_time_TAI = j.at("TAI_s").get<double>();
    rec.binding = j.at("binding").get<std::string>();
    rec.f_min = j.value("f_min_hz", 0.0);
    return rec;
}

Table cmd_analytic(const RunConfig& config) {
    config.validate();
    if (config.noise.fixed_phase_uncertainty || config.noise.atom_flux ||
        config.noise.loss_lambda <= 0.0)
        config_error("noise.loss_per_pulse", "analytic table needs a positive loss per pulse");

    Table table{{"f_hz", "NP", "Q", "N", "ell", "regime"}, {}};
    for (double f : frequency_grid(config.grid)) {
        json row;
        row["f_hz"] = f;
        try {
            const auto opt = select_regime(config.noise.loss_lambda, config.baseline_m, f,
                                           config.constants.g);
            row["NP"] = opt.total_pulses_np;
            row["Q"] = opt.diamonds_q;
            row["N"] = opt.lmt_n;
            row["ell"] = opt.rel_height_ell;
            row["regime"] = to_string(opt.regime);
        } catch (const std::domain_error&) {
            row["NP"] = nullptr;
            row["Q"] = nullptr;
            row["N"] = nullptr;
            row["ell"] = nullptr;
            row["regime"] = "below_cutoff";
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table cmd_regimes(const RunConfig& config) {
    config.validate();
    Table table{{"f_hz", "f_min_hz", "lambda_bottom_q1", "lambda_bottom_highf"}, {}};
    for (double f : frequency_grid(config.grid)) {
        const auto bounds = bottom_constraint_thresholds(f, config.baseline_m,
                                                         config.species, config.constants.g);
        table.rows.push_back(json{{"f_hz", f},
                                  {"f_min_hz", bounds.f_min_resonant},
                                  {"lambda_bottom_q1", bounds.lambda_bottom_q1},
                                  {"lambda_bottom_highf", bounds.lambda_bottom_highf}});
    }
    return table;
}

Table cmd_numeric(const RunConfig& config) {
    config.validate();
    const auto grid = frequency_grid(config.grid);
    const auto rows = compare_with_analytic(config.search_constraints(grid.front()), grid,
                                            config.workers);

    Table table{{"f_hz", "delta_h", "Q", "N", "NP", "ell", "H_m", "L_m", "z0_m",
                 "v0_mps", "T_s", "TAI_s", "binding", "analytic_delta_h", "gap_rel"},
                {}};
    for (const auto& row : rows) {
        json cells = record_to_json(row.numeric);
        cells.erase("feasible");
        cells.erase("f_min_hz");
        cells["analytic_delta_h"] = row.analytic_delta_h;
        cells["gap_rel"] = row.gap_rel;
        table.rows.push_back(std::move(cells));
    }
    return table;
}

Table cmd_response(const RunConfig& config, const OptimumRecord& record) {
    config.validate();
    if (!record.feasible)
        throw std::runtime_error("response: record marks an infeasible configuration");
    if (record.separation_L <= 0.0 || record.height_H <= 0.0 ||
        record.height_H >= config.baseline_m)
        throw std::runtime_error("response: record geometry does not fit the configured baseline");

    const DetectorGeometry geometry(config.baseline_m, record.height_H,
                                    config.constants.c);
    const double dphi = phase_uncertainty(config.noise,
                                          static_cast<double>(record.total_pulses_NP));

    Table table{{"f_hz", "delta_h"}, {}};
    for (double f : frequency_grid(config.grid)) {
        const double omega = 2.0 * pi * f;
        // unit-strain response; delta_h = dPhi / (Phi/h)
        const auto amp = signal_amplitude_broadband(1.0, config.species.wave_number,
                                                    geometry, record.diamonds_Q,
                                                    record.lmt_N, record.interrogation_T,
                                                    omega);
        const double delta_h = amp.phi > 0.0 ? dphi / amp.phi
                                             : std::numeric_limits<double>::infinity();
        table.rows.push_back(json{{"f_hz", f}, {"delta_h", delta_h}});
    }
    return table;
}

CheckResult cmd_check(const RunConfig& config, int q, int n, double z0, double v0,
                      double window_height_m, double dump_step_s) {
    config.validate();
    if (q < 1 || n < 1)
        config_error("check", "Q and N must be >= 1");
    const double t = resonant_interrogation_time(config.grid.f_min_hz);
    const auto traj = arm_paths(q, n, t, z0, v0, config.species, config.constants.g,
                                config.constants.hbar);
    CheckResult result{check_confinement(traj, window_height_m), Table{}};
    if (dump_step_s > 0.0) {
        result.trajectory.columns = {"t_s", "z_lower_m", "z_upper_m"};
        for (double ts = 0.0; ts <= traj.duration() + 0.5 * dump_step_s; ts += dump_step_s) {
            const double tt = std::min(ts, traj.duration());
            result.trajectory.rows.push_back(json{{"t_s", tt},
                                                  {"z_lower_m", traj.lower(tt)},
                                                  {"z_upper_m", traj.upper(tt)}});
        }
    }
    return result;
}

}  // namespace gwfountain
