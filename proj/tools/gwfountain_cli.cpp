// Batch CLI for multi-diamond atom-interferometer detector optimization.
// Subcommands: analytic, regimes, numeric, response, check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwfountain/io.hpp"

namespace {

using gwfountain::RunConfig;

struct CommonFlags {
    std::string config_path;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<double> freq_min;
    std::optional<double> freq_max;
    std::optional<int> freq_points;
    std::optional<bool> log_grid;
    std::optional<double> baseline_m;
    std::optional<long long> np_max;
    std::optional<double> loss_per_pulse;
    std::optional<double> phase_uncertainty;
    bool no_arm_separation = false;
    std::optional<int> workers;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON configuration file");
    cmd->add_option("--output", flags.output, "output path (default stdout)");
    cmd->add_option("--format", flags.format, "csv or json");
    cmd->add_option("--freq-min", flags.freq_min, "grid start, Hz");
    cmd->add_option("--freq-max", flags.freq_max, "grid end, Hz");
    cmd->add_option("--freq-points", flags.freq_points, "grid point count");
    cmd->add_option("--log-grid", flags.log_grid, "log-spaced grid (true/false)");
    cmd->add_option("--baseline-m", flags.baseline_m, "baseline B, m");
    cmd->add_option("--np-max", flags.np_max, "total-pulse budget");
    cmd->add_option("--loss-per-pulse", flags.loss_per_pulse, "loss per pulse lambda");
    cmd->add_option("--phase-uncertainty", flags.phase_uncertainty,
                    "fixed phase uncertainty, rad/sqrt(Hz)");
    cmd->add_flag("--no-arm-separation", flags.no_arm_separation,
                  "use the fountain-time proxy instead of trajectory confinement");
    cmd->add_option("--workers", flags.workers, "worker thread cap (0 = all cores)");
}

// flags override file values
RunConfig resolve_config(const CommonFlags& flags) {
    RunConfig config;
    if (!flags.config_path.empty())
        config = gwfountain::load_config(flags.config_path);
    if (flags.output)
        config.output = *flags.output;
    if (flags.format)
        config.format = *flags.format;
    if (flags.freq_min)
        config.grid.f_min_hz = *flags.freq_min;
    if (flags.freq_max)
        config.grid.f_max_hz = *flags.freq_max;
    if (flags.freq_points)
        config.grid.points = *flags.freq_points;
    if (flags.log_grid)
        config.grid.log_spaced = *flags.log_grid;
    if (flags.baseline_m)
        config.baseline_m = *flags.baseline_m;
    if (flags.np_max)
        config.np_max = *flags.np_max;
    if (flags.loss_per_pulse) {
        config.noise.fixed_phase_uncertainty.reset();
        config.noise.loss_lambda = *flags.loss_per_pulse;
    }
    if (flags.phase_uncertainty)
        config.noise.fixed_phase_uncertainty = *flags.phase_uncertainty;
    if (flags.no_arm_separation)
        config.enforce_arm_separation = false;
    if (flags.workers)
        config.workers = *flags.workers;
    config.validate();
    return config;
}

int fail(const std::string& message) {
    std::cerr << nlohmann::json{{"error", message}}.dump() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strain sensitivity and configuration optimizer for differential "
                 "multi-diamond atom-interferometer detectors"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string record_path;
    int check_q = 1;
    int check_n = 2;
    double check_z0 = 0.0;
    double check_v0 = 0.0;
    double check_window = 0.0;
    double check_dump_step = 0.0;
    std::string check_dump_path;

    auto* analytic = app.add_subcommand("analytic", "continuous analytic optima per frequency");
    add_common_flags(analytic, flags);
    auto* regimes = app.add_subcommand("regimes", "arm-separation regime boundary curves");
    add_common_flags(regimes, flags);
    auto* numeric = app.add_subcommand("numeric", "integer-constrained sweep with analytic comparison");
    add_common_flags(numeric, flags);
    auto* response = app.add_subcommand("response", "off-resonance response of an optimized record");
    add_common_flags(response, flags);
    response->add_option("--record", record_path, "JSON file with one optimized record")
        ->required();
    auto* check = app.add_subcommand("check", "confinement check for an explicit scheme");
    add_common_flags(check, flags);
    check->add_option("--Q", check_q, "diamond count")->required();
    check->add_option("--N", check_n, "LMT pulses per beam splitter")->required();
    check->add_option("--z0", check_z0, "launch position, m")->required();
    check->add_option("--v0", check_v0, "launch velocity, m/s")->required();
    check->add_option("--window-m", check_window, "height window (default: baseline)");
    check->add_option("--dump-step", check_dump_step, "trajectory sampling step, s");
    check->add_option("--dump", check_dump_path, "trajectory CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig config = resolve_config(flags);

        if (analytic->parsed()) {
            gwfountain::write_table(gwfountain::cmd_analytic(config), config.output,
                                    config.format);
        } else if (regimes->parsed()) {
            gwfountain::write_table(gwfountain::cmd_regimes(config), config.output,
                                    config.format);
        } else if (numeric->parsed()) {
            gwfountain::write_table(gwfountain::cmd_numeric(config), config.output,
                                    config.format);
        } else if (response->parsed()) {
            std::ifstream in(record_path);
            if (!in)
                return fail("cannot open record file '" + record_path + "'");
            nlohmann::json j;
            in >> j;
            if (j.is_array()) {
                if (j.empty())
                    return fail("record file holds an empty array");
                j = j.front();
            }
            const auto record = gwfountain::record_from_json(j);
            gwfountain::write_table(gwfountain::cmd_response(config, record),
                                    config.output, config.format);
        } else if (check->parsed()) {
            const double window = check_window > 0.0 ? check_window : config.baseline_m;
            const auto result = gwfountain::cmd_check(config, check_q, check_n, check_z0,
                                                      check_v0, window, check_dump_step);
            nlohmann::json report{{"feasible", result.report.feasible},
                                  {"min_lower_m", result.report.min_lower_arm},
                                  {"max_upper_m", result.report.max_upper_arm},
                                  {"binding", to_string(result.report.binding_constraint)}};
            std::cout << report.dump(2) << "\n";
            if (!result.trajectory.columns.empty() && !check_dump_path.empty())
                gwfountain::write_table(result.trajectory, check_dump_path, "csv");
            return result.report.feasible ? 0 : 2;
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return 0;
}
