#ifndef GWFOUNTAIN_IO_HPP
#define GWFOUNTAIN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwfountain/fountain_trajectory.hpp"
#include "gwfountain/numeric_optimum.hpp"

// Batch front end: configuration parsing, frequency sweeps, regime
// tables, off-resonance response curves, and CSV/JSON emission.

namespace gwfountain {

struct GridSpec {
    double f_min_hz = 0.01;
    double f_max_hz = 10.0;
    int points = 200;
    bool log_spaced = true;
};

struct RunConfig {
    double baseline_m = 100.0;
    AtomSpecies species = AtomSpecies::sr87();
    NoiseBudget noise;
    PhysicalConstants constants;
    long long np_max = 160000;
    int q_max = 1000;
    GridSpec grid;
    bool enforce_arm_separation = true;
    bool enforce_even_N = true;
    int workers = 0;
    std::string output;  // empty -> stdout
    std::string format = "csv";

    void validate() const;
    SearchConstraints search_constraints(double f_hz) const;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);
RunConfig load_config(const std::string& path);

std::vector<double> frequency_grid(const GridSpec& spec);

// Column-ordered table; cells keep native JSON types so the CSV and JSON
// emitters render identical records.
struct Table {
    std::vector<std::string> columns;
    std::vector<nlohmann::json> rows;
};

std::string format_double(double value);
void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, const std::string& output_path,
                 const std::string& format);

nlohmann::json record_to_json(const OptimumRecord& record);
OptimumRecord record_from_json(const nlohmann::json& j);

// Continuous analytic optima per frequency: f_hz, NP, Q, N, ell, regime.
Table cmd_analytic(const RunConfig& config);

// Regime boundary curves: f_hz, f_min_hz, lambda_bottom_q1, lambda_bottom_highf.
Table cmd_regimes(const RunConfig& config);

// Numeric sweep paired with the analytic optimum per frequency.
Table cmd_numeric(const RunConfig& config);

// Off-resonance strain uncertainty for a fixed optimized record: f_hz, delta_h.
Table cmd_response(const RunConfig& config, const OptimumRecord& record);

// Confinement report plus optional sampled trajectory (t_s, z_lower_m, z_upper_m).
struct CheckResult {
    FeasibilityReport report;
    Table trajectory;  // empty when no dump requested
};
CheckResult cmd_check(const RunConfig& config, int q, int n, double z0, double v0,
                      double window_height_m, double dump_step_s = 0.0);

}  // namespace gwfountain

#endif
