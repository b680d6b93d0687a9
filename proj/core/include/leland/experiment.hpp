#pragma once

#include <string>
#include <vector>

#include "leland/mesh.hpp"
#include "leland/model.hpp"
#include "leland/presets.hpp"
#include "leland/stability.hpp"
#include "leland/timestepper.hpp"

namespace leland {

struct NumericsConfig {
    ElementOrder order = ElementOrder::P1;
    double R = 0.0;  // 0 means ln K + 2
    double h = 0.1;
    double d_tau = 1e-3;
    double theta = 0.5;
    int n_rannacher = 4;
    NonlinearMass variant = NonlinearMass::Version1;
};

struct RunConfig {
    MarketParams market;
    NumericsConfig numerics;
    std::string out_dir = "out";
    std::vector<double> sample_times;  // empty means { 0 }
    bool oracles_on = true;
    std::string preset_name;  // echoed into the report when set
};

RunConfig config_from_preset(const Preset& p);

// Flat key=value settings: r, sigma, T, K, c, dt_hedge, order (1|2|p1|p2),
// R, h, d_tau, theta, n_rannacher, variant (1|2), times (comma-separated),
// out, oracles (on|off). Unknown keys or malformed values throw
// std::invalid_argument.
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);
void apply_override(RunConfig& cfg, const std::string& key_equals_value);

// One key=value per line; blank lines and lines starting with '#' are skipped.
void apply_config_file(RunConfig& cfg, const std::string& path);

struct ExperimentResult {
    StabilityReport stability;
    std::vector<std::string> files_written;
    double wall_ms = 0.0;
    bool aborted = false;
    std::string abort_message;
};

// Runs the configured experiment and writes, into out_dir:
//   curve_t{t}.csv       price curve per requested physical time
//   comparison_t{t}.csv  curve alongside the finite-difference and
//                        closed-form references (when oracles are on)
//   stability.json       config echo, mesh ratios, oscillation report, timing
ExperimentResult run_experiment(const RunConfig& cfg);

std::string format_sci(double v);  // fixed scientific, 15 significant digits
std::string list_presets_table();

}  // namespace leland
