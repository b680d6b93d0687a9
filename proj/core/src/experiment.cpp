#include "leland/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "leland/assembly.hpp"
#include "leland/oracles.hpp"

namespace leland {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer value for '" + key + "': " + value);
    }
}

std::string time_label(double t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

}  // namespace

RunConfig config_from_preset(const Preset& p) {
    RunConfig cfg;
    cfg.market = p.market;
    cfg.numerics.order = p.order;
    cfg.numerics.R = p.R;
    cfg.numerics.h = p.h;
    cfg.numerics.d_tau = p.d_tau;
    cfg.numerics.theta = p.theta;
    cfg.numerics.n_rannacher = p.n_rannacher;
    cfg.numerics.variant = p.variant;
    cfg.preset_name = p.name;
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "r") {
        cfg.market.r = parse_double(key, value);
    } else if (key == "sigma") {
        cfg.market.sigma = parse_double(key, value);
    } else if (key == "T") {
        cfg.market.T = parse_double(key, value);
    } else if (key == "K") {
        cfg.market.K = parse_double(key, value);
    } else if (key == "c") {
        cfg.market.c = parse_double(key, value);
    } else if (key == "dt_hedge") {
        cfg.market.dt_hedge = parse_double(key, value);
    } else if (key == "order") {
        if (value == "1" || value == "p1" || value == "P1") {
            cfg.numerics.order = ElementOrder::P1;
        } else if (value == "2" || value == "p2" || value == "P2") {
            cfg.numerics.order = ElementOrder::P2;
        } else {
            throw std::invalid_argument("order must be 1 or 2, got: " + value);
        }
    } else if (key == "R") {
        cfg.numerics.R = parse_double(key, value);
    } else if (key == "h") {
        cfg.numerics.h = parse_double(key, value);
    } else if (key == "d_tau") {
        cfg.numerics.d_tau = parse_double(key, value);
    } else if (key == "theta") {
        cfg.numerics.theta = parse_double(key, value);
    } else if (key == "n_rannacher") {
        cfg.numerics.n_rannacher = parse_int(key, value);
    } else if (key == "variant") {
        if (value == "1") {
            cfg.numerics.variant = NonlinearMass::Version1;
        } else if (value == "2") {
            cfg.numerics.variant = NonlinearMass::Version2;
        } else {
            throw std::invalid_argument("variant must be 1 or 2, got: " + value);
        }
    } else if (key == "times") {
        std::vector<double> times;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) times.push_back(parse_double(key, item));
        }
        cfg.sample_times = times;
    } else if (key == "out") {
        cfg.out_dir = value;
    } else if (key == "oracles") {
        if (value == "on") {
            cfg.oracles_on = true;
        } else if (value == "off") {
            cfg.oracles_on = false;
        } else {
            throw std::invalid_argument("oracles must be on or off, got: " + value);
        }
    } else {
        throw std::invalid_argument("unknown setting: " + key);
    }
}

void apply_override(RunConfig& cfg, const std::string& key_equals_value) {
    size_t eq = key_equals_value.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument("expected key=value, got: " + key_equals_value);
    }
    apply_override(cfg, trim(key_equals_value.substr(0, eq)),
                   trim(key_equals_value.substr(eq + 1)));
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        try {
            apply_override(cfg, s);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.14e", v);
    return buf;
}

namespace {

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream out(path, std::ios::binary);  // fixed newlines across platforms
    if (!out) throw std::runtime_error("cannot write " + path);
    for (size_t c = 0; c < header.size(); ++c) {
        if (c) out << ',';
        out << header[c];
    }
    out << '\n';
    size_t rows = columns.empty() ? 0 : columns[0].size();
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < columns.size(); ++c) {
            if (c) out << ',';
            out << format_sci(columns[c][r]);
        }
        out << '\n';
    }
}

}  // namespace

ExperimentResult run_experiment(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    auto t_start = std::chrono::steady_clock::now();

    const MarketParams& mp = cfg.market;
    mp.validate();
    const double lnK = std::log(mp.K);
    const double R = cfg.numerics.R > 0.0 ? cfg.numerics.R : lnK + 2.0;
    const double Le = leland_number(mp);

    Mesh1D mesh = build_aligned(R, cfg.numerics.h, lnK, cfg.numerics.order);
    // boundary data pinned to the actual (trimmed) right edge so it stays an
    // exact steady state of the equation
    auto [u_left, u_right] = boundary_values(0.0, mesh.element_edges.back(), mp.K);
    GlobalSystem sys = assemble(mesh, u_left, u_right);

    SchemeConfig scheme;
    scheme.theta = cfg.numerics.theta;
    scheme.d_tau = cfg.numerics.d_tau;
    scheme.n_rannacher = cfg.numerics.n_rannacher;
    scheme.variant = cfg.numerics.variant;
    scheme.Le = Le;

    fs::create_directories(cfg.out_dir);

    ExperimentResult result;
    nlohmann::ordered_json report;
    if (!cfg.preset_name.empty()) report["preset"] = cfg.preset_name;
    report["market"] = {{"r", mp.r},       {"sigma", mp.sigma},
                        {"T", mp.T},       {"K", mp.K},
                        {"c", mp.c},       {"dt_hedge", mp.dt_hedge},
                        {"leland_number", Le}};
    report["numerics"] = {{"order", mesh.order == ElementOrder::P2 ? 2 : 1},
                          {"R", R},
                          {"h", cfg.numerics.h},
                          {"d_tau", scheme.d_tau},
                          {"theta", scheme.theta},
                          {"n_rannacher", scheme.n_rannacher},
                          {"variant", scheme.variant == NonlinearMass::Version2 ? 2 : 1},
                          {"n_elements", mesh.n_elements()},
                          {"n_nodes", mesh.n_nodes()}};

    SolutionHistory history;
    try {
        history = run(sys, mesh, mp, scheme);
    } catch (const std::runtime_error& e) {
        result.aborted = true;
        result.abort_message = e.what();
    }

    RatioAdvisory advisory = ratio_check(cfg.numerics.h, scheme.d_tau);
    report["ratios"] = {{"d_tau_over_h", scheme.d_tau / cfg.numerics.h},
                        {"d_tau_over_h2", scheme.d_tau / (cfg.numerics.h * cfg.numerics.h)},
                        {"ok", advisory.ok},
                        {"warnings", advisory.warnings},
                        {"notes", advisory.notes}};

    if (!result.aborted) {
        result.stability = analyze(history, mesh, scheme, mp.K);
        report["oscillation_index"] = result.stability.oscillation_index;
        report["threshold"] = result.stability.threshold;
        report["flagged"] = result.stability.flagged;
        report["per_level_index"] = result.stability.per_level_index;

        std::vector<double> times = cfg.sample_times;
        if (times.empty()) times.push_back(0.0);

        for (double t : times) {
            PriceCurve curve = price_curve_at(history, t, mp);
            std::string label = time_label(t);

            std::vector<double> S(curve.samples.size()), V(curve.samples.size());
            for (size_t i = 0; i < curve.samples.size(); ++i) {
                S[i] = curve.samples[i].S;
                V[i] = curve.samples[i].V;
            }
            std::string curve_path =
                (fs::path(cfg.out_dir) / ("curve_t" + label + ".csv")).string();
            write_csv(curve_path, {"S", "V_fem"}, {S, V});
            result.files_written.push_back(curve_path);

            if (!cfg.oracles_on) continue;

            // comparison on the vertex grid, where both discretizations own values
            size_t stride = mesh.order == ElementOrder::P2 ? 2 : 1;
            std::vector<double> Sv, Vv;
            for (size_t i = 0; i < curve.samples.size(); i += stride) {
                Sv.push_back(curve.samples[i].S);
                Vv.push_back(curve.samples[i].V);
            }
            SolutionHistory fdm = fdm_solve_on_grid(mp, mesh.element_edges, scheme.d_tau,
                                                    scheme.theta, scheme.n_rannacher);
            PriceCurve fdm_curve = price_curve_at(fdm, t, mp);
            std::vector<double> Vfdm(fdm_curve.samples.size());
            for (size_t i = 0; i < fdm_curve.samples.size(); ++i) {
                Vfdm[i] = fdm_curve.samples[i].V;
            }
            std::vector<double> Vbs(Sv.size());
            for (size_t i = 0; i < Sv.size(); ++i) {
                Vbs[i] = bs_call_closed_form(Sv[i], mp.K, mp.r, mp.sigma, mp.T - t);
            }
            std::string cmp_path =
                (fs::path(cfg.out_dir) / ("comparison_t" + label + ".csv")).string();
            write_csv(cmp_path, {"S", "V_fem", "V_fdm", "V_bs_linear"}, {Sv, Vv, Vfdm, Vbs});
            result.files_written.push_back(cmp_path);
        }
    } else {
        report["aborted"] = true;
        report["abort_message"] = result.abort_message;
    }

    auto t_end = std::chrono::steady_clock::now();
    result.wall_ms = std::chrono::duration<double, std::milli>(t_end - t_start).count();
    report["timing_ms"] = result.wall_ms;

    std::string json_path = (fs::path(cfg.out_dir) / "stability.json").string();
    std::ofstream jout(json_path, std::ios::binary);
    if (!jout) throw std::runtime_error("cannot write " + json_path);
    jout << report.dump(2) << '\n';
    result.files_written.push_back(json_path);

    return result;
}

std::string list_presets_table() {
    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-22s %-5s %-8s %-10s %-5s %s\n", "name", "order",
                  "h", "d_tau", "c", "note");
    out << buf;
    for (const Preset& p : presets()) {
        std::snprintf(buf, sizeof(buf), "%-22s %-5s %-8g %-10g %-5g %s\n", p.name.c_str(),
                      p.order == ElementOrder::P2 ? "P2" : "P1", p.h, p.d_tau, p.market.c,
                      p.note.c_str());
        out << buf;
    }
    return out.str();
}

}  // namespace leland
