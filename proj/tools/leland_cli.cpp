// Command-line front end: pick a preset, optionally layer a config file and
// ad-hoc key=value overrides on top, run, and write the output files.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leland/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Finite-element option pricer with proportional transaction costs"};

    std::string preset_name;
    std::string config_file;
    std::vector<std::string> overrides;
    std::string out_dir;
    std::string oracles;
    bool list = false;

    app.add_option("--preset", preset_name, "Start from a named preset");
    app.add_option("--config", config_file, "Layer key=value settings from a file");
    app.add_option("--set", overrides, "Override a single setting, key=value (repeatable)");
    app.add_option("--out", out_dir, "Output directory (default: out)");
    app.add_option("--oracles", oracles, "Write reference comparisons: on|off")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_flag("--list-presets", list, "List available presets and exit");

    CLI11_PARSE(app, argc, argv);

    if (list) {
        std::fputs(leland::list_presets_table().c_str(), stdout);
        return 0;
    }

    leland::RunConfig cfg;
    try {
        if (!preset_name.empty()) {
            auto p = leland::find_preset(preset_name);
            if (!p) {
                std::fprintf(stderr, "unknown preset: %s (try --list-presets)\n",
                             preset_name.c_str());
                return 1;
            }
            cfg = leland::config_from_preset(*p);
        }
        if (!config_file.empty()) leland::apply_config_file(cfg, config_file);
        for (const std::string& kv : overrides) leland::apply_override(cfg, kv);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!oracles.empty()) cfg.oracles_on = (oracles == "on");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    try {
        leland::ExperimentResult res = leland::run_experiment(cfg);
        if (res.aborted) {
            std::fprintf(stderr, "run aborted: %s\n", res.abort_message.c_str());
            std::fprintf(stderr, "see %s/stability.json\n", cfg.out_dir.c_str());
            return 2;
        }
        for (const std::string& f : res.files_written) std::printf("wrote %s\n", f.c_str());
        std::printf("oscillation index %.6g (threshold %.3g)%s\n",
                    res.stability.oscillation_index, res.stability.threshold,
                    res.stability.flagged ? " -- FLAGGED as oscillatory" : "");
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
