#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "leland/experiment.hpp"

using namespace leland;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("leland_test_" + tag);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig quick_config(const std::string& out_dir) {
    RunConfig cfg;
    cfg.market.c = 0.01;
    cfg.numerics.h = 0.2;
    cfg.numerics.d_tau = 2e-3;
    cfg.out_dir = out_dir;
    return cfg;
}

}  // namespace

TEST_CASE("preset catalogue") {
    const auto& all = presets();
    REQUIRE(!all.empty());

    const auto le08 = find_preset("le08-coarse");
    REQUIRE(le08.has_value());
    CHECK(le08->market.c == 0.02);
    CHECK(le08->h == 0.1);
    CHECK(le08->d_tau == 1e-3);
    CHECK(le08->order == ElementOrder::P1);

    const auto fine = find_preset("le12-p1-stable-fine");
    REQUIRE(fine.has_value());
    CHECK(fine->market.c == 0.03);
    CHECK(fine->h == 0.025);
    CHECK(fine->d_tau == 6.25e-5);

    const auto p2 = find_preset("le12-p2-unstable");
    REQUIRE(p2.has_value());
    CHECK(p2->order == ElementOrder::P2);

    CHECK_FALSE(find_preset("no-such-preset").has_value());

    const std::string table = list_presets_table();
    for (const Preset& p : all) CHECK(table.find(p.name) != std::string::npos);
}

TEST_CASE("preset expands into a run configuration") {
    const auto p = find_preset("le04-p2-coarse");
    REQUIRE(p.has_value());
    const RunConfig cfg = config_from_preset(*p);
    CHECK(cfg.market.c == p->market.c);
    CHECK(cfg.numerics.order == p->order);
    CHECK(cfg.numerics.h == p->h);
    CHECK(cfg.numerics.d_tau == p->d_tau);
    CHECK(cfg.numerics.theta == p->theta);
    CHECK(cfg.preset_name == "le04-p2-coarse");
    CHECK(cfg.sample_times.empty());
    CHECK(cfg.oracles_on);
}

TEST_CASE("overrides update individual settings") {
    RunConfig cfg;
    apply_override(cfg, "r=0.05");
    apply_override(cfg, "sigma=0.3");
    apply_override(cfg, "T=2");
    apply_override(cfg, "K=50");
    apply_override(cfg, "c=0.015");
    apply_override(cfg, "dt_hedge=0.02");
    apply_override(cfg, "order=2");
    apply_override(cfg, "R=7.5");
    apply_override(cfg, "h=0.05");
    apply_override(cfg, "d_tau=0.0005");
    apply_override(cfg, "theta=1");
    apply_override(cfg, "n_rannacher=2");
    apply_override(cfg, "variant=2");
    apply_override(cfg, "times=0,0.5,1");
    apply_override(cfg, "out=some/dir");
    apply_override(cfg, "oracles=off");

    CHECK(cfg.market.r == 0.05);
    CHECK(cfg.market.sigma == 0.3);
    CHECK(cfg.market.T == 2.0);
    CHECK(cfg.market.K == 50.0);
    CHECK(cfg.market.c == 0.015);
    CHECK(cfg.market.dt_hedge == 0.02);
    CHECK(cfg.numerics.order == ElementOrder::P2);
    CHECK(cfg.numerics.R == 7.5);
    CHECK(cfg.numerics.h == 0.05);
    CHECK(cfg.numerics.d_tau == 0.0005);
    CHECK(cfg.numerics.theta == 1.0);
    CHECK(cfg.numerics.n_rannacher == 2);
    CHECK(cfg.numerics.variant == NonlinearMass::Version2);
    REQUIRE(cfg.sample_times.size() == 3);
    CHECK(cfg.sample_times[1] == 0.5);
    CHECK(cfg.out_dir == "some/dir");
    CHECK_FALSE(cfg.oracles_on);

    apply_override(cfg, "order", "p1");
    CHECK(cfg.numerics.order == ElementOrder::P1);
    apply_override(cfg, "oracles", "on");
    CHECK(cfg.oracles_on);
}

TEST_CASE("bad overrides are rejected") {
    RunConfig cfg;
    CHECK_THROWS_AS(apply_override(cfg, "volatility=0.2"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "no_equals_sign"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "h=abc"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "h=0.1xyz"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "order=3"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "variant=0"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "oracles=maybe"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(cfg, "n_rannacher=two"), std::invalid_argument);
}

TEST_CASE("config files layer key=value lines") {
    const fs::path dir = fresh_dir("cfgfile");
    fs::create_directories(dir);
    const fs::path file = dir / "run.cfg";
    {
        std::ofstream out(file);
        out << "# comment line\n";
        out << "\n";
        out << "  c = 0.02  \n";
        out << "h=0.05\n";
        out << "times=0.25\n";
    }
    RunConfig cfg;
    apply_config_file(cfg, file.string());
    CHECK(cfg.market.c == 0.02);
    CHECK(cfg.numerics.h == 0.05);
    REQUIRE(cfg.sample_times.size() == 1);
    CHECK(cfg.sample_times[0] == 0.25);

    CHECK_THROWS_AS(apply_config_file(cfg, (dir / "missing.cfg").string()),
                    std::runtime_error);

    const fs::path bad = dir / "bad.cfg";
    {
        std::ofstream out(bad);
        out << "c=0.01\n";
        out << "mystery=1\n";
    }
    try {
        apply_config_file(cfg, bad.string());
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        // the message names the file and line
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
}

TEST_CASE("scientific formatting with 15 significant digits") {
    CHECK(format_sci(1.0) == "1.00000000000000e+00");
    CHECK(format_sci(303.4287934927351) == "3.03428793492735e+02");
    CHECK(format_sci(0.0) == "0.00000000000000e+00");
    CHECK(format_sci(-2.5e-13) == "-2.50000000000000e-13");
    for (double x : {13.269676584660893, 303.4287934927351, 3.14159e-7, 1e8}) {
        const double back = std::stod(format_sci(x));
        CHECK(std::abs(back - x) <= 1e-12 * std::max(1.0, std::abs(x)));
    }
}

TEST_CASE("an experiment writes curve, comparison, and report files") {
    const fs::path dir = fresh_dir("basic");
    const RunConfig cfg = quick_config(dir.string());
    const ExperimentResult res = run_experiment(cfg);
    CHECK_FALSE(res.aborted);
    CHECK(fs::exists(dir / "curve_t0.csv"));
    CHECK(fs::exists(dir / "comparison_t0.csv"));
    CHECK(fs::exists(dir / "stability.json"));
    CHECK(res.files_written.size() == 3);
    CHECK(res.wall_ms > 0.0);

    // curve header and shape
    std::istringstream curve(slurp(dir / "curve_t0.csv"));
    std::string line;
    REQUIRE(std::getline(curve, line));
    CHECK(line == "S,V_fem");
    double prev_S = -1.0;
    std::size_t rows = 0;
    while (std::getline(curve, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const double S = std::stod(line.substr(0, comma));
        const double V = std::stod(line.substr(comma + 1));
        CHECK(S > prev_S);
        CHECK(std::isfinite(V));
        prev_S = S;
        ++rows;
    }
    CHECK(rows >= 60);

    std::istringstream cmp(slurp(dir / "comparison_t0.csv"));
    REQUIRE(std::getline(cmp, line));
    CHECK(line == "S,V_fem,V_fdm,V_bs_linear");

    const auto report = nlohmann::json::parse(slurp(dir / "stability.json"));
    CHECK(report.contains("oscillation_index"));
    CHECK(report.contains("per_level_index"));
    CHECK(report["threshold"] == 0.01);
    CHECK(report["flagged"].is_boolean());
    CHECK(report["numerics"]["h"] == 0.2);
    CHECK(report["ratios"]["d_tau_over_h2"].get<double>() ==
          doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("reruns write byte-identical data files") {
    const fs::path dir1 = fresh_dir("rerun1");
    const fs::path dir2 = fresh_dir("rerun2");
    RunConfig cfg = quick_config(dir1.string());
    run_experiment(cfg);
    cfg.out_dir = dir2.string();
    run_experiment(cfg);
    CHECK(slurp(dir1 / "curve_t0.csv") == slurp(dir2 / "curve_t0.csv"));
    CHECK(slurp(dir1 / "comparison_t0.csv") == slurp(dir2 / "comparison_t0.csv"));
}

TEST_CASE("oracles can be switched off") {
    const fs::path dir = fresh_dir("nooracle");
    RunConfig cfg = quick_config(dir.string());
    cfg.oracles_on = false;
    const ExperimentResult res = run_experiment(cfg);
    CHECK(fs::exists(dir / "curve_t0.csv"));
    CHECK_FALSE(fs::exists(dir / "comparison_t0.csv"));
    CHECK(res.files_written.size() == 2);
}

TEST_CASE("sample times name the output files") {
    const fs::path dir = fresh_dir("times");
    RunConfig cfg = quick_config(dir.string());
    cfg.oracles_on = false;
    cfg.sample_times = {0.0, 0.5, 1.0};
    run_experiment(cfg);
    CHECK(fs::exists(dir / "curve_t0.csv"));
    CHECK(fs::exists(dir / "curve_t0.5.csv"));
    CHECK(fs::exists(dir / "curve_t1.csv"));
}

TEST_CASE("an oscillatory preset is flagged in the report") {
    const fs::path dir = fresh_dir("flagged");
    const auto p = find_preset("le12-p1-unstable");
    REQUIRE(p.has_value());
    RunConfig cfg = config_from_preset(*p);
    cfg.out_dir = dir.string();
    cfg.oracles_on = false;
    const ExperimentResult res = run_experiment(cfg);
    CHECK(res.stability.flagged);
    const auto report = nlohmann::json::parse(slurp(dir / "stability.json"));
    CHECK(report["flagged"] == true);
    CHECK(report["preset"] == "le12-p1-unstable");
    CHECK(report["oscillation_index"].get<double>() > 0.01);
}

TEST_CASE("a diverging run is reported as aborted") {
    const fs::path dir = fresh_dir("abort");
    RunConfig cfg;
    cfg.numerics.theta = 0.0;
    cfg.numerics.h = 0.005;
    cfg.numerics.d_tau = 5e-5;  // d_tau/h^2 = 2, far beyond the explicit limit
    cfg.numerics.n_rannacher = 0;
    cfg.out_dir = dir.string();
    const ExperimentResult res = run_experiment(cfg);
    CHECK(res.aborted);
    CHECK_FALSE(res.abort_message.empty());
    CHECK_FALSE(fs::exists(dir / "curve_t0.csv"));
    const auto report = nlohmann::json::parse(slurp(dir / "stability.json"));
    CHECK(report["aborted"] == true);
}
