#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leland/mesh.hpp"
#include "leland/model.hpp"
#include "leland/timestepper.hpp"

namespace leland {

// A named, reproducible experiment configuration. All presets share the
// reference market (r = 0.1, sigma = 0.2, T = 1, K = 100, rehedging every
// 0.01 years) and vary the cost level and discretization.
struct Preset {
    std::string name;
    std::string note;
    MarketParams market;
    ElementOrder order = ElementOrder::P1;
    double h = 0.1;
    double d_tau = 1e-3;
    double theta = 0.5;
    int n_rannacher = 4;
    NonlinearMass variant = NonlinearMass::Version1;
    double R = 0.0;  // domain half-width target; 0 means ln K + 2
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(const std::string& name);

}  // namespace leland
