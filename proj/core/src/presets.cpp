#include "leland/presets.hpp"

namespace leland {

namespace {

Preset make(std::string name, std::string note, double c, ElementOrder order, double h,
            double d_tau) {
    Preset p;
    p.name = std::move(name);
    p.note = std::move(note);
    p.market = MarketParams{0.1, 0.2, 1.0, 100.0, c, 0.01};
    p.order = order;
    p.h = h;
    p.d_tau = d_tau;
    return p;
}

std::vector<Preset> build_table() {
    std::vector<Preset> t;
    t.push_back(make("linear-p1", "zero-cost reference, P1, matches the closed form",
                     0.0, ElementOrder::P1, 0.05, 0.00025));
    t.push_back(make("linear-p2", "zero-cost reference, P2", 0.0, ElementOrder::P2, 0.05,
                     0.00025));
    t.push_back(make("le04-coarse", "Le~0.4, P1, d_tau/h^2 = 0.1", 0.01, ElementOrder::P1,
                     0.1, 0.001));
    t.push_back(make("le04-p2-coarse", "Le~0.4, P2, same discretization", 0.01,
                     ElementOrder::P2, 0.1, 0.001));
    t.push_back(make("le08-coarse", "Le~0.8, P1, d_tau/h^2 = 0.1", 0.02, ElementOrder::P1,
                     0.1, 0.001));
    t.push_back(make("le12-p1-unstable", "Le~1.2, P1, d_tau/h^2 = 0.8: oscillates",
                     0.03, ElementOrder::P1, 0.0125, 0.000125));
    t.push_back(make("le12-p1-stable", "Le~1.2, P1, d_tau/h = 0.005: stable", 0.03,
                     ElementOrder::P1, 0.05, 0.00025));
    t.push_back(make("le12-p1-stable-fine", "Le~1.2, P1, refined and stable", 0.03,
                     ElementOrder::P1, 0.025, 0.0000625));
    t.push_back(make("le12-p2-unstable", "Le~1.2, P2, d_tau/h^2 = 0.8: oscillates",
                     0.03, ElementOrder::P2, 0.0125, 0.000125));
    return t;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = build_table();
    return table;
}

std::optional<Preset> find_preset(const std::string& name) {
    for (const Preset& p : presets())
        if (p.name == name) return p;
    return std::nullopt;
}

}  // namespace leland
