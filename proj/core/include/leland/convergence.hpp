#pragma once

#include <cstddef>
#include <vector>

#include "leland/mesh.hpp"
#include "leland/model.hpp"

namespace leland {

enum class RatioRule { FixedTauOverH2, FixedTauOverH };

struct RefinementLevel {
    double h;
    double d_tau;
    double error;  // max |V - oracle| at nodes with S in [K/2, 2K], t = 0
};

struct RefinementStudy {
    std::vector<RefinementLevel> levels;  // sorted by decreasing h
    std::vector<double> observed_orders;  // log2(error_i / error_{i+1})
};

// Runs the solver on nested refinements h = base_h / 2^i with d_tau tied to h
// by the ratio rule, measuring against the closed-form price (adjusted
// volatility when Le > 0). Boundary-truncation error is excluded by
// restricting the metric to the money neighborhood.
RefinementStudy study(const MarketParams& params, ElementOrder order, std::size_t level_count,
                      double base_h, RatioRule ratio_rule, double ratio = 0.1);

}  // namespace leland
