#include "leland/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "leland/assembly.hpp"
#include "leland/oracles.hpp"
#include "leland/timestepper.hpp"

namespace leland {

RefinementStudy study(const MarketParams& params, ElementOrder order, std::size_t level_count,
                      double base_h, RatioRule ratio_rule, double ratio) {
    if (level_count < 2) throw std::invalid_argument("study: need at least 2 levels");
    if (!(base_h > 0.0) || !(ratio > 0.0))
        throw std::invalid_argument("study: base_h and ratio must be positive");
    params.validate();
    const double Le = leland_number(params);
    const double R = std::log(params.K) + 2.0;

    RefinementStudy out;
    for (std::size_t lvl = 0; lvl < level_count; ++lvl) {
        const double h = base_h / std::pow(2.0, static_cast<double>(lvl));
        const double d_tau =
            ratio_rule == RatioRule::FixedTauOverH2 ? ratio * h * h : ratio * h;
        const Mesh1D mesh = build_aligned(R, h, std::log(params.K), order);
        const auto [u_left, u_right] = boundary_values(0.0, mesh.nodes.back(), params.K);
        const GlobalSystem sys = assemble(mesh, u_left, u_right);
        SchemeConfig cfg;
        cfg.d_tau = d_tau;
        cfg.Le = Le;
        const SolutionHistory hist = run(sys, mesh, params, cfg);
        const PriceCurve curve = price_curve_at(hist, 0.0, params);

        double err = 0.0;
        for (const auto& [S, V] : curve.samples) {
            if (S < 0.5 * params.K || S > 2.0 * params.K) continue;
            const double ref = bs_call_adjusted(S, params.K, params.r, params.sigma, Le, params.T);
            err = std::max(err, std::abs(V - ref));
        }
        out.levels.push_back({h, d_tau, err});
    }
    for (std::size_t i = 0; i + 1 < out.levels.size(); ++i)
        out.observed_orders.push_back(
            std::log2(out.levels[i].error / out.levels[i + 1].error));
    return out;
}

}  // namespace leland
