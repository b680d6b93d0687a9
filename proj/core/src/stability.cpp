#include "leland/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leland {

namespace {

double level_index(const std::vector<double>& u_interior, const std::vector<std::size_t>& sel,
                   const std::vector<double>& coords) {
    // second differences via divided differences (handles graded spacing)
    const std::size_t m = sel.size();
    if (m < 3) return 0.0;
    std::vector<double> d(m - 2);
    double umin = u_interior[sel[0]], umax = umin;
    for (std::size_t q = 0; q < m; ++q) {
        umin = std::min(umin, u_interior[sel[q]]);
        umax = std::max(umax, u_interior[sel[q]]);
    }
    for (std::size_t q = 1; q + 1 < m; ++q) {
        const double s0 = coords[q] - coords[q - 1];
        const double s1 = coords[q + 1] - coords[q];
        d[q - 1] = 2.0 * ((u_interior[sel[q + 1]] - u_interior[sel[q]]) / s1 -
                          (u_interior[sel[q]] - u_interior[sel[q - 1]]) / s0) /
                   (s0 + s1);
    }
    const double range = umax - umin;
    if (!(range > 0.0)) return 0.0;
    double alt = 0.0;
    for (std::size_t q = 0; q + 1 < d.size(); ++q)
        if (d[q] * d[q + 1] < 0.0) alt += std::min(std::abs(d[q]), std::abs(d[q + 1]));
    return alt / (range * static_cast<double>(m));
}

}  // namespace

StabilityReport analyze(const SolutionHistory& history, const Mesh1D& mesh,
                        const SchemeConfig& cfg, double strike, double threshold) {
    if (history.states.empty()) throw std::invalid_argument("analyze: empty history");

    StabilityReport report;
    report.threshold = threshold;
    const double h = mesh.element_size(0);
    report.ratio_tau_h = cfg.d_tau / h;
    report.ratio_tau_h2 = cfg.d_tau / (h * h);

    // vertex nodes (interior) inside the strike window, with both neighbors
    // available inside the interior set
    const double x_star = std::log(strike);
    const std::size_t stride = mesh.order == ElementOrder::P1 ? 1 : 2;
    std::vector<std::size_t> sel;
    std::vector<double> coords;
    for (std::size_t node = 1; node + 1 < mesh.n_nodes(); ++node) {
        if (stride == 2 && (node % 2) != 0) continue;
        if (std::abs(mesh.nodes[node] - x_star) > 1.0) continue;
        sel.push_back(node - 1);
        coords.push_back(mesh.nodes[node]);
    }
    // widen by one vertex on each side so window-edge nodes get second differences
    if (!sel.empty()) {
        if (sel.front() >= stride) {
            sel.insert(sel.begin(), sel.front() - stride);
            coords.insert(coords.begin(), mesh.nodes[sel.front() + 1]);
        }
        if (sel.back() + stride < mesh.n_interior()) {
            sel.push_back(sel.back() + stride);
            coords.push_back(mesh.nodes[sel.back() + 1]);
        }
    }

    report.per_level_index.reserve(history.states.size());
    for (const auto& state : history.states)
        report.per_level_index.push_back(level_index(state, sel, coords));

    // startup window: the implicit-Euler substeps cover [0, d_tau]
    const double startup_end = cfg.n_rannacher > 0 ? cfg.d_tau : 0.0;
    double idx = 0.0;
    for (std::size_t l = 1; l < history.tau_levels.size(); ++l)
        if (history.tau_levels[l] > startup_end * (1.0 + 1e-12))
            idx = std::max(idx, report.per_level_index[l]);
    report.oscillation_index = idx;
    report.flagged = idx > threshold;
    return report;
}

RatioAdvisory ratio_check(double h, double d_tau) {
    if (!(h > 0.0) || !(d_tau > 0.0))
        throw std::invalid_argument("ratio_check: h and d_tau must be positive");
    RatioAdvisory adv;
    const double r1 = d_tau / h;
    const double r2 = d_tau / (h * h);
    if (r1 >= 1.0) {
        adv.warnings.push_back("d_tau/h = " + std::to_string(r1) + " is not below 1");
        adv.ok = false;
    }
    if (r2 >= 1.0) {
        adv.warnings.push_back("d_tau/h^2 = " + std::to_string(r2) + " is not below 1");
        adv.ok = false;
    }
    if (adv.ok && r2 > 0.5)
        adv.notes.push_back("d_tau/h^2 = " + std::to_string(r2) +
                            " is near the regime where oscillations have been observed");
    return adv;
}

}  // namespace leland
