#include "leland/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace leland {

namespace {

BandedMatrix implicit_matrix(const GlobalSystem& sys, double theta, double d_tau) {
    const std::size_t n = sys.M.dimension();
    const std::size_t hb = sys.M.half_bandwidth();
    BandedMatrix a(n, hb);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= hb ? i - hb : 0;
        const std::size_t hi = std::min(i + hb, n - 1);
        for (std::size_t j = lo; j <= hi; ++j)
            a.set(i, j, sys.M.at(i, j) - theta * d_tau * (sys.K.at(i, j) - sys.P.at(i, j)));
    }
    return a;
}

std::vector<double> step_rhs(const GlobalSystem& sys, const std::vector<double>& u_n,
                             const SchemeConfig& cfg, double theta, double d_tau) {
    const std::vector<double> v = compute_v(sys, u_n);
    std::vector<double> abs_v(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) abs_v[i] = std::abs(v[i]);
    const BandedMatrix& mb = cfg.variant == NonlinearMass::Version1 ? sys.M_bar : sys.M;
    const std::vector<double> w = leland::apply(mb, abs_v);
    const std::vector<double> Mv = leland::apply(sys.M, v);
    const std::vector<double> Mu = leland::apply(sys.M, u_n);

    // boundary data is tau-independent here, so the b_M difference vanishes;
    // it is still formed from the two levels' vectors
    std::vector<double> rhs(u_n.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        const double f_n = Mv[i] + cfg.Le * w[i];
        const double db_m = sys.b_M[i] - sys.b_M[i];
        rhs[i] = Mu[i] + (1.0 - theta) * d_tau * f_n + theta * d_tau * cfg.Le * w[i] +
                 theta * d_tau * (sys.b_K[i] - sys.b_P[i]) - db_m;
    }
    return rhs;
}

void check_finite(const std::vector<double>& u, double tau) {
    for (double x : u)
        if (!std::isfinite(x))
            throw std::runtime_error("time step produced a non-finite value at tau = " +
                                     std::to_string(tau));
}

}  // namespace

std::vector<double> step(const GlobalSystem& sys, const std::vector<double>& u_n,
                         const SchemeConfig& cfg, double theta_eff, double d_tau_eff) {
    if (!(d_tau_eff > 0.0)) throw std::invalid_argument("step: d_tau must be positive");
    const BandedLU lu(implicit_matrix(sys, theta_eff, d_tau_eff));
    return lu.solve(step_rhs(sys, u_n, cfg, theta_eff, d_tau_eff));
}

SolutionHistory run(const GlobalSystem& sys, const Mesh1D& mesh, const MarketParams& params,
                    const SchemeConfig& cfg) {
    params.validate();
    if (!(cfg.d_tau > 0.0)) throw std::invalid_argument("run: d_tau must be positive");
    if (cfg.theta < 0.0 || cfg.theta > 1.0)
        throw std::invalid_argument("run: theta must lie in [0, 1]");
    const TransformConstants tc = transform_constants(params);
    const auto n_main = static_cast<std::size_t>(std::llround(tc.tau_final / cfg.d_tau));
    if (n_main < 1) throw std::invalid_argument("run: d_tau exceeds the time horizon");
    const double d_tau = tc.tau_final / static_cast<double>(n_main);

    SolutionHistory hist;
    hist.mesh = mesh;
    std::vector<double> u(mesh.n_interior());
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = initial_profile(mesh.nodes[i + 1], params.K);
    hist.tau_levels.push_back(0.0);
    hist.states.push_back(u);

    std::size_t first_main = 0;
    if (cfg.n_rannacher > 0) {
        const double d_sub = d_tau / cfg.n_rannacher;
        const BandedLU lu(implicit_matrix(sys, 1.0, d_sub));
        for (int s = 1; s <= cfg.n_rannacher; ++s) {
            u = lu.solve(step_rhs(sys, u, cfg, 1.0, d_sub));
            const double tau = d_tau * s / cfg.n_rannacher;
            check_finite(u, tau);
            hist.tau_levels.push_back(tau);
            hist.states.push_back(u);
        }
        first_main = 1;
    }
    if (first_main < n_main) {
        const BandedLU lu(implicit_matrix(sys, cfg.theta, d_tau));
        for (std::size_t s = first_main + 1; s <= n_main; ++s) {
            u = lu.solve(step_rhs(sys, u, cfg, cfg.theta, d_tau));
            const double tau = d_tau * static_cast<double>(s);
            check_finite(u, tau);
            hist.tau_levels.push_back(tau);
            hist.states.push_back(u);
        }
    }
    return hist;
}

PriceCurve price_curve_at(const SolutionHistory& history, double t, const MarketParams& params) {
    if (t < 0.0 || t > params.T) throw std::out_of_range("price_curve_at: t outside [0, T]");
    double tau = 0.5 * params.sigma * params.sigma * (params.T - t);
    tau = std::clamp(tau, history.tau_levels.front(), history.tau_levels.back());

    const auto& levels = history.tau_levels;
    const auto it = std::lower_bound(levels.begin(), levels.end(), tau);
    const std::size_t hi = std::min<std::size_t>(it - levels.begin(), levels.size() - 1);
    std::vector<double> u = history.states[hi];
    if (hi > 0 && levels[hi] > tau) {
        const std::size_t lo = hi - 1;
        const double wgt = (tau - levels[lo]) / (levels[hi] - levels[lo]);
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] = (1.0 - wgt) * history.states[lo][i] + wgt * history.states[hi][i];
    }

    const Mesh1D& mesh = history.mesh;
    const double u_left = 0.0;
    const double u_right = std::exp(mesh.nodes.back()) - params.K;
    PriceCurve curve;
    curve.t = params.T - 2.0 * tau / (params.sigma * params.sigma);
    curve.samples.resize(mesh.n_nodes());
    for (std::size_t i = 0; i < mesh.n_nodes(); ++i) {
        double ui;
        if (i == 0) ui = u_left;
        else if (i == mesh.n_nodes() - 1) ui = u_right;
        else ui = u[i - 1];
        const SpotValue sv = from_transformed(mesh.nodes[i], tau, ui, params);
        curve.samples[i] = {sv.S, sv.V};
    }
    return curve;
}

}  // namespace leland
