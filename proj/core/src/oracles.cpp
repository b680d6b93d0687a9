#include "leland/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "leland/banded.hpp"

namespace leland {

double norm_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double bs_call_closed_form(double S, double K, double r, double sigma, double T_minus_t) {
    if (S < 0.0) throw std::domain_error("bs_call_closed_form: S must be nonnegative");
    if (!(sigma > 0.0)) throw std::domain_error("bs_call_closed_form: sigma must be positive");
    if (T_minus_t < 0.0) throw std::domain_error("bs_call_closed_form: time must be nonnegative");
    if (S == 0.0) return 0.0;
    if (T_minus_t == 0.0) return std::max(S - K, 0.0);
    const double sq = sigma * std::sqrt(T_minus_t);
    const double d1 = (std::log(S / K) + (r + 0.5 * sigma * sigma) * T_minus_t) / sq;
    const double d2 = d1 - sq;
    return S * norm_cdf(d1) - K * std::exp(-r * T_minus_t) * norm_cdf(d2);
}

double bs_call_adjusted(double S, double K, double r, double sigma, double Le,
                        double T_minus_t) {
    if (Le < 0.0) throw std::domain_error("bs_call_adjusted: Le must be nonnegative");
    return bs_call_closed_form(S, K, r, sigma * std::sqrt(1.0 + Le), T_minus_t);
}

SolutionHistory fdm_solve_on_grid(const MarketParams& params, const std::vector<double>& x,
                                  double d_tau, double theta, int n_rannacher) {
    params.validate();
    if (x.size() < 3) throw std::invalid_argument("fdm_solve: need at least 3 grid points");
    if (!(d_tau > 0.0)) throw std::invalid_argument("fdm_solve: d_tau must be positive");
    const double h = x[1] - x[0];
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs((x[i] - x[i - 1]) - h) > 1e-12 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("fdm_solve: grid must be uniform");

    const double Le = leland_number(params);
    const TransformConstants tc = transform_constants(params);
    const std::size_t n = x.size() - 2;
    const double u_left = 0.0;
    const double u_right = std::exp(x.back()) - params.K;

    // interior rows of L = D2 - D1 with central differences
    const double diag = -2.0 / (h * h);
    const double upper = 1.0 / (h * h) - 1.0 / (2.0 * h);
    const double lower = 1.0 / (h * h) + 1.0 / (2.0 * h);
    BandedMatrix L(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        L.set(i, i, diag);
        if (i > 0) L.set(i, i - 1, lower);
        if (i + 1 < n) L.set(i, i + 1, upper);
    }
    std::vector<double> b_L(n, 0.0);
    b_L.front() += lower * u_left;
    b_L.back() += upper * u_right;

    const auto n_main = static_cast<std::size_t>(std::llround(tc.tau_final / d_tau));
    if (n_main < 1) throw std::invalid_argument("fdm_solve: d_tau exceeds the time horizon");
    const double dt = tc.tau_final / static_cast<double>(n_main);

    SolutionHistory hist;
    hist.mesh = build_graded(x, ElementOrder::P1);
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = initial_profile(x[i + 1], params.K);
    hist.tau_levels.push_back(0.0);
    hist.states.push_back(u);

    auto implicit_lu = [&](double th, double step_dt) {
        BandedMatrix a(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            a.set(i, i, 1.0 - th * step_dt * diag);
            if (i > 0) a.set(i, i - 1, -th * step_dt * lower);
            if (i + 1 < n) a.set(i, i + 1, -th * step_dt * upper);
        }
        return BandedLU(a);
    };
    auto advance = [&](std::vector<double>& state, const BandedLU& lu, double th,
                       double step_dt, double tau) {
        std::vector<double> g = leland::apply(L, state);
        for (std::size_t i = 0; i < n; ++i) g[i] += b_L[i];
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = state[i] + (1.0 - th) * step_dt * g[i] + step_dt * Le * std::abs(g[i]) +
                     th * step_dt * b_L[i];
        state = lu.solve(rhs);
        for (double val : state)
            if (!std::isfinite(val))
                throw std::runtime_error("fdm_solve: non-finite value at tau = " +
                                         std::to_string(tau));
    };

    std::size_t first_main = 0;
    if (n_rannacher > 0) {
        const double d_sub = dt / n_rannacher;
        const BandedLU lu = implicit_lu(1.0, d_sub);
        for (int s = 1; s <= n_rannacher; ++s) {
            const double tau = dt * s / n_rannacher;
            advance(u, lu, 1.0, d_sub, tau);
            hist.tau_levels.push_back(tau);
            hist.states.push_back(u);
        }
        first_main = 1;
    }
    if (first_main < n_main) {
        const BandedLU lu = implicit_lu(theta, dt);
        for (std::size_t s = first_main + 1; s <= n_main; ++s) {
            const double tau = dt * static_cast<double>(s);
            advance(u, lu, theta, dt, tau);
            hist.tau_levels.push_back(tau);
            hist.states.push_back(u);
        }
    }
    return hist;
}

SolutionHistory fdm_solve(const MarketParams& params, double R, const FdmConfig& cfg) {
    if (cfg.n_space < 3) throw std::invalid_argument("fdm_solve: n_space must be at least 3");
    std::vector<double> x(cfg.n_space);
    const double h = 2.0 * R / static_cast<double>(cfg.n_space - 1);
    for (std::size_t i = 0; i < cfg.n_space; ++i)
        x[i] = -R + h * static_cast<double>(i);
    x.back() = R;
    return fdm_solve_on_grid(params, x, cfg.d_tau, cfg.theta, cfg.n_rannacher);
}

}  // namespace leland
