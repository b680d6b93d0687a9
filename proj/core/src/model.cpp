#include "leland/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leland {

void MarketParams::validate() const {
    if (!(sigma > 0.0)) throw std::domain_error("MarketParams: sigma must be positive");
    if (!(T > 0.0)) throw std::domain_error("MarketParams: T must be positive");
    if (!(K > 0.0)) throw std::domain_error("MarketParams: K must be positive");
    if (!(dt_hedge > 0.0)) throw std::domain_error("MarketParams: dt_hedge must be positive");
    if (c < 0.0) throw std::domain_error("MarketParams: c must be nonnegative");
    if (r < 0.0) throw std::domain_error("MarketParams: r must be nonnegative");
}

double leland_number(const MarketParams& p) {
    if (!(p.sigma > 0.0)) throw std::domain_error("leland_number: sigma must be positive");
    if (!(p.dt_hedge > 0.0)) throw std::domain_error("leland_number: dt_hedge must be positive");
    return std::sqrt(2.0 / std::numbers::pi) * p.c / (p.sigma * std::sqrt(p.dt_hedge));
}

TransformConstants transform_constants(const MarketParams& p) {
    p.validate();
    return {2.0 * p.r / (p.sigma * p.sigma), 0.5 * p.sigma * p.sigma * p.T};
}

LogCoords to_transformed(double S, double t, const MarketParams& p) {
    if (!(S > 0.0)) throw std::domain_error("to_transformed: S must be positive");
    const auto tc = transform_constants(p);
    const double tau = 0.5 * p.sigma * p.sigma * (p.T - t);
    return {std::log(S) + tc.k * tau, tau};
}

SpotValue from_transformed(double x, double tau, double u_value, const MarketParams& p) {
    const auto tc = transform_constants(p);
    return {std::exp(x - tc.k * tau),
            p.T - 2.0 * tau / (p.sigma * p.sigma),
            std::exp(-tc.k * tau) * u_value};
}

double initial_profile(double x, double K) {
    return std::max(std::exp(x) - K, 0.0);
}

std::pair<double, double> boundary_values(double /*tau*/, double R, double K) {
    if (!(R > std::log(K)))
        throw std::invalid_argument("boundary_values: domain must extend beyond ln K");
    return {0.0, std::exp(R) - K};
}

}  // namespace leland
