#pragma once

#include <utility>
#include <vector>

namespace leland {

// Market inputs for a European call under proportional transaction costs.
struct MarketParams {
    double r = 0.1;          // risk-free rate (per year)
    double sigma = 0.2;      // volatility (per sqrt-year)
    double T = 1.0;          // expiration time (years)
    double K = 100.0;        // strike price
    double c = 0.0;          // round-trip transaction cost fraction
    double dt_hedge = 0.01;  // rehedging interval (years)

    void validate() const;   // throws std::domain_error on invalid fields
};

// Le = sqrt(2/pi) * c / (sigma * sqrt(dt_hedge))
double leland_number(const MarketParams& p);

// Constants of the change of variables
//   tau = sigma^2 (T - t) / 2,   x = ln S + k tau,   u = e^{k tau} V.
// k = 2r/sigma^2 is the unique drift constant for which the substitution
// cancels the r S V_S and r V terms, leaving u_tau = u_xx - u_x + Le|u_xx - u_x|.
struct TransformConstants {
    double k;
    double tau_final;  // sigma^2 T / 2
};
TransformConstants transform_constants(const MarketParams& p);

struct LogCoords {
    double x;
    double tau;
};
LogCoords to_transformed(double S, double t, const MarketParams& p);

struct SpotValue {
    double S;
    double t;
    double V;
};
SpotValue from_transformed(double x, double tau, double u_value, const MarketParams& p);

// u(x, 0) = max(e^x - K, 0)
double initial_profile(double x, double K);

// Dirichlet data on the truncated log-price domain: u = 0 on the left,
// u = e^R - K on the right, independent of tau.
std::pair<double, double> boundary_values(double tau, double R, double K);

struct PricePoint {
    double S;
    double V;
};

struct PriceCurve {
    double t = 0.0;
    std::vector<PricePoint> samples;  // S strictly increasing
};

}  // namespace leland
