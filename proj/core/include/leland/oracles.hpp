#pragma once

#include <cstddef>
#include <vector>

#include "leland/model.hpp"
#include "leland/timestepper.hpp"

namespace leland {

// Standard normal CDF via the complementary error function,
// Phi(z) = erfc(-z / sqrt(2)) / 2; accurate to well below 1e-10 everywhere.
double norm_cdf(double z);

double bs_call_closed_form(double S, double K, double r, double sigma, double T_minus_t);

// Closed form with volatility sigma * sqrt(1 + Le); for convex payoffs the
// transaction-cost equation reduces to this linear one.
double bs_call_adjusted(double S, double K, double r, double sigma, double Le,
                        double T_minus_t);

struct FdmConfig {
    std::size_t n_space = 3;  // grid points spanning [-R, R]
    double d_tau = 1e-3;
    double theta = 0.5;
    int n_rannacher = 4;  // same startup treatment as the finite-element runs
};

// Finite-difference companion solver for the same transformed equation
// u_tau = u_xx - u_x + Le |u_xx - u_x|: central differences for both
// derivatives, the same frozen-absolute-value linearization, theta-scheme in
// time, and the same initial/boundary data.
SolutionHistory fdm_solve(const MarketParams& params, double R, const FdmConfig& cfg);

// Same solver on a caller-supplied uniform grid (e.g. the vertex grid of a
// finite-element mesh, so the two methods can be compared node by node).
SolutionHistory fdm_solve_on_grid(const MarketParams& params, const std::vector<double>& x,
                                  double d_tau, double theta, int n_rannacher);

}  // namespace leland
