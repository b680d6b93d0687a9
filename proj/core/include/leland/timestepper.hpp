#pragma once

#include <vector>

#include "leland/assembly.hpp"
#include "leland/mesh.hpp"
#include "leland/model.hpp"

namespace leland {

// Version1 keeps the dedicated abs-mass matrix in the nonlinear term;
// Version2 replaces it by the ordinary mass matrix.
enum class NonlinearMass { Version1, Version2 };

struct SchemeConfig {
    double theta = 0.5;  // 0 = explicit Euler, 1 = implicit Euler, 1/2 = Crank-Nicolson
    double d_tau = 1e-3;
    int n_rannacher = 4;  // implicit-Euler substeps replacing the first step
    NonlinearMass variant = NonlinearMass::Version1;
    double Le = 0.0;
};

struct SolutionHistory {
    std::vector<double> tau_levels;
    std::vector<std::vector<double>> states;  // interior nodal u per level
    Mesh1D mesh;
};

// One linearized theta-step: with v^n from compute_v and F^n = M v^n + Le Mb |v^n|,
// solve  (M - theta dt (K - P)) u^{n+1} = M u^n + (1-theta) dt F^n
//        + theta dt Le Mb |v^n| + theta dt (b_K - b_P) - (b_M^{n+1} - b_M^n),
// where Mb is abs_mass (Version1) or mass (Version2). The absolute value is
// frozen at the previous level, which is what makes the step linear.
std::vector<double> step(const GlobalSystem& sys, const std::vector<double>& u_n,
                         const SchemeConfig& cfg, double theta_eff, double d_tau_eff);

// Full integration from the payoff to tau_final, with n_rannacher
// implicit-Euler substeps covering the first step. Throws std::runtime_error
// if a state turns non-finite.
SolutionHistory run(const GlobalSystem& sys, const Mesh1D& mesh, const MarketParams& params,
                    const SchemeConfig& cfg);

// Maps the stored level(s) nearest to physical time t back to (S, V) over all
// nodes, interpolating linearly in tau between bracketing levels.
PriceCurve price_curve_at(const SolutionHistory& history, double t, const MarketParams& params);

}  // namespace leland
