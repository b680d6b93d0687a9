#pragma once

#include <array>
#include <memory>
#include <vector>

#include "leland/banded.hpp"
#include "leland/mesh.hpp"

namespace leland {

// Globally assembled system over the interior degrees of freedom. The two
// Dirichlet nodes are eliminated; their coupling through each matrix X is
// carried in b_X[j] = sum over boundary nodes i of X(j, i) * u_i, so that for
// the full nodal vector,  X_full u_full  restricted to interior rows equals
// X u_interior + b_X.
struct GlobalSystem {
    BandedMatrix M;      // mass
    BandedMatrix K;      // stiffness (negative semidefinite)
    BandedMatrix P;      // convection
    BandedMatrix M_bar;  // nonlinear-term mass
    std::vector<double> b_M, b_K, b_P;
    std::array<double, 2> boundary_u = {0.0, 0.0};
    std::shared_ptr<const BandedLU> mass_lu;  // factored M, reused for v-solves
};

GlobalSystem assemble(const Mesh1D& mesh, double u_left, double u_right);

// Solves M v = K u - P u + b_K - b_P for the interior nodal values of
// v = u_xx - u_x. The boundary data (0 and e^R - K) are steady states of the
// transformed equation with v = 0, so v carries homogeneous values at the
// two eliminated nodes.
std::vector<double> compute_v(const GlobalSystem& sys, const std::vector<double>& u_interior);

}  // namespace leland
