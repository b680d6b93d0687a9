#pragma once

#include "leland/mesh.hpp"

namespace leland {

// Per-element matrices of the Galerkin discretization on one element of size h:
//   mass(i,j)       = int psi_i psi_j
//   stiffness(i,j)  = -int psi_i' psi_j'          (negative semidefinite)
//   convection(i,j) = int psi_j' psi_i            (row = test function)
//   abs_mass(i,j)   = the nonlinear-term mass matrix pairing |v| with the
//                     test functions; equals mass for P1.
// Entries beyond the element's node count are zero.
struct ElementMatrices {
    int n = 0;  // 2 for P1, 3 for P2
    double mass[3][3] = {};
    double stiffness[3][3] = {};
    double convection[3][3] = {};
    double abs_mass[3][3] = {};
};

ElementMatrices p1_matrices(double h);
ElementMatrices p2_matrices(double h);
ElementMatrices element_matrices(ElementOrder order, double h);

// Recomputes all four matrices by Gauss-Legendre quadrature of the defining
// integrals and returns the maximum entrywise deviation from the closed
// forms above. The P2 abs_mass integrands contain |psi| of the end-node
// quadratics, which change sign at the element midpoint, so the quadrature
// splits the element there.
double verify_by_quadrature(ElementOrder order, double h);

}  // namespace leland
