#include "leland/assembly.hpp"

#include <stdexcept>

#include "leland/elements.hpp"

namespace leland {

GlobalSystem assemble(const Mesh1D& mesh, double u_left, double u_right) {
    const std::size_t n = mesh.n_interior();
    if (n == 0) throw std::invalid_argument("assemble: mesh has no interior nodes");
    const std::size_t hb = mesh.order == ElementOrder::P1 ? 1 : 2;
    const std::size_t last = mesh.n_nodes() - 1;

    GlobalSystem sys;
    sys.M = BandedMatrix(n, hb);
    sys.K = BandedMatrix(n, hb);
    sys.P = BandedMatrix(n, hb);
    sys.M_bar = BandedMatrix(n, hb);
    sys.b_M.assign(n, 0.0);
    sys.b_K.assign(n, 0.0);
    sys.b_P.assign(n, 0.0);
    sys.boundary_u = {u_left, u_right};

    const std::size_t npe = mesh.nodes_per_element();
    for (std::size_t e = 0; e < mesh.n_elements(); ++e) {
        const ElementMatrices em = element_matrices(mesh.order, mesh.element_size(e));
        for (std::size_t a = 0; a < npe; ++a) {
            const std::size_t ga = mesh.element_node(e, a);
            if (ga == 0 || ga == last) continue;  // Dirichlet test rows are dropped
            const std::size_t row = ga - 1;
            for (std::size_t b = 0; b < npe; ++b) {
                const std::size_t gb = mesh.element_node(e, b);
                if (gb == 0 || gb == last) {
                    const double ub = gb == 0 ? u_left : u_right;
                    sys.b_M[row] += em.mass[a][b] * ub;
                    sys.b_K[row] += em.stiffness[a][b] * ub;
                    sys.b_P[row] += em.convection[a][b] * ub;
                } else {
                    sys.M.add(row, gb - 1, em.mass[a][b]);
                    sys.K.add(row, gb - 1, em.stiffness[a][b]);
                    sys.P.add(row, gb - 1, em.convection[a][b]);
                    sys.M_bar.add(row, gb - 1, em.abs_mass[a][b]);
                }
            }
        }
    }
    sys.mass_lu = std::make_shared<const BandedLU>(sys.M);
    return sys;
}

std::vector<double> compute_v(const GlobalSystem& sys, const std::vector<double>& u_interior) {
    if (u_interior.size() != sys.M.dimension())
        throw std::invalid_argument("compute_v: dimension mismatch");
    const std::vector<double> Ku = leland::apply(sys.K, u_interior);
    const std::vector<double> Pu = leland::apply(sys.P, u_interior);
    std::vector<double> rhs(u_interior.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = Ku[i] - Pu[i] + sys.b_K[i] - sys.b_P[i];
    return sys.mass_lu->solve(rhs);
}

}  // namespace leland
