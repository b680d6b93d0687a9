#include "leland/elements.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace leland {

namespace {

void require_positive(double h) {
    if (!(h > 0.0)) throw std::domain_error("element matrices: h must be positive");
}

// 5-point Gauss-Legendre, exact for polynomials up to degree 9
double gauss5(const std::function<double(double)>& f, double a, double b) {
    static const std::array<double, 5> xs = {0.0, 0.5384693101056831, -0.5384693101056831,
                                             0.9061798459386640, -0.9061798459386640};
    static const std::array<double, 5> ws = {0.5688888888888889, 0.4786286704993665,
                                             0.4786286704993665, 0.2369268850561891,
                                             0.2369268850561891};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t q = 0; q < xs.size(); ++q) sum += ws[q] * f(mid + half * xs[q]);
    return half * sum;
}

}  // namespace

ElementMatrices p1_matrices(double h) {
    require_positive(h);
    ElementMatrices e;
    e.n = 2;
    const double m[2][2] = {{2 * h / 6, h / 6}, {h / 6, 2 * h / 6}};
    const double k[2][2] = {{-1 / h, 1 / h}, {1 / h, -1 / h}};
    const double p[2][2] = {{-0.5, 0.5}, {-0.5, 0.5}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            e.mass[i][j] = m[i][j];
            e.stiffness[i][j] = k[i][j];
            e.convection[i][j] = p[i][j];
            e.abs_mass[i][j] = m[i][j];
        }
    return e;
}

ElementMatrices p2_matrices(double h) {
    require_positive(h);
    ElementMatrices e;
    e.n = 3;
    const double m[3][3] = {{4 * h / 30, 2 * h / 30, -h / 30},
                            {2 * h / 30, 16 * h / 30, 2 * h / 30},
                            {-h / 30, 2 * h / 30, 4 * h / 30}};
    const double k[3][3] = {{-7 / (3 * h), 8 / (3 * h), -1 / (3 * h)},
                            {8 / (3 * h), -16 / (3 * h), 8 / (3 * h)},
                            {-1 / (3 * h), 8 / (3 * h), -7 / (3 * h)}};
    const double p[3][3] = {{-3.0 / 6, 4.0 / 6, -1.0 / 6},
                            {-4.0 / 6, 0.0, 4.0 / 6},
                            {1.0 / 6, -4.0 / 6, 3.0 / 6}};
    const double b[3][3] = {{15 * h / 120, 8 * h / 120, 0.0},
                            {8 * h / 120, 64 * h / 120, 8 * h / 120},
                            {0.0, 8 * h / 120, 15 * h / 120}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            e.mass[i][j] = m[i][j];
            e.stiffness[i][j] = k[i][j];
            e.convection[i][j] = p[i][j];
            e.abs_mass[i][j] = b[i][j];
        }
    return e;
}

ElementMatrices element_matrices(ElementOrder order, double h) {
    return order == ElementOrder::P1 ? p1_matrices(h) : p2_matrices(h);
}

double verify_by_quadrature(ElementOrder order, double h) {
    require_positive(h);
    const ElementMatrices closed = element_matrices(order, h);
    const int n = closed.n;

    // shape functions and derivatives on [0, h]
    std::array<std::function<double(double)>, 3> psi, dpsi;
    if (order == ElementOrder::P1) {
        psi[0] = [h](double x) { return 1.0 - x / h; };
        psi[1] = [h](double x) { return x / h; };
        dpsi[0] = [h](double) { return -1.0 / h; };
        dpsi[1] = [h](double) { return 1.0 / h; };
    } else {
        psi[0] = [h](double x) { const double t = x / h; return (1 - t) * (1 - 2 * t); };
        psi[1] = [h](double x) { const double t = x / h; return 4 * t * (1 - t); };
        psi[2] = [h](double x) { const double t = x / h; return t * (2 * t - 1); };
        dpsi[0] = [h](double x) { return (4 * (x / h) - 3) / h; };
        dpsi[1] = [h](double x) { return (4 - 8 * (x / h)) / h; };
        dpsi[2] = [h](double x) { return (4 * (x / h) - 1) / h; };
    }

    // sign of each P2 shape function on [0, h/2] and [h/2, h]; the end-node
    // quadratics cross zero exactly at the midpoint
    const int signs_p2[3][2] = {{1, -1}, {1, 1}, {-1, 1}};

    double worst = 0.0;
    auto track = [&worst](double got, double want) {
        worst = std::max(worst, std::abs(got - want));
    };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto mass_f = [&](double x) { return psi[i](x) * psi[j](x); };
            auto stiff_f = [&](double x) { return -dpsi[i](x) * dpsi[j](x); };
            auto conv_f = [&](double x) { return dpsi[j](x) * psi[i](x); };
            track(gauss5(mass_f, 0, h / 2) + gauss5(mass_f, h / 2, h), closed.mass[i][j]);
            track(gauss5(stiff_f, 0, h / 2) + gauss5(stiff_f, h / 2, h), closed.stiffness[i][j]);
            track(gauss5(conv_f, 0, h / 2) + gauss5(conv_f, h / 2, h), closed.convection[i][j]);

            double abs_q;
            if (order == ElementOrder::P1 || i == 1) {
                // P1 shapes are nonnegative; the P2 midpoint test row pairs
                // against the plain (unsigned) trial functions
                abs_q = gauss5(mass_f, 0, h / 2) + gauss5(mass_f, h / 2, h);
            } else {
                // end-node test rows pair against |psi_j|
                abs_q = signs_p2[j][0] * gauss5(mass_f, 0, h / 2) +
                        signs_p2[j][1] * gauss5(mass_f, h / 2, h);
            }
            track(abs_q, closed.abs_mass[i][j]);
        }
    }
    return worst;
}

}  // namespace leland
