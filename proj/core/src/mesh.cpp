#include "leland/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace leland {

namespace {

Mesh1D from_edges(std::vector<double> edges, ElementOrder order) {
    const std::size_t ne = edges.size() - 1;
    Mesh1D mesh;
    mesh.order = order;
    if (order == ElementOrder::P1) {
        mesh.nodes = edges;
    } else {
        mesh.nodes.resize(2 * ne + 1);
        for (std::size_t j = 0; j < ne; ++j) {
            mesh.nodes[2 * j] = edges[j];
            mesh.nodes[2 * j + 1] = 0.5 * (edges[j] + edges[j + 1]);
        }
        mesh.nodes.back() = edges.back();
    }
    mesh.element_edges = std::move(edges);
    mesh.boundary_ids[0] = 0;
    mesh.boundary_ids[1] = mesh.nodes.size() - 1;
    return mesh;
}

}  // namespace

Mesh1D build_uniform(double R, std::size_t n_elements, ElementOrder order) {
    if (n_elements < 2) throw std::invalid_argument("build_uniform: need at least 2 elements");
    if (!(R > 0.0)) throw std::invalid_argument("build_uniform: R must be positive");
    const double h = 2.0 * R / static_cast<double>(n_elements);
    std::vector<double> edges(n_elements + 1);
    for (std::size_t j = 0; j <= n_elements; ++j)
        edges[j] = -R + h * static_cast<double>(j);
    edges.back() = R;
    return from_edges(std::move(edges), order);
}

Mesh1D build_graded(const std::vector<double>& edges, ElementOrder order) {
    if (edges.size() < 3) throw std::invalid_argument("build_graded: need at least 2 elements");
    for (std::size_t j = 1; j < edges.size(); ++j)
        if (!(edges[j] > edges[j - 1]))
            throw std::invalid_argument("build_graded: edges must be strictly increasing");
    return from_edges(edges, order);
}

Mesh1D build_aligned(double R, double h, double x_align, ElementOrder order) {
    if (!(h > 0.0)) throw std::invalid_argument("build_aligned: h must be positive");
    if (!(R > 0.0) || x_align <= -R || x_align >= R)
        throw std::invalid_argument("build_aligned: alignment point must lie inside (-R, R)");
    const auto m_left = static_cast<long long>(std::llround((x_align + R) / h));
    const auto m_right = static_cast<long long>(std::llround((R - x_align) / h));
    if (m_left < 1 || m_right < 1)
        throw std::invalid_argument("build_aligned: domain too small for requested spacing");
    std::vector<double> edges(static_cast<std::size_t>(m_left + m_right) + 1);
    for (std::size_t j = 0; j < edges.size(); ++j)
        edges[j] = x_align + h * static_cast<double>(static_cast<long long>(j) - m_left);
    return from_edges(std::move(edges), order);
}

}  // namespace leland
