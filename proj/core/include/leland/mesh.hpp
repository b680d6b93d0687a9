#pragma once

#include <cstddef>
#include <vector>

namespace leland {

enum class ElementOrder { P1 = 1, P2 = 2 };

// 1D partition with the degree-of-freedom layout for Lagrange elements:
// P1 uses the element vertices, P2 additionally one midpoint per element.
// Nodes are globally ordered left to right, so assembled matrices are banded
// with half-bandwidth 1 (P1) or 2 (P2).
struct Mesh1D {
    ElementOrder order = ElementOrder::P1;
    std::vector<double> element_edges;
    std::vector<double> nodes;
    std::size_t boundary_ids[2] = {0, 0};

    std::size_t n_elements() const { return element_edges.size() - 1; }
    std::size_t n_nodes() const { return nodes.size(); }
    std::size_t n_interior() const { return nodes.size() - 2; }
    double element_size(std::size_t j) const { return element_edges[j + 1] - element_edges[j]; }
    std::size_t nodes_per_element() const { return order == ElementOrder::P1 ? 2 : 3; }
    // global node ids of element j, left to right
    std::size_t element_node(std::size_t j, std::size_t local) const {
        return order == ElementOrder::P1 ? j + local : 2 * j + local;
    }
};

Mesh1D build_uniform(double R, std::size_t n_elements, ElementOrder order);
Mesh1D build_graded(const std::vector<double>& edges, ElementOrder order);

// Uniform spacing h with a vertex placed exactly at x_align; the requested
// half-width R is trimmed to the nearest multiples of h on both sides so the
// kink of the payoff does not fall between nodes.
Mesh1D build_aligned(double R, double h, double x_align, ElementOrder order);

}  // namespace leland
