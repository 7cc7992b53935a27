#pragma once

#include <utility>
#include <vector>

#include "seatarrange/errors.hpp"
#include "seatarrange/rational.hpp"

namespace seat {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class SeatGraph {
public:
    SeatGraph() = default;
    // Throws ArgumentError on self-loops, duplicate edges, or out-of-range endpoints.
    SeatGraph(int vertex_count, std::vector<Edge> edges);

    [[nodiscard]] int vertex_count() const { return n_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<int>& neighbors(int v) const;
    [[nodiscard]] int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    [[nodiscard]] bool has_edge(int u, int v) const;

    [[nodiscard]] int max_degree() const;
    [[nodiscard]] Rational average_degree() const;  // 2m/n; ArgumentError when n == 0

    // Connected components, each a sorted vertex list; components ordered by least vertex.
    [[nodiscard]] std::vector<std::vector<int>> components() const;
    // True iff every component has at most `order` vertices.
    [[nodiscard]] bool components_at_most(int order) const;
    // True iff every component is a single edge (n even, no isolated vertices).
    [[nodiscard]] bool is_edge_only() const;
    [[nodiscard]] std::vector<int> isolated_vertices() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

}  // namespace seat
