#include "seatarrange/seat_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace seat {

SeatGraph::SeatGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw ArgumentError("negative vertex count");
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw ArgumentError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
        }
        if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw ArgumentError("duplicate edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
        }
    }
    for (auto e : seen) {
        edges_.push_back(e);
        adjacency_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adjacency_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

const std::vector<int>& SeatGraph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("vertex out of range: " + std::to_string(v));
    return adjacency_[static_cast<std::size_t>(v)];
}

bool SeatGraph::has_edge(int u, int v) const {
    const auto& adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

int SeatGraph::max_degree() const {
    int best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

Rational SeatGraph::average_degree() const {
    if (n_ == 0) throw ArgumentError("average degree of empty graph");
    return Rational(2 * static_cast<std::int64_t>(edges_.size()), n_);
}

std::vector<std::vector<int>> SeatGraph::components() const {
    std::vector<int> label(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n_; ++start) {
        if (label[static_cast<std::size_t>(start)] != -1) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{start};
        label[static_cast<std::size_t>(start)] = id;
        std::vector<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adjacency_[static_cast<std::size_t>(v)]) {
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool SeatGraph::components_at_most(int order) const {
    for (const auto& comp : components()) {
        if (static_cast<int>(comp.size()) > order) return false;
    }
    return true;
}

bool SeatGraph::is_edge_only() const {
    for (const auto& adj : adjacency_) {
        if (adj.size() != 1) return false;
    }
    return true;  // the empty graph is vacuously edge-only
}

std::vector<int> SeatGraph::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        if (adjacency_[static_cast<std::size_t>(v)].empty()) out.push_back(v);
    }
    return out;
}

}  // namespace seat
