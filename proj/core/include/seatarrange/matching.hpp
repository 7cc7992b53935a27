#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seatarrange/rational.hpp"

namespace seat::matching {

struct WeightedEdge {
    int u;
    int v;
    Rational weight;
};

// Simple undirected graph with exact edge weights. Absent edges are absent,
// not zero-weight.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges);

    [[nodiscard]] int vertex_count() const { return n_; }
    [[nodiscard]] const std::vector<WeightedEdge>& edges() const { return edges_; }
    [[nodiscard]] bool has_edge(int u, int v) const;
    [[nodiscard]] const Rational& weight(int u, int v) const;  // ArgumentError if absent

private:
    int n_ = 0;
    std::vector<WeightedEdge> edges_;
    std::vector<int> edge_index_;  // n*n -> index into edges_, -1 if absent
};

// Disjoint unordered vertex pairs, each an edge of the source graph.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // each (u < v), list sorted

    [[nodiscard]] int size() const { return static_cast<int>(pairs.size()); }
    [[nodiscard]] Rational total_weight(const WeightedGraph& g) const;
    [[nodiscard]] Rational min_weight(const WeightedGraph& g) const;  // ArgumentError when empty
};

// Maximum-cardinality matching via blossom contraction (unweighted).
Matching max_cardinality_matching(const WeightedGraph& graph);

// Maximum-weight perfect matching; handles negative weights; nullopt when no
// perfect matching exists. Canonical pair list among optima for small graphs
// (see canonicalization threshold in the implementation).
std::optional<Matching> max_weight_perfect_matching(const WeightedGraph& graph);

// Maximum-weight matching of exactly size s, via dummy-vertex augmentation on
// top of the perfect-matching kernel.
std::optional<Matching> max_weight_matching_of_size(const WeightedGraph& graph, int s);

// Size-s matching maximizing the minimum edge weight, via threshold search
// over distinct weights with cardinality-matching feasibility tests.
std::optional<Matching> bottleneck_matching_of_size(const WeightedGraph& graph, int s);

struct AssignmentResult {
    std::vector<int> assignment;  // row i -> column assignment[i]
    Rational total;
};

// Exact max-weight perfect matching on the complete bipartite graph given by a
// square weight table (Kuhn-Munkres with rational potentials).
AssignmentResult bipartite_max_weight_perfect(const std::vector<std::vector<Rational>>& weights);

struct KnapsackResult {
    std::int64_t best_value = 0;
    std::vector<int> chosen;  // item indices, ascending
};

// 0-1 knapsack, DP over capacity; weights/values non-negative integers.
KnapsackResult knapsack_01(const std::vector<std::pair<std::int64_t, std::int64_t>>& items,
                           std::int64_t capacity);

// Brute-force oracles (exponential; small n only). These gate the kernels in CI.
namespace brute {

Matching max_cardinality(const WeightedGraph& graph);
std::optional<Matching> max_weight_perfect(const WeightedGraph& graph);
std::optional<Matching> max_weight_of_size(const WeightedGraph& graph, int s);
std::optional<Matching> bottleneck_of_size(const WeightedGraph& graph, int s);

}  // namespace brute

}  // namespace seat::matching
