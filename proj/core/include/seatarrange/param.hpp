#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seatarrange/oracle.hpp"

namespace seat::param {

using oracle::SolveReport;

struct VertexCoverResult {
    std::vector<int> cover;  // sorted ascending
    [[nodiscard]] int size() const { return static_cast<int>(cover.size()); }
};

// Exact minimum vertex cover by branching on an uncovered edge; exponential
// only in the cover size.
VertexCoverResult min_vertex_cover(const SeatGraph& graph);

// Exact maximum welfare, parameterized by the vertex cover number of the seat
// graph: every injective placement of agents on cover seats is enumerated and
// the independent seats are filled by one bipartite assignment each. Refuses
// to start when the placement count exceeds node_budget.
SolveReport mwa_vertex_cover(const Instance& instance, long long node_budget = 50'000'000);

// Exchange-stable arrangement for symmetric profiles. A welfare-maximal
// arrangement cannot admit a blocking swap when preferences are symmetric, so
// this reuses the vertex cover solver and rechecks the invariant.
SolveReport sta_symmetric(const Instance& instance, long long node_budget = 50'000'000);

struct SwapPlan {
    Arrangement target;
    // Agent pairs to swap, applied first to last, turning the start
    // arrangement into target. Size equals the swap distance.
    std::vector<std::pair<int, int>> transpositions;
};

// Finds an exchange-stable arrangement reachable from start in at most k
// swaps, or nullopt. Candidates are scanned distance by distance, each layer
// in lexicographic order of the resulting seat vector, so the answer is the
// lexicographically smallest stable arrangement at the smallest distance.
// Throws BudgetError when the candidate count would exceed the budget.
std::optional<SwapPlan> local_k_sta(const Instance& instance, const Arrangement& start, int k,
                                    long long budget = 5'000'000);

}  // namespace seat::param
