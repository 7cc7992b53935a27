#pragma once

#include <utility>
#include <vector>

#include "seatarrange/oracle.hpp"

namespace seat::polysolve {

using oracle::SolveReport;

// Seat edges and isolated vertices of a graph whose components all have order
// at most 2; construction fails with GraphClassError otherwise.
struct ComponentProfile {
    std::vector<Edge> edge_list;
    std::vector<int> isolated;
    int n_prime = 0;  // endpoints of edges, = 2 * |edge_list|
};

ComponentProfile component_profile(const SeatGraph& graph);

// Unordered agent pairs {p,q} where q attains p's maximum preference and p
// attains q's (ties allowed); the edge set of the best-preference graph.
std::vector<std::pair<int, int>> mutual_best_pairs(const PreferenceProfile& profile);

// Exact maximum welfare when all seat components have order <= 2: a maximum
// weight matching of size m on the complete agent graph with pair weight
// f_p(q) + f_q(p).
SolveReport mwa_small_components(const Instance& instance);

// Exact maximin utility under the same graph class: a bottleneck matching of
// size m with pair weight min(f_p(q), f_q(p)), capped at 0 when isolated
// vertices exist.
SolveReport mua_small_components(const Instance& instance);

// Envy-freeness when every component is a single edge: feasible iff the
// best-preference graph has a perfect matching.
SolveReport efa_edge_graph(const Instance& instance);

// Envy-freeness for symmetric profiles with components <= 2: negative-only
// agents are peeled onto isolated seats, positive components go in whole or
// not at all (knapsack over pair counts), the rest pairs at mutual zero.
SolveReport efa_symmetric_small_components(const Instance& instance);

// Envy-freeness for strict or positive profiles with components <= 2.
// Positive: infeasible as soon as an edge and an isolated seat coexist.
// Strict: exact search over which agents take isolated seats, driven by
// forced-move propagation; polynomial when no isolated seats exist.
SolveReport efa_strict_or_positive(const Instance& instance);

}  // namespace seat::polysolve
