#pragma once

#include <utility>
#include <vector>

#include "seatarrange/arrangement.hpp"
#include "seatarrange/instance.hpp"

namespace seat {

// Sum of the agent's preferences toward the occupants of its seat's neighbors.
Rational utility(const Instance& instance, const Arrangement& arrangement, int agent);

// Sum of all utilities.
Rational social_welfare(const Instance& instance, const Arrangement& arrangement);

// Minimum utility over agents; 0 for the empty instance.
Rational min_utility(const Instance& instance, const Arrangement& arrangement);

// Unordered pairs (p < q) where both agents strictly gain by exchanging seats,
// in lexicographic order.
std::vector<std::pair<int, int>> blocking_pairs(const Instance& instance,
                                                const Arrangement& arrangement);

// Ordered pairs (p, q) where p strictly gains by taking q's seat (via the
// (p,q)-swap), in lexicographic order.
std::vector<std::pair<int, int>> envy_pairs(const Instance& instance,
                                            const Arrangement& arrangement);

bool is_stable(const Instance& instance, const Arrangement& arrangement);
bool is_envy_free(const Instance& instance, const Arrangement& arrangement);

struct DynamicsResult {
    Arrangement arrangement;
    int steps = 0;
    bool converged = false;
};

// Repeatedly applies the lexicographically first blocking-pair swap. Converges
// for symmetric profiles (each swap strictly raises welfare); otherwise stops
// after max_steps with converged == false if still unstable.
DynamicsResult better_response_dynamics(const Instance& instance, const Arrangement& start,
                                        int max_steps);

}  // namespace seat
