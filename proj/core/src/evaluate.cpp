#include "seatarrange/evaluate.hpp"

#include <algorithm>

namespace seat {
namespace {

void check_fit(const Instance& instance, const Arrangement& arrangement) {
    if (arrangement.size() != instance.size()) {
        throw ArgumentError("arrangement size does not match instance");
    }
}

// Utility of `agent` when seated at `seat`, with `occupant_of` giving the
// occupant of every vertex (already reflecting any swap).
Rational utility_at(const Instance& instance, const std::vector<int>& occupant_of, int agent,
                    int seat) {
    Rational sum(0);
    for (int v : instance.graph.neighbors(seat)) {
        sum += instance.profile.value(agent, occupant_of[static_cast<std::size_t>(v)]);
    }
    return sum;
}

// p's utility in the (p,q)-swap of `arrangement`, without materializing it.
Rational utility_after_swap(const Instance& instance, const Arrangement& arrangement,
                            const std::vector<int>& occupant_of, int p, int q) {
    const int new_seat = arrangement.seat_of_agent(q);
    const int old_seat = arrangement.seat_of_agent(p);
    Rational sum(0);
    for (int v : instance.graph.neighbors(new_seat)) {
        int occ = occupant_of[static_cast<std::size_t>(v)];
        if (v == old_seat) occ = q;  // q moved into p's old seat
        // v == new_seat is impossible (no self-loops); occ == p cannot happen.
        sum += instance.profile.value(p, occ);
    }
    return sum;
}

}  // namespace

Rational utility(const Instance& instance, const Arrangement& arrangement, int agent) {
    check_fit(instance, arrangement);
    if (agent < 0 || agent >= instance.size()) throw ArgumentError("agent index out of range");
    return utility_at(instance, arrangement.agent_at(), agent, arrangement.seat_of_agent(agent));
}

Rational social_welfare(const Instance& instance, const Arrangement& arrangement) {
    check_fit(instance, arrangement);
    const auto occupant_of = arrangement.agent_at();
    Rational sum(0);
    // Per-edge form: each seat edge contributes both directed preferences.
    for (auto [u, v] : instance.graph.edges()) {
        const int a = occupant_of[static_cast<std::size_t>(u)];
        const int b = occupant_of[static_cast<std::size_t>(v)];
        sum += instance.profile.value(a, b);
        sum += instance.profile.value(b, a);
    }
    return sum;
}

Rational min_utility(const Instance& instance, const Arrangement& arrangement) {
    check_fit(instance, arrangement);
    const auto occupant_of = arrangement.agent_at();
    Rational best(0);
    bool first = true;
    for (int p = 0; p < instance.size(); ++p) {
        Rational u = utility_at(instance, occupant_of, p, arrangement.seat_of_agent(p));
        if (first || u < best) {
            best = u;
            first = false;
        }
    }
    return best;
}

std::vector<std::pair<int, int>> blocking_pairs(const Instance& instance,
                                                const Arrangement& arrangement) {
    check_fit(instance, arrangement);
    const auto occupant_of = arrangement.agent_at();
    const int n = instance.size();
    std::vector<Rational> current(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        current[static_cast<std::size_t>(p)] =
            utility_at(instance, occupant_of, p, arrangement.seat_of_agent(p));
    }
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            Rational up = utility_after_swap(instance, arrangement, occupant_of, p, q);
            if (!(up > current[static_cast<std::size_t>(p)])) continue;
            Rational uq = utility_after_swap(instance, arrangement, occupant_of, q, p);
            if (uq > current[static_cast<std::size_t>(q)]) out.emplace_back(p, q);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> envy_pairs(const Instance& instance,
                                            const Arrangement& arrangement) {
    check_fit(instance, arrangement);
    const auto occupant_of = arrangement.agent_at();
    const int n = instance.size();
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n; ++p) {
        Rational up = utility_at(instance, occupant_of, p, arrangement.seat_of_agent(p));
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            Rational moved = utility_after_swap(instance, arrangement, occupant_of, p, q);
            if (moved > up) out.emplace_back(p, q);
        }
    }
    return out;
}

bool is_stable(const Instance& instance, const Arrangement& arrangement) {
    return blocking_pairs(instance, arrangement).empty();
}

bool is_envy_free(const Instance& instance, const Arrangement& arrangement) {
    return envy_pairs(instance, arrangement).empty();
}

DynamicsResult better_response_dynamics(const Instance& instance, const Arrangement& start,
                                        int max_steps) {
    if (max_steps < 0) throw ArgumentError("negative step budget");
    check_fit(instance, start);
    DynamicsResult result{start, 0, false};
    while (true) {
        auto blocks = blocking_pairs(instance, result.arrangement);
        if (blocks.empty()) {
            result.converged = true;
            return result;
        }
        if (result.steps == max_steps) return result;
        result.arrangement = result.arrangement.swapped(blocks.front().first, blocks.front().second);
        ++result.steps;
    }
}

}  // namespace seat
