// Acceptance gate: every release-blocking behavior, one line of output each.
// Each criterion pins its inputs, its expected exact values, and a wall-clock
// limit; comparisons are exact rational equality throughout.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seatarrange/evaluate.hpp"
#include "seatarrange/matching.hpp"
#include "seatarrange/oracle.hpp"
#include "seatarrange/param.hpp"
#include "seatarrange/polysolve.hpp"
#include "seatarrange/reductions.hpp"
#include "support.hpp"

using namespace seat;
using oracle::Problem;
using reductions::GraphSource;
using reductions::ReductionId;
using reductions::SourceProblem;

namespace {

// ---- shared helpers ----

std::vector<Edge> edges_from_mask(int vertices, unsigned mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < vertices; ++u) {
        for (int v = u + 1; v < vertices; ++v) {
            if (mask & (1u << bit)) edges.emplace_back(u, v);
            ++bit;
        }
    }
    return edges;
}

std::vector<std::vector<bool>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    return adj;
}

bool has_triangle(int n, const std::vector<Edge>& edges) {
    const auto adj = adjacency(n, edges);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool has_hamiltonian_path(int n, const std::vector<Edge>& edges) {
    const auto adj = adjacency(n, edges);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) {
            ok = adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])];
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

matching::WeightedGraph random_weighted_graph(std::mt19937& rng, int n, int percent, int lo,
                                              int hi) {
    std::vector<matching::WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (support::rand_int(rng, 0, 99) < percent) {
                edges.push_back({u, v, Rational(support::rand_int(rng, lo, hi))});
            }
        }
    }
    return matching::WeightedGraph(n, std::move(edges));
}

Arrangement random_arrangement(std::mt19937& rng, int n) {
    std::vector<int> seat_of(static_cast<std::size_t>(n));
    std::iota(seat_of.begin(), seat_of.end(), 0);
    std::shuffle(seat_of.begin(), seat_of.end(), rng);
    return Arrangement(seat_of);
}

// ---- two-star quotient oracle (criterion 12) ----
//
// Both partition gadgets seat n element agents and two center agents on a pair
// of stars: center seats 0 and n/2+1, leaf seats 1..n/2 and n/2+2..n+1. Leaf
// agents touch only their center, so utilities and envy status depend only on
// which agents hold the centers and which set of agents fills the first star.
// Enumerating those orbits covers every arrangement at a fraction of the cost.
struct TwoStarSummary {
    Rational maximin;
    bool envy_free_exists = false;
};

TwoStarSummary two_star_quotient(const Instance& instance) {
    const int total = instance.size();
    const int n = total - 2;
    const int half = n / 2;
    const int center2_seat = half + 1;
    TwoStarSummary summary;
    bool first = true;
    for (int c1 = 0; c1 < total; ++c1) {
        for (int c2 = 0; c2 < total; ++c2) {
            if (c2 == c1) continue;
            std::vector<int> rest;
            rest.reserve(static_cast<std::size_t>(n));
            for (int a = 0; a < total; ++a) {
                if (a != c1 && a != c2) rest.push_back(a);
            }
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != half) continue;
                std::vector<int> seat_of(static_cast<std::size_t>(total), -1);
                seat_of[static_cast<std::size_t>(c1)] = 0;
                seat_of[static_cast<std::size_t>(c2)] = center2_seat;
                int left = 1;
                int right = center2_seat + 1;
                for (int i = 0; i < n; ++i) {
                    const int agent = rest[static_cast<std::size_t>(i)];
                    if (mask & (1u << i)) {
                        seat_of[static_cast<std::size_t>(agent)] = left++;
                    } else {
                        seat_of[static_cast<std::size_t>(agent)] = right++;
                    }
                }
                const Arrangement arrangement(seat_of);
                const Rational low = min_utility(instance, arrangement);
                if (first || summary.maximin < low) summary.maximin = low;
                first = false;
                if (!summary.envy_free_exists && is_envy_free(instance, arrangement)) {
                    summary.envy_free_exists = true;
                }
            }
        }
    }
    return summary;
}

// ---- criteria ----

bool criterion_binary_family_price() {
    const Instance instance = reductions::pof_binary(4);
    const auto price = oracle::price_of_fairness(instance);
    return price.category == oracle::PriceCategory::Value && *price.value == Rational(7, 4);
}

bool criterion_unbounded_family_pairs() {
    const std::vector<std::tuple<std::int64_t, std::int64_t, Rational>> table = {
        {5, 1, Rational(5, 2)}, {50, 1, Rational(25)}, {9, 3, Rational(3, 2)}};
    for (const auto& [x, y, expected] : table) {
        const auto price = oracle::price_of_fairness(reductions::pof_unbounded(x, y));
        if (price.category != oracle::PriceCategory::Value) return false;
        if (*price.value != expected) return false;
    }
    return true;
}

bool criterion_symmetric_optima_stable() {
    std::mt19937 rng(9301);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 2, 7));
        const Instance instance(support::random_graph(rng, n, 50),
                                support::random_profile(rng, n, -5, 5, true));
        const auto best = oracle::brute_solve(Problem::MWA, instance);
        if (!best.feasible || !best.arrangement) return false;
        if (!blocking_pairs(instance, *best.arrangement).empty()) return false;
        const auto pos = oracle::price_of_stability(instance);
        if (pos.category != oracle::PriceCategory::Value || *pos.value != Rational(1)) {
            return false;
        }
    }
    return true;
}

bool criterion_no_envy_free_on_path() {
    return !oracle::brute_solve(Problem::EFA, reductions::pof_no_envy_p3()).feasible;
}

bool criterion_small_components_match_enumeration() {
    std::mt19937 rng(9305);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 2, 8));
        const Instance instance(support::random_components2_graph(rng, n),
                                support::random_profile(rng, n, -4, 4, false));
        const auto fast_mwa = polysolve::mwa_small_components(instance);
        const auto slow_mwa = oracle::brute_solve(Problem::MWA, instance);
        if (*fast_mwa.objective != *slow_mwa.objective) return false;
        if (social_welfare(instance, *fast_mwa.arrangement) != *fast_mwa.objective) return false;
        const auto fast_mua = polysolve::mua_small_components(instance);
        const auto slow_mua = oracle::brute_solve(Problem::MUA, instance);
        if (*fast_mua.objective != *slow_mua.objective) return false;
        if (min_utility(instance, *fast_mua.arrangement) != *fast_mua.objective) return false;
    }
    return true;
}

bool criterion_envy_solvers_match_enumeration() {
    std::mt19937 rng(9306);
    const auto agree = [](const oracle::SolveReport& fast, const Instance& instance) {
        const auto slow = oracle::brute_solve(Problem::EFA, instance);
        if (fast.feasible != slow.feasible) return false;
        if (fast.feasible && !is_envy_free(instance, *fast.arrangement)) return false;
        return true;
    };
    for (int trial = 0; trial < 300; ++trial) {
        const int half = static_cast<int>(support::rand_int(rng, 1, 4));
        const Instance edge_only(support::random_edge_only_graph(rng, half),
                                 support::random_profile(rng, 2 * half, -3, 3, false));
        if (!agree(polysolve::efa_edge_graph(edge_only), edge_only)) return false;

        const int n = static_cast<int>(support::rand_int(rng, 2, 8));
        const Instance symmetric(support::random_components2_graph(rng, n),
                                 support::random_profile(rng, n, -2, 2, true));
        if (!agree(polysolve::efa_symmetric_small_components(symmetric), symmetric)) return false;

        const int m = static_cast<int>(support::rand_int(rng, 2, 8));
        const Instance sharp(support::random_components2_graph(rng, m),
                             trial % 2 == 0 ? support::random_strict_profile(rng, m, -4)
                                            : support::random_profile(rng, m, 1, 4, false));
        if (!agree(polysolve::efa_strict_or_positive(sharp), sharp)) return false;
    }
    return true;
}

bool criterion_vertex_cover_route() {
    std::mt19937 rng(9307);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 2, 8));
        const Instance instance(support::random_graph(rng, n, 40),
                                support::random_profile(rng, n, -5, 5, false));
        const auto fast = param::mwa_vertex_cover(instance);
        const auto slow = oracle::brute_solve(Problem::MWA, instance);
        if (*fast.objective != *slow.objective) return false;
        if (social_welfare(instance, *fast.arrangement) != *fast.objective) return false;
    }
    // Every graph on 3..6 vertices, pushed through the clique-seat gadget at
    // k = 3: optimal welfare hits 6 exactly when the graph has a triangle.
    for (int vertices = 3; vertices <= 6; ++vertices) {
        const int bits = vertices * (vertices - 1) / 2;
        for (unsigned mask = 0; mask < (1u << bits); ++mask) {
            const auto edges = edges_from_mask(vertices, mask);
            const auto hard = reductions::generate(
                ReductionId::MwaKClique, SourceProblem::k_clique(GraphSource{vertices, edges}, 3));
            if (hard.target != Rational(6)) return false;
            const auto report = param::mwa_vertex_cover(hard.instance);
            const bool hit = *report.objective == Rational(6);
            if (hit != has_triangle(vertices, edges)) return false;
            if (*report.objective > Rational(6)) return false;
        }
    }
    return true;
}

bool criterion_triangle_family_welfare() {
    const Instance instance = reductions::pof_symmetric_triangles(6);
    if (social_welfare(instance, Arrangement::identity(12)) != Rational(38)) return false;
    std::vector<int> block(12);
    for (int i = 0; i < 6; ++i) {
        block[static_cast<std::size_t>(i)] = 6 + i;
        block[static_cast<std::size_t>(6 + i)] = i;
    }
    return social_welfare(instance, Arrangement(block)) == Rational(24);
}

bool criterion_bounded_swap_search() {
    std::mt19937 rng(9309);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 2, 7));
        const int k = static_cast<int>(support::rand_int(rng, 0, 3));
        const bool symmetric = trial % 2 == 0;
        const Instance instance(support::random_graph(rng, n, 50),
                                support::random_profile(rng, n, -3, 3, symmetric));
        const Arrangement start = random_arrangement(rng, n);
        const auto plan = param::local_k_sta(instance, start, k);
        const auto reference = oracle::swap_bfs_stable(instance, start, k);
        if (plan.has_value() != reference.has_value()) return false;
        if (!plan) continue;
        if (static_cast<int>(plan->transpositions.size()) != reference->distance) return false;
        Arrangement replay = start;
        for (const auto& [p, q] : plan->transpositions) replay = replay.swapped(p, q);
        if (!(replay == plan->target)) return false;
        if (!is_stable(instance, plan->target)) return false;
    }
    // Every graph on five vertices, pushed through the bounded-swap gadget at
    // k = 2: a stable arrangement within two swaps exists exactly when the
    // graph has an independent set of two vertices.
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        const GraphSource source{5, edges_from_mask(5, mask)};
        const auto hard = reductions::generate(ReductionId::LocalStaIndependentSet,
                                               SourceProblem::independent_set(source, 2));
        const bool found =
            param::local_k_sta(hard.instance, *hard.start_arrangement, *hard.k).has_value();
        if (found != solve_source(SourceProblem::independent_set(source, 2)).yes) return false;
    }
    return true;
}

bool criterion_spanning_gadget_hamiltonian() {
    std::mt19937 rng(9310);
    for (int n = 3; n <= 7; ++n) {
        std::vector<Edge> path_edges;
        for (int i = 0; i + 1 < n; ++i) path_edges.emplace_back(i, i + 1);
        const GraphSource pattern{n, path_edges};
        const int bits = n * (n - 1) / 2;
        const int hosts = n <= 4 ? (1 << bits) : 40;
        for (int index = 0; index < hosts; ++index) {
            const unsigned mask = n <= 4 ? static_cast<unsigned>(index)
                                         : static_cast<unsigned>(support::rand_int(
                                               rng, 0, (1LL << bits) - 1));
            const auto host_edges = edges_from_mask(n, mask);
            const auto hard = reductions::generate(
                ReductionId::MwaSpanning,
                SourceProblem::spanning(pattern, GraphSource{n, host_edges}));
            if (hard.target != Rational(2 * (n - 1))) return false;
            const auto best = oracle::brute_solve(Problem::MWA, hard.instance);
            const bool hit = *best.objective == *hard.target;
            if (hit != has_hamiltonian_path(n, host_edges)) return false;
        }
    }
    return true;
}

bool criterion_matching_kernels() {
    std::mt19937 rng(9311);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 2, 8));
        const auto graph = random_weighted_graph(rng, n, 50, -6, 6);
        for (int s = 0; s <= n / 2; ++s) {
            const auto fast = matching::max_weight_matching_of_size(graph, s);
            const auto slow = matching::brute::max_weight_of_size(graph, s);
            if (fast.has_value() != slow.has_value()) return false;
            if (fast && fast->total_weight(graph) != slow->total_weight(graph)) return false;
            const auto fast_b = matching::bottleneck_matching_of_size(graph, s);
            const auto slow_b = matching::brute::bottleneck_of_size(graph, s);
            if (fast_b.has_value() != slow_b.has_value()) return false;
            if (fast_b && s > 0 && fast_b->min_weight(graph) != slow_b->min_weight(graph)) {
                return false;
            }
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 * static_cast<int>(support::rand_int(rng, 1, 5));
        const auto graph = random_weighted_graph(rng, n, 60, -6, 6);
        const auto fast = matching::max_weight_perfect_matching(graph);
        const auto slow = matching::brute::max_weight_perfect(graph);
        if (fast.has_value() != slow.has_value()) return false;
        if (fast && fast->total_weight(graph) != slow->total_weight(graph)) return false;
    }
    return true;
}

bool criterion_two_star_gadgets() {
    std::mt19937 rng(9312);
    // First gate the quotient oracle itself against full enumeration at sizes
    // where that is affordable.
    for (int trial = 0; trial < 20; ++trial) {
        const int n = trial % 2 == 0 ? 4 : 6;
        std::vector<std::int64_t> values;
        for (int i = 0; i < n; ++i) values.push_back(support::rand_int(rng, 1, 12));
        const auto mua =
            reductions::generate(ReductionId::MuaPartition, SourceProblem::partition(values));
        const auto summary = two_star_quotient(mua.instance);
        const auto slow = oracle::brute_solve(Problem::MUA, mua.instance);
        if (summary.maximin != *slow.objective) return false;
        const auto efa =
            reductions::generate(ReductionId::EfaPartition, SourceProblem::partition(values));
        const auto efa_summary = two_star_quotient(efa.instance);
        const auto efa_slow = oracle::brute_solve(Problem::EFA, efa.instance);
        if (efa_summary.envy_free_exists != efa_slow.feasible) return false;
    }

    std::vector<std::vector<std::int64_t>> multisets = {
        {1, 1, 2, 2}, {1, 1, 1, 3}, {2, 1, 1, 4}};
    while (multisets.size() < 50) {
        const int n = 2 * static_cast<int>(support::rand_int(rng, 2, 5));
        std::vector<std::int64_t> values;
        for (int i = 0; i < n; ++i) values.push_back(support::rand_int(rng, 1, 12));
        multisets.push_back(std::move(values));
    }
    for (const auto& values : multisets) {
        const bool balanced = solve_source(SourceProblem::partition(values)).yes;
        const std::int64_t total = std::accumulate(values.begin(), values.end(), std::int64_t{0});
        const auto mua =
            reductions::generate(ReductionId::MuaPartition, SourceProblem::partition(values));
        const auto summary = two_star_quotient(mua.instance);
        if ((summary.maximin >= Rational(total, 2)) != balanced) return false;
        const auto efa =
            reductions::generate(ReductionId::EfaPartition, SourceProblem::partition(values));
        if (two_star_quotient(efa.instance).envy_free_exists != balanced) return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double limit_seconds;
    std::function<bool()> check;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "binary family price of fairness is exactly 7/4", 10.0,
         criterion_binary_family_price},
        {2, "unbounded-family price pairs give 5/2, 25, 3/2", 10.0,
         criterion_unbounded_family_pairs},
        {3, "symmetric welfare optima are exchange stable with stability price 1", 60.0,
         criterion_symmetric_optima_stable},
        {4, "three mutual friends on a path admit no envy-free arrangement", 5.0,
         criterion_no_envy_free_on_path},
        {5, "small-component solvers match enumeration on 300 instances", 120.0,
         criterion_small_components_match_enumeration},
        {6, "envy solvers match enumeration on 300 instances per preference class", 120.0,
         criterion_envy_solvers_match_enumeration},
        {7, "cover-parameterized welfare matches enumeration and decides all triangle gadgets",
         180.0, criterion_vertex_cover_route},
        {8, "triangle-family welfare identities hold at both reference arrangements", 5.0,
         criterion_triangle_family_welfare},
        {9, "bounded-swap search matches breadth-first reference and decides all five-vertex "
            "gadgets",
         300.0, criterion_bounded_swap_search},
        {10, "spanning gadget welfare detects Hamiltonian paths", 60.0,
         criterion_spanning_gadget_hamiltonian},
        {11, "matching kernels match enumeration across 500 weighted graphs", 60.0,
         criterion_matching_kernels},
        {12, "two-star gadgets decide balanced partition on 50 multisets", 120.0,
         criterion_two_star_gadgets},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (!selected.empty() && !selected.count(criterion.id)) continue;
        const auto begin = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criterion.check();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
        if (elapsed > criterion.limit_seconds) {
            ok = false;
            note += " [over " + std::to_string(criterion.limit_seconds) + "s limit]";
        }
        std::printf("[%s] %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.label, elapsed, note.c_str());
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria failed\n", failures);
    }
    return failures;
}
