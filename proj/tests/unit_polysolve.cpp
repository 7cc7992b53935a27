#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seatarrange/errors.hpp"
#include "seatarrange/evaluate.hpp"
#include "seatarrange/oracle.hpp"
#include "seatarrange/polysolve.hpp"
#include "support.hpp"

using namespace seat;
using oracle::Problem;

TEST_CASE("component profile splits edges from isolated seats") {
    const auto cp = polysolve::component_profile(SeatGraph(5, {{1, 3}, {0, 4}}));
    CHECK(cp.edge_list == std::vector<Edge>{{0, 4}, {1, 3}});
    CHECK(cp.isolated == std::vector<int>{2});
    CHECK(cp.n_prime == 4);
    CHECK_THROWS_AS(polysolve::component_profile(SeatGraph(3, {{0, 1}, {1, 2}})),
                    GraphClassError);
}

TEST_CASE("mutual best pairs on a hand-built profile") {
    PreferenceProfile p(4);
    p.set_value(0, 1, Rational(5));
    p.set_value(1, 0, Rational(5));
    p.set_value(0, 2, Rational(5));
    p.set_value(2, 0, Rational(4));
    p.set_value(2, 3, Rational(4));
    p.set_value(3, 2, Rational(1));
    // A pair is mutual-best when each member values the other at its own row
    // maximum: 0 tops out at 5 toward both 1 and 2, agent 2 tops out at 4
    // toward both 0 and 3, and 3's single positive value is its maximum.
    const auto pairs = polysolve::mutual_best_pairs(p);
    CHECK(pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
    // 1 values 2 at 0 while its maximum is 5, so (1, 2) cannot appear.
    CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(1, 2)) == pairs.end());
}

TEST_CASE("welfare maximization on small components equals brute") {
    std::mt19937 rng(301);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 1, 8));
        const Instance inst(support::random_components2_graph(rng, n),
                            support::random_profile(rng, n, -6, 6, false));
        const auto fast = polysolve::mwa_small_components(inst);
        const auto slow = oracle::brute_solve(Problem::MWA, inst);
        REQUIRE(fast.feasible);
        CHECK(fast.method == "components2");
        CHECK(fast.objective == slow.objective);
        CHECK(social_welfare(inst, *fast.arrangement) == *fast.objective);
    }
}

TEST_CASE("maximin on small components equals brute") {
    std::mt19937 rng(302);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 1, 8));
        const Instance inst(support::random_components2_graph(rng, n),
                            support::random_profile(rng, n, -6, 6, false));
        const auto fast = polysolve::mua_small_components(inst);
        const auto slow = oracle::brute_solve(Problem::MUA, inst);
        REQUIRE(fast.feasible);
        CHECK(fast.objective == slow.objective);
        CHECK(min_utility(inst, *fast.arrangement) == *fast.objective);
    }
}

TEST_CASE("maximin accounts for isolated seats capping the objective at zero") {
    // One seat edge and one isolated seat: someone always sits alone at
    // utility 0, even when all pair values are positive.
    PreferenceProfile p(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) p.set_value(a, b, Rational(9));
    const Instance inst(SeatGraph(3, {{0, 1}}), p);
    const auto report = polysolve::mua_small_components(inst);
    CHECK(report.objective == Rational(0));
}

TEST_CASE("small-component solvers reject wide components") {
    const Instance inst(SeatGraph(3, {{0, 1}, {1, 2}}), PreferenceProfile(3));
    CHECK_THROWS_AS(polysolve::mwa_small_components(inst), GraphClassError);
    CHECK_THROWS_AS(polysolve::mua_small_components(inst), GraphClassError);
}

TEST_CASE("envy-freeness on pure edge graphs equals brute") {
    std::mt19937 rng(303);
    int feasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int half = static_cast<int>(support::rand_int(rng, 1, 4));
        const Instance inst(support::random_edge_only_graph(rng, half),
                            support::random_profile(rng, 2 * half, -3, 3, false));
        const auto fast = polysolve::efa_edge_graph(inst);
        const auto slow = oracle::brute_solve(Problem::EFA, inst);
        CHECK(fast.method == "edge-efa");
        CHECK(!fast.objective.has_value());
        REQUIRE(fast.feasible == slow.feasible);
        if (fast.feasible) {
            ++feasible_seen;
            CHECK(is_envy_free(inst, *fast.arrangement));
        }
    }
    CHECK(feasible_seen > 20);
}

TEST_CASE("edge solver demands edge-only seat graphs") {
    const Instance inst(SeatGraph(3, {{0, 1}}), PreferenceProfile(3));
    CHECK_THROWS_AS(polysolve::efa_edge_graph(inst), GraphClassError);
}

TEST_CASE("symmetric envy-freeness on small components equals brute") {
    std::mt19937 rng(304);
    int feasible_seen = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const int n = static_cast<int>(support::rand_int(rng, 1, 8));
        // Narrow value ranges make ties and zero pairs frequent, which is
        // where the component selection logic earns its keep.
        const Instance inst(support::random_components2_graph(rng, n),
                            support::random_profile(rng, n, -2, 2, true));
        const auto fast = polysolve::efa_symmetric_small_components(inst);
        const auto slow = oracle::brute_solve(Problem::EFA, inst);
        CHECK(fast.method == "sym-efa");
        REQUIRE(fast.feasible == slow.feasible);
        if (fast.feasible) {
            ++feasible_seen;
            CHECK(is_envy_free(inst, *fast.arrangement));
        }
    }
    CHECK(feasible_seen > 30);
}

TEST_CASE("symmetric solver rejects asymmetric profiles") {
    PreferenceProfile p(2);
    p.set_value(0, 1, Rational(1));
    const Instance inst(SeatGraph(2, {{0, 1}}), p);
    CHECK_THROWS_AS(polysolve::efa_symmetric_small_components(inst), ArgumentError);
}

TEST_CASE("strict-or-positive envy-freeness equals brute") {
    std::mt19937 rng(305);
    SUBCASE("strict profiles") {
        int feasible_seen = 0;
        for (int trial = 0; trial < 120; ++trial) {
            const int n = static_cast<int>(support::rand_int(rng, 2, 8));
            const Instance inst(support::random_components2_graph(rng, n),
                                support::random_strict_profile(rng, n, -static_cast<int>(n)));
            const auto fast = polysolve::efa_strict_or_positive(inst);
            const auto slow = oracle::brute_solve(Problem::EFA, inst);
            CHECK(fast.method == "strict-pos-efa");
            REQUIRE(fast.feasible == slow.feasible);
            if (fast.feasible) {
                ++feasible_seen;
                CHECK(is_envy_free(inst, *fast.arrangement));
            }
        }
        CHECK(feasible_seen > 5);
    }
    SUBCASE("positive profiles") {
        int feasible_seen = 0;
        for (int trial = 0; trial < 120; ++trial) {
            const int n = static_cast<int>(support::rand_int(rng, 1, 8));
            const Instance inst(support::random_components2_graph(rng, n),
                                support::random_profile(rng, n, 1, 4, false));
            const auto fast = polysolve::efa_strict_or_positive(inst);
            const auto slow = oracle::brute_solve(Problem::EFA, inst);
            REQUIRE(fast.feasible == slow.feasible);
            if (fast.feasible) {
                ++feasible_seen;
                CHECK(is_envy_free(inst, *fast.arrangement));
            }
        }
        CHECK(feasible_seen > 20);
    }
}

TEST_CASE("strict-or-positive solver rejects other profile classes") {
    // Three all-zero rows carry ties, so the profile is neither strict nor
    // positive. (With two agents a row holds one value and is vacuously
    // strict, so n = 3 is the smallest rejecting case.)
    const Instance inst(SeatGraph(3, {{0, 1}}), PreferenceProfile(3));
    CHECK_THROWS_AS(polysolve::efa_strict_or_positive(inst), ArgumentError);
}

TEST_CASE("positive profiles with isolated seats are never envy-free") {
    std::mt19937 rng(306);
    const Instance inst(SeatGraph(3, {{0, 1}}),
                        support::random_profile(rng, 3, 1, 5, false));
    const auto fast = polysolve::efa_strict_or_positive(inst);
    CHECK(!fast.feasible);
    CHECK(!oracle::brute_solve(Problem::EFA, inst).feasible);
}
