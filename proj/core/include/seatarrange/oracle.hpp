#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seatarrange/arrangement.hpp"
#include "seatarrange/evaluate.hpp"
#include "seatarrange/instance.hpp"

namespace seat::oracle {

enum class Problem { MWA, MUA, STA, EFA };

std::string problem_name(Problem p);

struct SolveReport {
    Problem problem = Problem::MWA;
    std::optional<Arrangement> arrangement;
    std::optional<Rational> objective;
    bool feasible = false;
    std::string method;
};

inline constexpr int kDefaultEnumerationCap = 10;

// Streams all n! arrangements in lexicographic order of seat_of.
class ArrangementEnumerator {
public:
    // Throws BudgetError when n exceeds the cap.
    ArrangementEnumerator(int n, int cap = kDefaultEnumerationCap);

    // Next arrangement, or nullopt when exhausted.
    std::optional<Arrangement> next();

private:
    std::vector<int> current_;
    bool done_ = false;
    bool first_ = true;
};

// Exhaustive solver. MWA/MUA: lexicographically smallest optimum. STA/EFA:
// lexicographically smallest satisfying arrangement or infeasible.
SolveReport brute_solve(Problem problem, const Instance& instance,
                        int cap = kDefaultEnumerationCap);

enum class PriceKind { PoS, PoF };
enum class PriceCategory { Value, Undefined, Unbounded };

struct PriceReport {
    PriceKind kind = PriceKind::PoS;
    PriceCategory category = PriceCategory::Value;
    std::optional<Rational> value;                  // set iff category == Value
    std::optional<Arrangement> witness_optimal;     // maximum-welfare arrangement
    std::optional<Arrangement> witness_constrained; // best stable / best maximin
};

// Optimum welfare over the best stable arrangement. Undefined when no stable
// arrangement exists; 0/0 yields 1; positive optimum over a non-positive best
// stable welfare yields the unbounded marker.
PriceReport price_of_stability(const Instance& instance, int cap = kDefaultEnumerationCap);

// Optimum welfare over the best-welfare maximin-optimal arrangement (the
// minimum ratio over the whole maximin tie-set); same degenerate conventions.
PriceReport price_of_fairness(const Instance& instance, int cap = kDefaultEnumerationCap);

struct SwapSearchResult {
    Arrangement arrangement;
    int distance = 0;
    std::vector<std::pair<int, int>> swaps;  // agent pairs, applied in order to start
};

// Breadth-first search over the swap graph from start, depth at most k;
// returns a nearest stable arrangement with its swap witness, or nullopt.
// Throws BudgetError when the frontier outgrows `budget` visited nodes.
std::optional<SwapSearchResult> swap_bfs_stable(const Instance& instance, const Arrangement& start,
                                                int k, std::size_t budget = 4'000'000);

}  // namespace seat::oracle
