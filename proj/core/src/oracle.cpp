#include "seatarrange/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "seatarrange/errors.hpp"

namespace seat::oracle {
namespace {

// Shared evaluation core, instantiated for exact rationals and for the int64
// fast path (valid when every preference is a small integer; sums stay far
// below the int64 range for any cap-sized instance).
template <typename V>
struct Eval {
    const SeatGraph* graph;
    const V* table;
    int n;

    V val(int p, int q) const { return table[static_cast<std::size_t>(p) * n + q]; }

    V util_at(const std::vector<int>& occ, int agent, int seat) const {
        V sum{0};
        for (int v : graph->neighbors(seat)) sum += val(agent, occ[static_cast<std::size_t>(v)]);
        return sum;
    }

    V util_after_swap(const std::vector<int>& seat_of, const std::vector<int>& occ, int p,
                      int q) const {
        const int new_seat = seat_of[static_cast<std::size_t>(q)];
        const int old_seat = seat_of[static_cast<std::size_t>(p)];
        V sum{0};
        for (int v : graph->neighbors(new_seat)) {
            const int occupant = (v == old_seat) ? q : occ[static_cast<std::size_t>(v)];
            sum += val(p, occupant);
        }
        return sum;
    }

    V welfare(const std::vector<int>& occ) const {
        V sum{0};
        for (auto [u, v] : graph->edges()) {
            const int a = occ[static_cast<std::size_t>(u)];
            const int b = occ[static_cast<std::size_t>(v)];
            sum += val(a, b);
            sum += val(b, a);
        }
        return sum;
    }

    V min_util(const std::vector<int>& seat_of, const std::vector<int>& occ) const {
        V best{0};
        bool first = true;
        for (int p = 0; p < n; ++p) {
            V u = util_at(occ, p, seat_of[static_cast<std::size_t>(p)]);
            if (first || u < best) {
                best = u;
                first = false;
            }
        }
        return best;
    }

    bool stable(const std::vector<int>& seat_of, const std::vector<int>& occ,
                std::vector<V>& cur) const {
        cur.resize(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
            cur[static_cast<std::size_t>(p)] = util_at(occ, p, seat_of[static_cast<std::size_t>(p)]);
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                V up = util_after_swap(seat_of, occ, p, q);
                if (!(up > cur[static_cast<std::size_t>(p)])) continue;
                V uq = util_after_swap(seat_of, occ, q, p);
                if (uq > cur[static_cast<std::size_t>(q)]) return false;
            }
        }
        return true;
    }

    bool envy_free(const std::vector<int>& seat_of, const std::vector<int>& occ,
                   std::vector<V>& cur) const {
        cur.resize(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) {
            cur[static_cast<std::size_t>(p)] = util_at(occ, p, seat_of[static_cast<std::size_t>(p)]);
        }
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                if (q == p) continue;
                if (util_after_swap(seat_of, occ, p, q) > cur[static_cast<std::size_t>(p)]) {
                    return false;
                }
            }
        }
        return true;
    }
};

std::vector<Rational> rational_table(const PreferenceProfile& profile) {
    const int n = profile.agent_count();
    std::vector<Rational> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p != q) t[static_cast<std::size_t>(p) * n + q] = profile.value(p, q);
        }
    }
    return t;
}

void check_cap(int n, int cap) {
    if (n > cap) {
        throw BudgetError("instance size " + std::to_string(n) +
                          " exceeds the enumeration cap " + std::to_string(cap));
    }
}

void occupants(const std::vector<int>& seat_of, std::vector<int>& occ) {
    occ.resize(seat_of.size());
    for (int p = 0; p < static_cast<int>(seat_of.size()); ++p) {
        occ[static_cast<std::size_t>(seat_of[static_cast<std::size_t>(p)])] = p;
    }
}

template <typename V>
SolveReport brute_solve_impl(Problem problem, const Instance& instance, const V* table) {
    Eval<V> ev{&instance.graph, table, instance.size()};
    SolveReport report;
    report.problem = problem;
    report.method = "brute";
    std::vector<int> seat_of(static_cast<std::size_t>(instance.size()));
    std::iota(seat_of.begin(), seat_of.end(), 0);
    std::vector<int> occ;
    std::vector<V> scratch;
    bool have = false;
    V best{0};
    std::vector<int> best_seats;
    bool more = true;
    while (more) {
        occupants(seat_of, occ);
        switch (problem) {
            case Problem::MWA:
            case Problem::MUA: {
                V obj = (problem == Problem::MWA) ? ev.welfare(occ) : ev.min_util(seat_of, occ);
                if (!have || obj > best) {
                    have = true;
                    best = obj;
                    best_seats = seat_of;
                }
                break;
            }
            case Problem::STA:
                if (ev.stable(seat_of, occ, scratch)) {
                    report.feasible = true;
                    report.arrangement = Arrangement(seat_of);
                    return report;
                }
                break;
            case Problem::EFA:
                if (ev.envy_free(seat_of, occ, scratch)) {
                    report.feasible = true;
                    report.arrangement = Arrangement(seat_of);
                    return report;
                }
                break;
        }
        more = std::next_permutation(seat_of.begin(), seat_of.end());
    }
    if (problem == Problem::MWA || problem == Problem::MUA) {
        report.feasible = true;
        report.arrangement = Arrangement(best_seats);
        if constexpr (std::is_same_v<V, Rational>) {
            report.objective = best;
        } else {
            report.objective = Rational(best);
        }
    }
    return report;
}

struct PriceAccumulators {
    bool saw_any = false;
    Rational best_welfare{0};
    std::vector<int> best_seats;
    bool saw_constrained = false;
    Rational constrained_welfare{0};
    std::vector<int> constrained_seats;
};

template <typename V>
PriceAccumulators price_scan_stability(const Instance& instance, const V* table) {
    Eval<V> ev{&instance.graph, table, instance.size()};
    PriceAccumulators acc;
    std::vector<int> seat_of(static_cast<std::size_t>(instance.size()));
    std::iota(seat_of.begin(), seat_of.end(), 0);
    std::vector<int> occ;
    std::vector<V> scratch;
    bool more = true;
    while (more) {
        occupants(seat_of, occ);
        V w = ev.welfare(occ);
        Rational wr;
        if constexpr (std::is_same_v<V, Rational>) {
            wr = w;
        } else {
            wr = Rational(w);
        }
        if (!acc.saw_any || wr > acc.best_welfare) {
            acc.saw_any = true;
            acc.best_welfare = wr;
            acc.best_seats = seat_of;
        }
        if (ev.stable(seat_of, occ, scratch)) {
            if (!acc.saw_constrained || wr > acc.constrained_welfare) {
                acc.saw_constrained = true;
                acc.constrained_welfare = wr;
                acc.constrained_seats = seat_of;
            }
        }
        more = std::next_permutation(seat_of.begin(), seat_of.end());
    }
    return acc;
}

template <typename V>
PriceAccumulators price_scan_fairness(const Instance& instance, const V* table) {
    Eval<V> ev{&instance.graph, table, instance.size()};
    PriceAccumulators acc;
    std::vector<int> seat_of(static_cast<std::size_t>(instance.size()));
    std::iota(seat_of.begin(), seat_of.end(), 0);
    std::vector<int> occ;
    // Pass 1: optimum welfare witness and the maximin objective.
    bool have_mu = false;
    V best_mu{0};
    bool more = true;
    while (more) {
        occupants(seat_of, occ);
        V w = ev.welfare(occ);
        Rational wr;
        if constexpr (std::is_same_v<V, Rational>) {
            wr = w;
        } else {
            wr = Rational(w);
        }
        if (!acc.saw_any || wr > acc.best_welfare) {
            acc.saw_any = true;
            acc.best_welfare = wr;
            acc.best_seats = seat_of;
        }
        V mu = ev.min_util(seat_of, occ);
        if (!have_mu || mu > best_mu) {
            have_mu = true;
            best_mu = mu;
        }
        more = std::next_permutation(seat_of.begin(), seat_of.end());
    }
    // Pass 2: best welfare inside the maximin tie-set.
    std::iota(seat_of.begin(), seat_of.end(), 0);
    more = true;
    while (more) {
        occupants(seat_of, occ);
        if (ev.min_util(seat_of, occ) == best_mu) {
            V w = ev.welfare(occ);
            Rational wr;
            if constexpr (std::is_same_v<V, Rational>) {
                wr = w;
            } else {
                wr = Rational(w);
            }
            if (!acc.saw_constrained || wr > acc.constrained_welfare) {
                acc.saw_constrained = true;
                acc.constrained_welfare = wr;
                acc.constrained_seats = seat_of;
            }
        }
        more = std::next_permutation(seat_of.begin(), seat_of.end());
    }
    return acc;
}

PriceReport finish_price(PriceKind kind, const PriceAccumulators& acc) {
    PriceReport report;
    report.kind = kind;
    if (acc.saw_any) report.witness_optimal = Arrangement(acc.best_seats);
    if (!acc.saw_constrained) {
        report.category = PriceCategory::Undefined;
        return report;
    }
    report.witness_constrained = Arrangement(acc.constrained_seats);
    const Rational zero(0);
    if (acc.best_welfare == zero && acc.constrained_welfare == zero) {
        report.category = PriceCategory::Value;
        report.value = Rational(1);
    } else if (acc.best_welfare > zero && !(acc.constrained_welfare > zero)) {
        report.category = PriceCategory::Unbounded;
    } else {
        report.category = PriceCategory::Value;
        report.value = acc.best_welfare / acc.constrained_welfare;
    }
    return report;
}

}  // namespace

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::MWA: return "mwa";
        case Problem::MUA: return "mua";
        case Problem::STA: return "sta";
        case Problem::EFA: return "efa";
    }
    throw ArgumentError("unknown problem");
}

ArrangementEnumerator::ArrangementEnumerator(int n, int cap) {
    if (n < 0) throw ArgumentError("negative arrangement size");
    check_cap(n, cap);
    current_.resize(static_cast<std::size_t>(n));
    std::iota(current_.begin(), current_.end(), 0);
}

std::optional<Arrangement> ArrangementEnumerator::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return Arrangement(current_);
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        done_ = true;
        return std::nullopt;
    }
    return Arrangement(current_);
}

SolveReport brute_solve(Problem problem, const Instance& instance, int cap) {
    check_cap(instance.size(), cap);
    if (auto fast = integer_table(instance.profile)) {
        return brute_solve_impl<std::int64_t>(problem, instance, fast->data());
    }
    auto table = rational_table(instance.profile);
    return brute_solve_impl<Rational>(problem, instance, table.data());
}

PriceReport price_of_stability(const Instance& instance, int cap) {
    check_cap(instance.size(), cap);
    PriceAccumulators acc;
    if (auto fast = integer_table(instance.profile)) {
        acc = price_scan_stability<std::int64_t>(instance, fast->data());
    } else {
        auto table = rational_table(instance.profile);
        acc = price_scan_stability<Rational>(instance, table.data());
    }
    return finish_price(PriceKind::PoS, acc);
}

PriceReport price_of_fairness(const Instance& instance, int cap) {
    check_cap(instance.size(), cap);
    PriceAccumulators acc;
    if (auto fast = integer_table(instance.profile)) {
        acc = price_scan_fairness<std::int64_t>(instance, fast->data());
    } else {
        auto table = rational_table(instance.profile);
        acc = price_scan_fairness<Rational>(instance, table.data());
    }
    return finish_price(PriceKind::PoF, acc);
}

std::optional<SwapSearchResult> swap_bfs_stable(const Instance& instance, const Arrangement& start,
                                                int k, std::size_t budget) {
    if (k < 0) throw ArgumentError("negative swap budget");
    if (start.size() != instance.size()) throw ArgumentError("start arrangement size mismatch");
    const int n = instance.size();

    auto fast = integer_table(instance.profile);
    std::vector<Rational> slow;
    if (!fast) slow = rational_table(instance.profile);

    std::vector<int> occ;
    std::vector<std::int64_t> iscratch;
    std::vector<Rational> rscratch;
    auto stable_at = [&](const std::vector<int>& seat_of) {
        occupants(seat_of, occ);
        if (fast) {
            Eval<std::int64_t> ev{&instance.graph, fast->data(), n};
            return ev.stable(seat_of, occ, iscratch);
        }
        Eval<Rational> ev{&instance.graph, slow.data(), n};
        return ev.stable(seat_of, occ, rscratch);
    };

    struct Node {
        std::vector<int> seat_of;
        int parent;
        std::pair<int, int> via;
    };
    std::vector<Node> nodes;
    std::map<std::vector<int>, int> seen;
    nodes.push_back({start.seat_of(), -1, {-1, -1}});
    seen[start.seat_of()] = 0;

    auto unwind = [&](int index, int distance) {
        SwapSearchResult result{Arrangement(nodes[static_cast<std::size_t>(index)].seat_of),
                                distance,
                                {}};
        for (int at = index; nodes[static_cast<std::size_t>(at)].parent != -1;
             at = nodes[static_cast<std::size_t>(at)].parent) {
            result.swaps.push_back(nodes[static_cast<std::size_t>(at)].via);
        }
        std::reverse(result.swaps.begin(), result.swaps.end());
        return result;
    };

    std::size_t layer_begin = 0, layer_end = 1;
    for (int depth = 0; depth <= k; ++depth) {
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            if (stable_at(nodes[i].seat_of)) {
                return unwind(static_cast<int>(i), depth);
            }
        }
        if (depth == k) break;
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (int p = 0; p < n; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    std::vector<int> next = nodes[i].seat_of;
                    std::swap(next[static_cast<std::size_t>(p)], next[static_cast<std::size_t>(q)]);
                    if (seen.contains(next)) continue;
                    if (nodes.size() >= budget) {
                        throw BudgetError("swap search exceeded its node budget");
                    }
                    seen[next] = static_cast<int>(nodes.size());
                    nodes.push_back({std::move(next), static_cast<int>(i), {p, q}});
                }
            }
        }
        layer_begin = layer_end;
        layer_end = nodes.size();
        if (layer_begin == layer_end) break;  // swap graph exhausted
    }
    return std::nullopt;
}

}  // namespace seat::oracle
