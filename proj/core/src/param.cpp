#include "seatarrange/param.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seatarrange/errors.hpp"
#include "seatarrange/evaluate.hpp"
#include "seatarrange/matching.hpp"

namespace seat::param {

namespace {

using oracle::Problem;

void vc_branch(const SeatGraph& g, std::vector<char>& in_cover, int chosen,
               std::vector<int>& best) {
    if (chosen >= static_cast<int>(best.size())) return;  // cannot improve
    int eu = -1, ev = -1;
    for (const auto& [u, v] : g.edges()) {
        if (!in_cover[static_cast<std::size_t>(u)] && !in_cover[static_cast<std::size_t>(v)]) {
            eu = u;
            ev = v;
            break;
        }
    }
    if (eu < 0) {
        std::vector<int> cover;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (in_cover[static_cast<std::size_t>(v)]) cover.push_back(v);
        }
        if (cover.size() < best.size()) best = std::move(cover);
        return;
    }
    for (int pick : {eu, ev}) {
        in_cover[static_cast<std::size_t>(pick)] = 1;
        vc_branch(g, in_cover, chosen + 1, best);
        in_cover[static_cast<std::size_t>(pick)] = 0;
    }
}

// Fixed placement of agents on the cover seats; fills the independent seats
// optimally with one assignment problem and reports the full welfare.
struct CoverContext {
    const Instance* instance = nullptr;
    std::vector<int> cover;        // cover seats ascending
    std::vector<int> independent;  // remaining seats ascending
    std::vector<Edge> cover_edges; // edges inside the cover
};

Rational placement_welfare(const CoverContext& ctx, const std::vector<int>& agent_on_cover,
                           std::vector<int>& seat_of_out) {
    const Instance& inst = *ctx.instance;
    const int n = inst.size();
    std::vector<int> occ(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ctx.cover.size(); ++i) {
        occ[static_cast<std::size_t>(ctx.cover[i])] = agent_on_cover[i];
    }
    Rational total(0);
    for (const auto& [u, v] : ctx.cover_edges) {
        const int a = occ[static_cast<std::size_t>(u)];
        const int b = occ[static_cast<std::size_t>(v)];
        total += inst.profile.value(a, b) + inst.profile.value(b, a);
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int a : agent_on_cover) used[static_cast<std::size_t>(a)] = 1;
    std::vector<int> rest;
    for (int a = 0; a < n; ++a) {
        if (!used[static_cast<std::size_t>(a)]) rest.push_back(a);
    }
    const int d = static_cast<int>(rest.size());
    std::vector<std::vector<Rational>> w(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Rational sum(0);
            for (int u : inst.graph.neighbors(ctx.independent[static_cast<std::size_t>(j)])) {
                const int b = occ[static_cast<std::size_t>(u)];
                sum += inst.profile.value(rest[static_cast<std::size_t>(i)], b) +
                       inst.profile.value(b, rest[static_cast<std::size_t>(i)]);
            }
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum;
        }
    }
    matching::AssignmentResult ar = matching::bipartite_max_weight_perfect(w);
    seat_of_out.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ctx.cover.size(); ++i) {
        seat_of_out[static_cast<std::size_t>(agent_on_cover[i])] = ctx.cover[i];
    }
    for (int i = 0; i < d; ++i) {
        seat_of_out[static_cast<std::size_t>(rest[static_cast<std::size_t>(i)])] =
            ctx.independent[static_cast<std::size_t>(ar.assignment[static_cast<std::size_t>(i)])];
    }
    return total + ar.total;
}

// Relating permutations at exact swap distance d: disjoint cycles anchored at
// their minima with anchors ascending, total (cycle length - 1) summing to d.
class CycleGen {
public:
    CycleGen(int n, long long budget) : n_(n), budget_(budget) {
        rho_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rho_[static_cast<std::size_t>(i)] = i;
        used_.assign(static_cast<std::size_t>(n), 0);
    }

    std::vector<std::vector<int>> layer(int d) {
        out_.clear();
        gen(0, d);
        return std::move(out_);
    }

    [[nodiscard]] long long produced() const { return produced_; }

private:
    void gen(int min_anchor, int remaining) {
        if (remaining == 0) {
            if (++produced_ > budget_) {
                throw BudgetError("local stability search exceeded its candidate budget");
            }
            out_.push_back(rho_);
            return;
        }
        for (int a = min_anchor; a < n_; ++a) {
            if (used_[static_cast<std::size_t>(a)]) continue;
            used_[static_cast<std::size_t>(a)] = 1;
            for (int m = 1; m <= remaining; ++m) {
                // Each cycle level owns its tuple; the nested gen() call below
                // spawns further pick() recursion that must not share it.
                std::vector<int> tuple(static_cast<std::size_t>(m), -1);
                pick(a, tuple, 0, remaining - m);
            }
            used_[static_cast<std::size_t>(a)] = 0;
        }
    }

    void pick(int anchor, std::vector<int>& tuple, int pos, int rest_after) {
        const int m = static_cast<int>(tuple.size());
        if (pos == m) {
            rho_[static_cast<std::size_t>(anchor)] = tuple[0];
            for (int i = 0; i + 1 < m; ++i) {
                rho_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])] =
                    tuple[static_cast<std::size_t>(i + 1)];
            }
            rho_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(m - 1)])] = anchor;
            gen(anchor + 1, rest_after);
            rho_[static_cast<std::size_t>(anchor)] = anchor;
            for (int i = 0; i < m; ++i) {
                rho_[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])] =
                    tuple[static_cast<std::size_t>(i)];
            }
            return;
        }
        for (int x = anchor + 1; x < n_; ++x) {
            if (used_[static_cast<std::size_t>(x)]) continue;
            used_[static_cast<std::size_t>(x)] = 1;
            tuple[static_cast<std::size_t>(pos)] = x;
            pick(anchor, tuple, pos + 1, rest_after);
            used_[static_cast<std::size_t>(x)] = 0;
        }
    }

    int n_;
    long long budget_;
    long long produced_ = 0;
    std::vector<int> rho_;
    std::vector<char> used_;
    std::vector<std::vector<int>> out_;
};

// Swap sequence realizing rho: per cycle (anchor x1 .. xm), the swaps
// (anchor,x1), (x1,x2), ..., applied in order; cycles by ascending anchor.
std::vector<std::pair<int, int>> decompose(const std::vector<int>& rho) {
    const int n = static_cast<int>(rho.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> swaps;
    for (int a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)] || rho[static_cast<std::size_t>(a)] == a) continue;
        int prev = a;
        int cur = rho[static_cast<std::size_t>(a)];
        seen[static_cast<std::size_t>(a)] = 1;
        while (cur != a) {
            seen[static_cast<std::size_t>(cur)] = 1;
            swaps.emplace_back(prev, cur);
            prev = cur;
            cur = rho[static_cast<std::size_t>(cur)];
        }
    }
    return swaps;
}

bool stable_i64(const SeatGraph& g, const std::vector<std::int64_t>& tbl,
                const std::vector<int>& seat_of, const std::vector<int>& occ) {
    const int n = static_cast<int>(seat_of.size());
    auto util = [&](int agent, int seat, int traded_seat, int trader) {
        std::int64_t sum = 0;
        for (int v : g.neighbors(seat)) {
            const int other = (v == traded_seat) ? trader : occ[static_cast<std::size_t>(v)];
            sum += tbl[static_cast<std::size_t>(agent) * n + other];
        }
        return sum;
    };
    for (int p = 0; p < n; ++p) {
        const int s = seat_of[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < n; ++q) {
            const int t = seat_of[static_cast<std::size_t>(q)];
            if (util(p, t, s, q) <= util(p, s, -1, -1)) continue;
            if (util(q, s, t, p) > util(q, t, -1, -1)) return false;
        }
    }
    return true;
}

}  // namespace

VertexCoverResult min_vertex_cover(const SeatGraph& graph) {
    std::vector<int> best;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (graph.degree(v) > 0) best.push_back(v);
    }
    std::vector<char> in_cover(static_cast<std::size_t>(graph.vertex_count()), 0);
    if (!best.empty()) vc_branch(graph, in_cover, 0, best);
    return {std::move(best)};
}

SolveReport mwa_vertex_cover(const Instance& instance, long long node_budget) {
    const int n = instance.size();
    SolveReport report;
    report.problem = Problem::MWA;
    report.method = "vc";
    report.feasible = true;
    VertexCoverResult vc = min_vertex_cover(instance.graph);
    const int gamma = vc.size();
    if (gamma == 0) {
        report.arrangement = Arrangement::identity(n);
        report.objective = Rational(0);
        return report;
    }
    long long placements = 1;
    for (int i = 0; i < gamma; ++i) {
        if (placements > node_budget / (n - i)) {
            throw BudgetError("cover placement count exceeds the node budget");
        }
        placements *= (n - i);
    }

    CoverContext ctx;
    ctx.instance = &instance;
    ctx.cover = vc.cover;
    std::vector<char> in_cover(static_cast<std::size_t>(n), 0);
    for (int v : ctx.cover) in_cover[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) {
        if (!in_cover[static_cast<std::size_t>(v)]) ctx.independent.push_back(v);
    }
    for (const auto& e : instance.graph.edges()) {
        if (in_cover[static_cast<std::size_t>(e.first)] && in_cover[static_cast<std::size_t>(e.second)]) {
            ctx.cover_edges.push_back(e);
        }
    }

    bool have = false;
    Rational best(0);
    std::vector<int> best_seat_of;
    std::vector<int> choice(static_cast<std::size_t>(gamma), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> seat_of;
    auto recurse = [&](auto&& self, int slot) -> void {
        if (slot == gamma) {
            Rational total = placement_welfare(ctx, choice, seat_of);
            if (!have || total > best) {
                have = true;
                best = total;
                best_seat_of = seat_of;
            }
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (used[static_cast<std::size_t>(a)]) continue;
            used[static_cast<std::size_t>(a)] = 1;
            choice[static_cast<std::size_t>(slot)] = a;
            self(self, slot + 1);
            used[static_cast<std::size_t>(a)] = 0;
        }
    };
    recurse(recurse, 0);
    report.objective = best;
    report.arrangement = Arrangement(std::move(best_seat_of));
    return report;
}

SolveReport sta_symmetric(const Instance& instance, long long node_budget) {
    if (!instance.profile.classify().symmetric) {
        throw ArgumentError("solver requires a symmetric preference profile");
    }
    SolveReport mwa = mwa_vertex_cover(instance, node_budget);
    if (!is_stable(instance, *mwa.arrangement)) {
        throw Error("internal: welfare-maximal arrangement admitted a blocking swap");
    }
    SolveReport report;
    report.problem = Problem::STA;
    report.method = "vc";
    report.feasible = true;
    report.arrangement = std::move(mwa.arrangement);
    return report;
}

std::optional<SwapPlan> local_k_sta(const Instance& instance, const Arrangement& start, int k,
                                    long long budget) {
    if (k < 0) throw ArgumentError("swap budget k must be non-negative");
    if (start.size() != instance.size()) {
        throw ArgumentError("start arrangement size does not match the instance");
    }
    const int n = instance.size();
    const auto tbl = integer_table(instance.profile);
    const auto stable = [&](const std::vector<int>& seat_of) {
        if (tbl) {
            std::vector<int> occ(static_cast<std::size_t>(n));
            for (int p = 0; p < n; ++p) occ[static_cast<std::size_t>(seat_of[static_cast<std::size_t>(p)])] = p;
            return stable_i64(instance.graph, *tbl, seat_of, occ);
        }
        return is_stable(instance, Arrangement(seat_of));
    };

    if (stable(start.seat_of())) return SwapPlan{start, {}};

    CycleGen gen(n, budget);
    for (int d = 1; d <= k; ++d) {
        std::vector<std::vector<int>> layer = gen.layer(d);
        std::vector<std::pair<std::vector<int>, const std::vector<int>*>> cands;
        cands.reserve(layer.size());
        for (const auto& rho : layer) {
            std::vector<int> target(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                target[static_cast<std::size_t>(i)] =
                    start.seat_of()[static_cast<std::size_t>(rho[static_cast<std::size_t>(i)])];
            }
            cands.emplace_back(std::move(target), &rho);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [target, rho] : cands) {
            if (stable(target)) {
                return SwapPlan{Arrangement(target), decompose(*rho)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace seat::param
