#include "seatarrange/polysolve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seatarrange/errors.hpp"
#include "seatarrange/matching.hpp"

namespace seat::polysolve {

namespace {

using oracle::Problem;

// Seats pair i on edge i (smaller agent on the smaller seat) and the j-th
// single agent on the j-th isolated vertex. Both lists are canonicalized here.
Arrangement place(const ComponentProfile& cp, int n, std::vector<std::pair<int, int>> pairs,
                  std::vector<int> singles) {
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    std::sort(singles.begin(), singles.end());
    if (pairs.size() != cp.edge_list.size() || singles.size() != cp.isolated.size()) {
        throw Error("internal: placement does not cover the seat graph");
    }
    std::vector<int> seat_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        seat_of[static_cast<std::size_t>(pairs[i].first)] = cp.edge_list[i].first;
        seat_of[static_cast<std::size_t>(pairs[i].second)] = cp.edge_list[i].second;
    }
    for (std::size_t j = 0; j < singles.size(); ++j) {
        seat_of[static_cast<std::size_t>(singles[j])] = cp.isolated[j];
    }
    return Arrangement(std::move(seat_of));
}

std::vector<int> leftover_agents(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : pairs) {
        used[static_cast<std::size_t>(a)] = 1;
        used[static_cast<std::size_t>(b)] = 1;
    }
    std::vector<int> out;
    for (int p = 0; p < n; ++p) {
        if (!used[static_cast<std::size_t>(p)]) out.push_back(p);
    }
    return out;
}

// Complete agent graph with the given pair weight.
template <typename F>
matching::WeightedGraph complete_agent_graph(int n, F&& pair_weight) {
    std::vector<matching::WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) edges.push_back({p, q, pair_weight(p, q)});
    }
    return matching::WeightedGraph(n, std::move(edges));
}

// Pairs {p,q} restricted to `in` where each attains the other's maximum
// preference within `in`. Agents outside `in` are invisible.
std::vector<std::pair<int, int>> mutual_best_within(const PreferenceProfile& profile,
                                                    const std::vector<char>& in) {
    const int n = profile.agent_count();
    std::vector<std::optional<Rational>> best(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        if (!in[static_cast<std::size_t>(p)]) continue;
        for (int q = 0; q < n; ++q) {
            if (q == p || !in[static_cast<std::size_t>(q)]) continue;
            const Rational& v = profile.value(p, q);
            auto& b = best[static_cast<std::size_t>(p)];
            if (!b || v > *b) b = v;
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n; ++p) {
        if (!in[static_cast<std::size_t>(p)] || !best[static_cast<std::size_t>(p)]) continue;
        for (int q = p + 1; q < n; ++q) {
            if (!in[static_cast<std::size_t>(q)] || !best[static_cast<std::size_t>(q)]) continue;
            if (profile.value(p, q) == *best[static_cast<std::size_t>(p)] &&
                profile.value(q, p) == *best[static_cast<std::size_t>(q)]) {
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

// Perfect matching of `in` using only the listed pairs; nullopt when none.
std::optional<std::vector<std::pair<int, int>>> perfect_matching_within(
    int n, const std::vector<char>& in, const std::vector<std::pair<int, int>>& candidate_pairs) {
    int members = 0;
    for (char c : in) members += c;
    if (members % 2 != 0) return std::nullopt;
    std::vector<matching::WeightedEdge> edges;
    for (const auto& [p, q] : candidate_pairs) edges.push_back({p, q, Rational(0)});
    matching::Matching mc = matching::max_cardinality_matching(
        matching::WeightedGraph(n, std::move(edges)));
    if (2 * mc.size() != members) return std::nullopt;
    return mc.pairs;
}

SolveReport efa_report(const ComponentProfile& cp, int n, std::string method,
                       std::optional<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>>
                           seating) {
    SolveReport report;
    report.problem = Problem::EFA;
    report.method = std::move(method);
    if (seating) {
        report.feasible = true;
        report.arrangement = place(cp, n, std::move(seating->first), std::move(seating->second));
    }
    return report;
}

// Exact search for the strict-preference case with isolated seats. State is
// the set of agents still allowed to sit on an edge; two sound forced-move
// rules shrink it, and the search branches on single removals in index order.
class StrictSearch {
public:
    StrictSearch(const PreferenceProfile& profile, int ell)
        : profile_(profile), n_(profile.agent_count()), ell_(ell) {}

    std::optional<std::vector<std::pair<int, int>>> run() {
        std::vector<char> in(static_cast<std::size_t>(n_), 1);
        if (search(std::move(in))) return pairs_;
        return std::nullopt;
    }

private:
    static constexpr long long kNodeBudget = 200000;

    // Forced moves: an agent with no non-negative candidate left must take an
    // isolated seat; anyone an isolated-seated agent values positively must
    // also take one. Returns false when more than ell_ agents are forced out.
    bool closure(std::vector<char>& in) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int p = 0; p < n_; ++p) {
                if (!in[static_cast<std::size_t>(p)]) continue;
                bool has_candidate = false;
                for (int q = 0; q < n_ && !has_candidate; ++q) {
                    if (q == p || !in[static_cast<std::size_t>(q)]) continue;
                    if (profile_.value(p, q).sign() >= 0) has_candidate = true;
                }
                if (!has_candidate) {
                    in[static_cast<std::size_t>(p)] = 0;
                    changed = true;
                }
            }
            for (int t = 0; t < n_; ++t) {
                if (in[static_cast<std::size_t>(t)]) continue;
                for (int q = 0; q < n_; ++q) {
                    if (!in[static_cast<std::size_t>(q)]) continue;
                    if (profile_.value(t, q).sign() > 0) {
                        in[static_cast<std::size_t>(q)] = 0;
                        changed = true;
                    }
                }
            }
            int out = 0;
            for (char c : in) out += (c == 0);
            if (out > ell_) return false;
        }
        return true;
    }

    // With exactly ell_ agents out, the seating is forced: each remaining
    // agent must pair with its unique best remaining candidate, mutually, at a
    // non-negative value.
    bool try_pairing(const std::vector<char>& in) {
        std::vector<int> best(static_cast<std::size_t>(n_), -1);
        for (int p = 0; p < n_; ++p) {
            if (!in[static_cast<std::size_t>(p)]) continue;
            for (int q = 0; q < n_; ++q) {
                if (q == p || !in[static_cast<std::size_t>(q)]) continue;
                int& b = best[static_cast<std::size_t>(p)];
                if (b < 0 || profile_.value(p, q) > profile_.value(p, b)) b = q;
            }
        }
        std::vector<std::pair<int, int>> pairs;
        for (int p = 0; p < n_; ++p) {
            if (!in[static_cast<std::size_t>(p)]) continue;
            const int b = best[static_cast<std::size_t>(p)];
            if (b < 0 || profile_.value(p, b).sign() < 0) return false;
            if (best[static_cast<std::size_t>(b)] != p) return false;
            if (p < b) pairs.emplace_back(p, b);
        }
        pairs_ = std::move(pairs);
        return true;
    }

    bool search(std::vector<char> in) {
        if (!closure(in)) return false;
        int out = 0;
        for (char c : in) out += (c == 0);
        if (out == ell_) return try_pairing(in);
        auto [it, fresh] = memo_.try_emplace(in, false);
        if (!fresh) return false;
        if (++nodes_ > kNodeBudget) {
            throw BudgetError("strict envy-free search exceeded its node budget");
        }
        for (int p = 0; p < n_; ++p) {
            if (!in[static_cast<std::size_t>(p)]) continue;
            std::vector<char> next = in;
            next[static_cast<std::size_t>(p)] = 0;
            if (search(std::move(next))) return true;
        }
        return false;
    }

    const PreferenceProfile& profile_;
    int n_;
    int ell_;
    std::map<std::vector<char>, bool> memo_;
    long long nodes_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

ComponentProfile component_profile(const SeatGraph& graph) {
    ComponentProfile cp;
    for (const auto& comp : graph.components()) {
        if (comp.size() == 1) {
            cp.isolated.push_back(comp[0]);
        } else if (comp.size() == 2) {
            cp.edge_list.emplace_back(comp[0], comp[1]);
        } else {
            throw GraphClassError("seat graph has a component of order " +
                                  std::to_string(comp.size()) + "; solver requires order <= 2");
        }
    }
    cp.n_prime = 2 * static_cast<int>(cp.edge_list.size());
    return cp;
}

std::vector<std::pair<int, int>> mutual_best_pairs(const PreferenceProfile& profile) {
    std::vector<char> in(static_cast<std::size_t>(profile.agent_count()), 1);
    return mutual_best_within(profile, in);
}

SolveReport mwa_small_components(const Instance& instance) {
    const ComponentProfile cp = component_profile(instance.graph);
    const int n = instance.size();
    const int m = static_cast<int>(cp.edge_list.size());
    SolveReport report;
    report.problem = Problem::MWA;
    report.method = "components2";
    report.feasible = true;
    if (m == 0) {
        report.arrangement = Arrangement::identity(n);
        report.objective = Rational(0);
        return report;
    }
    const auto& prof = instance.profile;
    matching::WeightedGraph g = complete_agent_graph(
        n, [&](int p, int q) { return prof.value(p, q) + prof.value(q, p); });
    auto match = matching::max_weight_matching_of_size(g, m);
    if (!match) throw Error("internal: complete graph lost its size-m matching");
    report.objective = match->total_weight(g);
    report.arrangement = place(cp, n, match->pairs, leftover_agents(n, match->pairs));
    return report;
}

SolveReport mua_small_components(const Instance& instance) {
    const ComponentProfile cp = component_profile(instance.graph);
    const int n = instance.size();
    const int m = static_cast<int>(cp.edge_list.size());
    SolveReport report;
    report.problem = Problem::MUA;
    report.method = "components2";
    report.feasible = true;
    if (m == 0) {
        report.arrangement = Arrangement::identity(n);
        report.objective = Rational(0);
        return report;
    }
    const auto& prof = instance.profile;
    matching::WeightedGraph g = complete_agent_graph(
        n, [&](int p, int q) { return std::min(prof.value(p, q), prof.value(q, p)); });
    auto match = matching::bottleneck_matching_of_size(g, m);
    if (!match) throw Error("internal: complete graph lost its size-m matching");
    Rational bottleneck = match->min_weight(g);
    report.objective = cp.isolated.empty() ? bottleneck : std::min(Rational(0), bottleneck);
    report.arrangement = place(cp, n, match->pairs, leftover_agents(n, match->pairs));
    return report;
}

SolveReport efa_edge_graph(const Instance& instance) {
    if (!instance.graph.is_edge_only()) {
        throw GraphClassError("solver requires every seat component to be a single edge");
    }
    const ComponentProfile cp = component_profile(instance.graph);
    const int n = instance.size();
    if (n == 0) return efa_report(cp, n, "edge-efa", {{{}, {}}});
    std::vector<char> all(static_cast<std::size_t>(n), 1);
    auto pm = perfect_matching_within(n, all, mutual_best_within(instance.profile, all));
    if (!pm) return efa_report(cp, n, "edge-efa", std::nullopt);
    return efa_report(cp, n, "edge-efa", {{std::move(*pm), {}}});
}

SolveReport efa_symmetric_small_components(const Instance& instance) {
    const auto& prof = instance.profile;
    if (!prof.classify().symmetric) {
        throw ArgumentError("solver requires a symmetric preference profile");
    }
    const ComponentProfile cp = component_profile(instance.graph);
    const int n = instance.size();
    const int m = static_cast<int>(cp.edge_list.size());
    const int iso = static_cast<int>(cp.isolated.size());
    const std::string method = "sym-efa";
    if (m == 0) return efa_report(cp, n, method, {{{}, leftover_agents(n, {})}});

    if (iso == 0) {
        // No isolated seats: envy-freeness is exactly a perfect matching of
        // globally mutual-best pairs.
        std::vector<char> all(static_cast<std::size_t>(n), 1);
        auto pm = perfect_matching_within(n, all, mutual_best_within(prof, all));
        if (!pm) return efa_report(cp, n, method, std::nullopt);
        return efa_report(cp, n, method, {{std::move(*pm), {}}});
    }

    // Agents whose every preference is negative can only take isolated seats.
    // Symmetry makes one peeling round enough: removing such an agent never
    // removes a non-negative candidate of anyone else.
    std::vector<char> in(static_cast<std::size_t>(n), 1);
    std::vector<int> forced_out;
    for (int p = 0; p < n; ++p) {
        bool has_nonneg = false;
        for (int q = 0; q < n && !has_nonneg; ++q) {
            if (q != p && prof.value(p, q).sign() >= 0) has_nonneg = true;
        }
        if (!has_nonneg) {
            in[static_cast<std::size_t>(p)] = 0;
            forced_out.push_back(p);
        }
    }
    if (static_cast<int>(forced_out.size()) > iso) return efa_report(cp, n, method, std::nullopt);
    const int residual_iso = iso - static_cast<int>(forced_out.size());

    if (residual_iso == 0) {
        // Isolated seats are exactly filled by the peeled agents; the rest
        // must perfectly match on pairs mutual-best within the residual.
        auto pm = perfect_matching_within(n, in, mutual_best_within(prof, in));
        if (!pm) return efa_report(cp, n, method, std::nullopt);
        return efa_report(cp, n, method, {{std::move(*pm), std::move(forced_out)}});
    }

    // Some isolated seat stays for a residual agent, so every seated pair
    // needs value >= 0 and mutual-best status within the residual. Positive
    // values tie agents into components that sit together or not at all.
    std::vector<std::optional<Rational>> vmax(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        if (!in[static_cast<std::size_t>(p)]) continue;
        for (int q = 0; q < n; ++q) {
            if (q == p || !in[static_cast<std::size_t>(q)]) continue;
            const Rational& v = prof.value(p, q);
            auto& b = vmax[static_cast<std::size_t>(p)];
            if (!b || v > *b) b = v;
        }
    }

    // Union positive pairs into components.
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) parent[static_cast<std::size_t>(p)] = p;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int p = 0; p < n; ++p) {
        if (!in[static_cast<std::size_t>(p)]) continue;
        for (int q = p + 1; q < n; ++q) {
            if (!in[static_cast<std::size_t>(q)]) continue;
            if (prof.value(p, q).sign() > 0) parent[static_cast<std::size_t>(find(p))] = find(q);
        }
    }
    std::map<int, std::vector<int>> comps;
    for (int p = 0; p < n; ++p) {
        if (in[static_cast<std::size_t>(p)]) comps[find(p)].push_back(p);
    }

    // A component is usable only if its mutual-best pairs perfectly match it.
    std::vector<std::vector<std::pair<int, int>>> comp_pairs;
    std::vector<std::pair<std::int64_t, std::int64_t>> items;
    for (const auto& [root, members] : comps) {
        if (members.size() < 2) continue;
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        for (int p : members) mask[static_cast<std::size_t>(p)] = 1;
        std::vector<std::pair<int, int>> cand;
        for (int p : members) {
            for (int q : members) {
                if (q <= p) continue;
                if (prof.value(p, q) == *vmax[static_cast<std::size_t>(p)] &&
                    prof.value(q, p) == *vmax[static_cast<std::size_t>(q)]) {
                    cand.emplace_back(p, q);
                }
            }
        }
        auto pm = perfect_matching_within(n, mask, cand);
        if (!pm) continue;
        comp_pairs.push_back(std::move(*pm));
        const auto half = static_cast<std::int64_t>(members.size() / 2);
        items.emplace_back(half, half);
    }

    // Zero-value pairs among agents whose maximum is zero can fill the rest.
    std::vector<std::pair<int, int>> zero_pairs;
    for (int p = 0; p < n; ++p) {
        if (!in[static_cast<std::size_t>(p)] || vmax[static_cast<std::size_t>(p)]->sign() != 0) continue;
        for (int q = p + 1; q < n; ++q) {
            if (!in[static_cast<std::size_t>(q)] || vmax[static_cast<std::size_t>(q)]->sign() != 0) continue;
            if (prof.value(p, q).sign() == 0) zero_pairs.emplace_back(p, q);
        }
    }
    std::vector<matching::WeightedEdge> zedges;
    for (const auto& [p, q] : zero_pairs) zedges.push_back({p, q, Rational(0)});
    matching::Matching zero_match =
        matching::max_cardinality_matching(matching::WeightedGraph(n, std::move(zedges)));

    matching::KnapsackResult ks = matching::knapsack_01(items, m);
    if (ks.best_value + zero_match.size() < m) return efa_report(cp, n, method, std::nullopt);

    std::vector<std::pair<int, int>> pairs;
    for (int idx : ks.chosen) {
        const auto& cps = comp_pairs[static_cast<std::size_t>(idx)];
        pairs.insert(pairs.end(), cps.begin(), cps.end());
    }
    const int need_zero = m - static_cast<int>(ks.best_value);
    std::vector<std::pair<int, int>> zpairs = zero_match.pairs;
    std::sort(zpairs.begin(), zpairs.end());
    pairs.insert(pairs.end(), zpairs.begin(), zpairs.begin() + need_zero);
    return efa_report(cp, n, method, {{std::move(pairs), leftover_agents(n, pairs)}});
}

SolveReport efa_strict_or_positive(const Instance& instance) {
    const auto& prof = instance.profile;
    const PreferenceFlags flags = prof.classify();
    if (!flags.strict && !flags.positive) {
        throw ArgumentError("solver requires strict or positive preferences");
    }
    const ComponentProfile cp = component_profile(instance.graph);
    const int n = instance.size();
    const int m = static_cast<int>(cp.edge_list.size());
    const int iso = static_cast<int>(cp.isolated.size());
    const std::string method = "strict-pos-efa";
    if (m == 0) return efa_report(cp, n, method, {{{}, leftover_agents(n, {})}});

    if (iso == 0) {
        // Envy-freeness with only edge seats is a perfect matching of
        // globally mutual-best pairs, whatever the preference class.
        std::vector<char> all(static_cast<std::size_t>(n), 1);
        auto pm = perfect_matching_within(n, all, mutual_best_within(prof, all));
        if (!pm) return efa_report(cp, n, method, std::nullopt);
        return efa_report(cp, n, method, {{std::move(*pm), {}}});
    }

    if (flags.strict) {
        StrictSearch search(prof, iso);
        auto pairs = search.run();
        if (!pairs) return efa_report(cp, n, method, std::nullopt);
        return efa_report(cp, n, method, {{std::move(*pairs), leftover_agents(n, *pairs)}});
    }

    // Positive preferences: an agent on an isolated seat envies every seated
    // agent, so edges and isolated seats cannot coexist in a feasible instance.
    return efa_report(cp, n, method, std::nullopt);
}

}  // namespace seat::polysolve
