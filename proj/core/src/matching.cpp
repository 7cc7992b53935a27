#include "seatarrange/matching.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "seatarrange/errors.hpp"

namespace seat::matching {

WeightedGraph::WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges)
    : n_(vertex_count) {
    if (vertex_count < 0) throw ArgumentError("negative vertex count");
    edge_index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    edges_.reserve(edges.size());
    for (auto e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
            throw ArgumentError("weighted edge endpoint out of range");
        }
        if (e.u == e.v) throw ArgumentError("weighted self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (edge_index_[static_cast<std::size_t>(e.u) * n_ + e.v] != -1) {
            throw ArgumentError("duplicate weighted edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
        }
        edge_index_[static_cast<std::size_t>(e.u) * n_ + e.v] = static_cast<int>(edges_.size());
        edge_index_[static_cast<std::size_t>(e.v) * n_ + e.u] = static_cast<int>(edges_.size());
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::fill(edge_index_.begin(), edge_index_.end(), -1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const auto& e = edges_[static_cast<std::size_t>(i)];
        edge_index_[static_cast<std::size_t>(e.u) * n_ + e.v] = i;
        edge_index_[static_cast<std::size_t>(e.v) * n_ + e.u] = i;
    }
}

bool WeightedGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return edge_index_[static_cast<std::size_t>(u) * n_ + v] != -1;
}

const Rational& WeightedGraph::weight(int u, int v) const {
    if (!has_edge(u, v)) {
        throw ArgumentError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return edges_[static_cast<std::size_t>(edge_index_[static_cast<std::size_t>(u) * n_ + v])]
        .weight;
}

Rational Matching::total_weight(const WeightedGraph& g) const {
    Rational sum(0);
    for (auto [u, v] : pairs) sum += g.weight(u, v);
    return sum;
}

Rational Matching::min_weight(const WeightedGraph& g) const {
    if (pairs.empty()) throw ArgumentError("min weight of empty matching");
    Rational best = g.weight(pairs.front().first, pairs.front().second);
    for (auto [u, v] : pairs) best = std::min(best, g.weight(u, v));
    return best;
}

namespace {

Matching normalized(std::vector<std::pair<int, int>> pairs) {
    for (auto& [u, v] : pairs) {
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    return Matching{std::move(pairs)};
}

// Standard blossom contraction for maximum cardinality; adjacency-matrix form.
class CardinalitySolver {
public:
    explicit CardinalitySolver(const WeightedGraph& g) : n_(g.vertex_count()) {
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (const auto& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        match_.assign(static_cast<std::size_t>(n_), -1);
    }

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] == -1) try_augment(v);
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<std::size_t>(a)];
            seen[static_cast<std::size_t>(a)] = 1;
            if (match_[static_cast<std::size_t>(a)] == -1) break;
            a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<std::size_t>(b)];
            if (seen[static_cast<std::size_t>(b)]) return b;
            b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int mv = match_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    int find_path(int root) {
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        std::vector<int> queue{root};
        used[static_cast<std::size_t>(root)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to) {
                    continue;
                }
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] !=
                         -1)) {
                    int cur = lca(v, to);
                    blossom_.assign(static_cast<std::size_t>(n_), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) {
                        return to;
                    }
                    int mt = match_[static_cast<std::size_t>(to)];
                    used[static_cast<std::size_t>(mt)] = 1;
                    queue.push_back(mt);
                }
            }
        }
        return -1;
    }

    void try_augment(int root) {
        int v = find_path(root);
        if (v == -1) return;
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int ppv = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> blossom_;
};

}  // namespace

Matching max_cardinality_matching(const WeightedGraph& graph) {
    CardinalitySolver solver(graph);
    auto match = solver.solve();
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (match[static_cast<std::size_t>(v)] > v) pairs.emplace_back(v, match[static_cast<std::size_t>(v)]);
    }
    return normalized(std::move(pairs));
}

namespace {

// Lexicographically smallest matching of size s among edges of `g`, all of
// whose weights are at least `floor_w` when given. Greedy fix-and-verify using
// cardinality matching feasibility.
std::optional<Matching> canonical_size_matching(const WeightedGraph& g, int s,
                                               const std::optional<Rational>& floor_w) {
    std::vector<WeightedEdge> pool;
    for (const auto& e : g.edges()) {
        if (!floor_w || !(e.weight < *floor_w)) pool.push_back(e);
    }
    auto feasible = [&](const std::vector<char>& banned, int need) {
        std::vector<WeightedEdge> rest;
        for (const auto& e : pool) {
            if (!banned[static_cast<std::size_t>(e.u)] && !banned[static_cast<std::size_t>(e.v)]) {
                rest.push_back(e);
            }
        }
        WeightedGraph sub(g.vertex_count(), rest);
        return max_cardinality_matching(sub).size() >= need;
    };
    std::vector<char> banned(static_cast<std::size_t>(g.vertex_count()), 0);
    if (!feasible(banned, s)) return std::nullopt;
    std::vector<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < s) {
        bool advanced = false;
        for (const auto& e : pool) {  // pool is sorted lexicographically
            if (banned[static_cast<std::size_t>(e.u)] || banned[static_cast<std::size_t>(e.v)]) {
                continue;
            }
            banned[static_cast<std::size_t>(e.u)] = 1;
            banned[static_cast<std::size_t>(e.v)] = 1;
            if (feasible(banned, s - static_cast<int>(chosen.size()) - 1)) {
                chosen.emplace_back(e.u, e.v);
                advanced = true;
                break;
            }
            banned[static_cast<std::size_t>(e.u)] = 0;
            banned[static_cast<std::size_t>(e.v)] = 0;
        }
        if (!advanced) return std::nullopt;  // unreachable given the up-front feasibility check
    }
    return normalized(std::move(chosen));
}

}  // namespace

std::optional<Matching> bottleneck_matching_of_size(const WeightedGraph& graph, int s) {
    if (s < 0) throw ArgumentError("negative matching size");
    if (s == 0) return Matching{};
    std::vector<Rational> thresholds;
    for (const auto& e : graph.edges()) thresholds.push_back(e.weight);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    auto reaches = [&](const Rational& t) {
        std::vector<WeightedEdge> kept;
        for (const auto& e : graph.edges()) {
            if (!(e.weight < t)) kept.push_back(e);
        }
        WeightedGraph sub(graph.vertex_count(), kept);
        return max_cardinality_matching(sub).size() >= s;
    };
    // Largest threshold whose induced subgraph still has a size-s matching.
    int lo = 0, hi = static_cast<int>(thresholds.size()) - 1, best = -1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (reaches(thresholds[static_cast<std::size_t>(mid)])) {
            best = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    if (best == -1) return std::nullopt;
    return canonical_size_matching(graph, s, thresholds[static_cast<std::size_t>(best)]);
}

AssignmentResult bipartite_max_weight_perfect(const std::vector<std::vector<Rational>>& weights) {
    const int d = static_cast<int>(weights.size());
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != d) throw ArgumentError("weight table is not square");
    }
    if (d == 0) return {{}, Rational(0)};
    // Kuhn-Munkres on costs = -weights, 1-based with optional "not yet seen".
    std::vector<Rational> u(static_cast<std::size_t>(d) + 1, Rational(0));
    std::vector<Rational> v(static_cast<std::size_t>(d) + 1, Rational(0));
    std::vector<int> p(static_cast<std::size_t>(d) + 1, 0), way(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 1; i <= d; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::optional<Rational>> minv(static_cast<std::size_t>(d) + 1);
        std::vector<char> used(static_cast<std::size_t>(d) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            int j1 = 0;
            std::optional<Rational> delta;
            for (int j = 1; j <= d; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                Rational cur = -weights[static_cast<std::size_t>(i0) - 1][static_cast<std::size_t>(j) - 1] -
                               u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                auto& slot = minv[static_cast<std::size_t>(j)];
                if (!slot || cur < *slot) {
                    slot = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (!delta || *slot < *delta) {
                    delta = *slot;
                    j1 = j;
                }
            }
            for (int j = 0; j <= d; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += *delta;
                    v[static_cast<std::size_t>(j)] -= *delta;
                } else if (minv[static_cast<std::size_t>(j)]) {
                    *minv[static_cast<std::size_t>(j)] -= *delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    AssignmentResult result;
    result.assignment.assign(static_cast<std::size_t>(d), -1);
    for (int j = 1; j <= d; ++j) {
        result.assignment[static_cast<std::size_t>(p[static_cast<std::size_t>(j)]) - 1] = j - 1;
    }
    result.total = Rational(0);
    for (int i = 0; i < d; ++i) {
        result.total += weights[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(result.assignment[static_cast<std::size_t>(i)])];
    }
    return result;
}

KnapsackResult knapsack_01(const std::vector<std::pair<std::int64_t, std::int64_t>>& items,
                           std::int64_t capacity) {
    if (capacity < 0) throw ArgumentError("negative knapsack capacity");
    for (auto [w, val] : items) {
        if (w < 0 || val < 0) throw ArgumentError("negative knapsack item");
    }
    const int m = static_cast<int>(items.size());
    const auto cap = static_cast<std::size_t>(capacity);
    std::vector<std::int64_t> dp(cap + 1, 0);
    std::vector<std::vector<char>> took(static_cast<std::size_t>(m),
                                        std::vector<char>(cap + 1, 0));
    for (int i = 0; i < m; ++i) {
        const auto [w, val] = items[static_cast<std::size_t>(i)];
        if (w > capacity) continue;
        for (std::int64_t c = capacity; c >= w; --c) {
            if (dp[static_cast<std::size_t>(c - w)] + val > dp[static_cast<std::size_t>(c)]) {
                dp[static_cast<std::size_t>(c)] = dp[static_cast<std::size_t>(c - w)] + val;
                took[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 1;
            }
        }
    }
    KnapsackResult result;
    result.best_value = dp[cap];
    std::int64_t c = capacity;
    for (int i = m - 1; i >= 0; --i) {
        if (took[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
            result.chosen.push_back(i);
            c -= items[static_cast<std::size_t>(i)].first;
        }
    }
    std::reverse(result.chosen.begin(), result.chosen.end());
    return result;
}

namespace brute {
namespace {

// Enumerates every matching of the graph, invoking visit on each.
template <typename Visit>
void enumerate_matchings(const WeightedGraph& g, Visit&& visit) {
    const auto& edges = g.edges();
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == edges.size()) {
            visit(current);
            return;
        }
        self(self, idx + 1);
        const auto& e = edges[idx];
        if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
            used[static_cast<std::size_t>(e.u)] = 1;
            used[static_cast<std::size_t>(e.v)] = 1;
            current.emplace_back(e.u, e.v);
            self(self, idx + 1);
            current.pop_back();
            used[static_cast<std::size_t>(e.u)] = 0;
            used[static_cast<std::size_t>(e.v)] = 0;
        }
    };
    rec(rec, 0);
}

Matching as_matching(std::vector<std::pair<int, int>> pairs) { return normalized(std::move(pairs)); }

}  // namespace

Matching max_cardinality(const WeightedGraph& graph) {
    std::optional<Matching> best;
    enumerate_matchings(graph, [&](const std::vector<std::pair<int, int>>& pairs) {
        Matching m = as_matching(pairs);
        if (!best || m.size() > best->size() ||
            (m.size() == best->size() && m.pairs < best->pairs)) {
            best = std::move(m);
        }
    });
    return *best;
}

std::optional<Matching> max_weight_perfect(const WeightedGraph& graph) {
    const int n = graph.vertex_count();
    std::optional<Matching> best;
    std::optional<Rational> best_w;
    enumerate_matchings(graph, [&](const std::vector<std::pair<int, int>>& pairs) {
        if (static_cast<int>(pairs.size()) * 2 != n) return;
        Matching m = as_matching(pairs);
        Rational w = m.total_weight(graph);
        if (!best || w > *best_w || (w == *best_w && m.pairs < best->pairs)) {
            best = std::move(m);
            best_w = w;
        }
    });
    return best;
}

std::optional<Matching> max_weight_of_size(const WeightedGraph& graph, int s) {
    std::optional<Matching> best;
    std::optional<Rational> best_w;
    enumerate_matchings(graph, [&](const std::vector<std::pair<int, int>>& pairs) {
        if (static_cast<int>(pairs.size()) != s) return;
        Matching m = as_matching(pairs);
        Rational w = m.total_weight(graph);
        if (!best || w > *best_w || (w == *best_w && m.pairs < best->pairs)) {
            best = std::move(m);
            best_w = w;
        }
    });
    return best;
}

std::optional<Matching> bottleneck_of_size(const WeightedGraph& graph, int s) {
    std::optional<Matching> best;
    std::optional<Rational> best_min;
    enumerate_matchings(graph, [&](const std::vector<std::pair<int, int>>& pairs) {
        if (static_cast<int>(pairs.size()) != s) return;
        Matching m = as_matching(pairs);
        if (s == 0) {
            if (!best) best = std::move(m);
            return;
        }
        Rational w = m.min_weight(graph);
        if (!best || w > *best_min || (w == *best_min && m.pairs < best->pairs)) {
            best = std::move(m);
            best_min = w;
        }
    });
    return best;
}

}  // namespace brute

}  // namespace seat::matching
