#include "seatarrange/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "seatarrange/errors.hpp"
#include "seatarrange/seat_graph.hpp"

namespace seat::reductions {

namespace {

using oracle::Problem;

constexpr int kGraphBudget = 8;
constexpr int kMultisetBudget = 12;
constexpr int kRoommatesBudget = 8;

SeatGraph as_graph(const GraphSource& g) {
    return SeatGraph(g.vertices, g.edges);  // reuses edge validation
}

void expect_kind(const SourceProblem& source, SourceProblem::Kind kind, const char* what) {
    if (source.kind != kind) {
        throw ArgumentError(std::string("reduction expects a ") + what + " source");
    }
}

std::string span_note(const char* role, int lo, int hi) {
    return std::string(role) + ": agents/seats [" + std::to_string(lo) + "," + std::to_string(hi) +
           ")";
}

// ---- source-problem brute force ----

bool find_subset(const SeatGraph& g, int k, bool want_clique, std::vector<int>& chosen, int from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : chosen) {
            const bool adjacent = g.has_edge(u, v);
            if (adjacent != want_clique) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(v);
        if (find_subset(g, k, want_clique, chosen, v + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

SourceAnswer solve_subset(const GraphSource& gs, int k, bool want_clique) {
    if (gs.vertices > kGraphBudget) throw BudgetError("source graph exceeds 8 vertices");
    if (k < 0) throw ArgumentError("subset size k must be non-negative");
    const SeatGraph g = as_graph(gs);
    SourceAnswer ans;
    if (k > g.vertex_count()) return ans;
    std::vector<int> chosen;
    if (find_subset(g, k, want_clique, chosen, 0)) {
        ans.yes = true;
        ans.witness = {chosen};
    }
    return ans;
}

SourceAnswer solve_partition(const std::vector<std::int64_t>& a) {
    if (static_cast<int>(a.size()) > kMultisetBudget) {
        throw BudgetError("source multiset exceeds 12 elements");
    }
    SourceAnswer ans;
    const int n = static_cast<int>(a.size());
    if (n % 2 != 0) return ans;
    const std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    if (total % 2 != 0) return ans;
    // Equal-cardinality halves with equal sums: the variant the star gadgets
    // decide (centers carry exactly half the leaves each).
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != n / 2) continue;
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) s += a[static_cast<std::size_t>(i)];
        }
        if (2 * s != total) continue;
        std::vector<int> left, right;
        for (int i = 0; i < n; ++i) {
            ((mask >> i) & 1 ? left : right).push_back(i);
        }
        ans.yes = true;
        ans.witness = {left, right};
        return ans;
    }
    return ans;
}

bool find_triples(const std::vector<std::int64_t>& a, std::int64_t bound, std::vector<char>& used,
                  std::vector<std::vector<int>>& triples) {
    const int n = static_cast<int>(a.size());
    int first = -1;
    for (int i = 0; i < n; ++i) {
        if (!used[static_cast<std::size_t>(i)]) {
            first = i;
            break;
        }
    }
    if (first < 0) return true;
    used[static_cast<std::size_t>(first)] = 1;
    for (int j = first + 1; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = 1;
        for (int l = j + 1; l < n; ++l) {
            if (used[static_cast<std::size_t>(l)]) continue;
            if (a[static_cast<std::size_t>(first)] + a[static_cast<std::size_t>(j)] +
                    a[static_cast<std::size_t>(l)] !=
                bound) {
                continue;
            }
            used[static_cast<std::size_t>(l)] = 1;
            triples.push_back({first, j, l});
            if (find_triples(a, bound, used, triples)) return true;
            triples.pop_back();
            used[static_cast<std::size_t>(l)] = 0;
        }
        used[static_cast<std::size_t>(j)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
    return false;
}

void validate_three_partition(const std::vector<std::int64_t>& a, std::int64_t bound) {
    if (a.size() % 3 != 0 || a.empty()) {
        throw ArgumentError("three-way partition needs 3t elements, t >= 1");
    }
    const auto t = static_cast<std::int64_t>(a.size() / 3);
    const std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    if (total != t * bound) {
        throw ArgumentError("element sum must equal t times the per-triple bound");
    }
    for (std::int64_t v : a) {
        if (v < 1) throw ArgumentError("elements must be positive");
    }
}

SourceAnswer solve_three_partition(const std::vector<std::int64_t>& a, std::int64_t bound) {
    if (static_cast<int>(a.size()) > kMultisetBudget) {
        throw BudgetError("source multiset exceeds 12 elements");
    }
    validate_three_partition(a, bound);
    SourceAnswer ans;
    std::vector<char> used(a.size(), 0);
    std::vector<std::vector<int>> triples;
    if (find_triples(a, bound, used, triples)) {
        ans.yes = true;
        ans.witness = std::move(triples);
    }
    return ans;
}

bool find_triangles(const SeatGraph& g, std::vector<char>& used,
                    std::vector<std::vector<int>>& triangles) {
    const int n = g.vertex_count();
    int first = -1;
    for (int v = 0; v < n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) {
            first = v;
            break;
        }
    }
    if (first < 0) return true;
    used[static_cast<std::size_t>(first)] = 1;
    for (int u : g.neighbors(first)) {
        if (used[static_cast<std::size_t>(u)]) continue;
        used[static_cast<std::size_t>(u)] = 1;
        for (int w : g.neighbors(first)) {
            if (w <= u || used[static_cast<std::size_t>(w)] || !g.has_edge(u, w)) continue;
            used[static_cast<std::size_t>(w)] = 1;
            triangles.push_back({first, u, w});
            if (find_triangles(g, used, triangles)) return true;
            triangles.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        used[static_cast<std::size_t>(u)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
    return false;
}

SourceAnswer solve_triangles(const GraphSource& gs) {
    if (gs.vertices > kGraphBudget + 1) throw BudgetError("source graph exceeds 9 vertices");
    const SeatGraph g = as_graph(gs);
    if (g.vertex_count() % 3 != 0) {
        throw ArgumentError("vertex count must be divisible by 3");
    }
    SourceAnswer ans;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> triangles;
    if (find_triangles(g, used, triangles)) {
        ans.yes = true;
        ans.witness = std::move(triangles);
    }
    return ans;
}

SourceAnswer solve_spanning(const GraphSource& pattern_src, const GraphSource& host_src) {
    if (pattern_src.vertices > kGraphBudget) throw BudgetError("source graph exceeds 8 vertices");
    const SeatGraph pattern = as_graph(pattern_src);
    const SeatGraph host = as_graph(host_src);
    if (pattern.vertex_count() != host.vertex_count()) {
        throw ArgumentError("pattern and host must have the same vertex count");
    }
    SourceAnswer ans;
    const int n = pattern.vertex_count();
    std::vector<int> g(static_cast<std::size_t>(n));
    std::iota(g.begin(), g.end(), 0);
    bool more = true;
    while (more) {
        bool ok = true;
        for (const auto& [u, v] : pattern.edges()) {
            if (!host.has_edge(g[static_cast<std::size_t>(u)], g[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ans.yes = true;
            ans.witness = {g};
            return ans;
        }
        more = std::next_permutation(g.begin(), g.end());
    }
    return ans;
}

void validate_roommates(const std::vector<std::vector<int>>& ranks) {
    const int n = static_cast<int>(ranks.size());
    if (n == 0 || n % 2 != 0) throw ArgumentError("roommates need an even, positive agent count");
    for (int p = 0; p < n; ++p) {
        if (static_cast<int>(ranks[static_cast<std::size_t>(p)].size()) != n) {
            throw ArgumentError("rank table must be n x n");
        }
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            const int r = ranks[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            if (r < 0 || r > n - 2) throw ArgumentError("ranks must lie in [0, n-2]");
        }
    }
}

bool roommates_stable(const std::vector<std::vector<int>>& ranks, const std::vector<int>& partner) {
    const int n = static_cast<int>(partner.size());
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (partner[static_cast<std::size_t>(p)] == q) continue;
            const int pp = partner[static_cast<std::size_t>(p)];
            const int pq = partner[static_cast<std::size_t>(q)];
            if (ranks[static_cast<std::size_t>(p)][static_cast<std::size_t>(pq)] <
                    ranks[static_cast<std::size_t>(p)][static_cast<std::size_t>(pp)] &&
                ranks[static_cast<std::size_t>(q)][static_cast<std::size_t>(pp)] <
                    ranks[static_cast<std::size_t>(q)][static_cast<std::size_t>(pq)]) {
                return false;
            }
        }
    }
    return true;
}

bool find_stable_matching(const std::vector<std::vector<int>>& ranks, std::vector<int>& partner) {
    const int n = static_cast<int>(partner.size());
    int first = -1;
    for (int p = 0; p < n; ++p) {
        if (partner[static_cast<std::size_t>(p)] < 0) {
            first = p;
            break;
        }
    }
    if (first < 0) return roommates_stable(ranks, partner);
    for (int q = first + 1; q < n; ++q) {
        if (partner[static_cast<std::size_t>(q)] >= 0) continue;
        partner[static_cast<std::size_t>(first)] = q;
        partner[static_cast<std::size_t>(q)] = first;
        if (find_stable_matching(ranks, partner)) return true;
        partner[static_cast<std::size_t>(first)] = -1;
        partner[static_cast<std::size_t>(q)] = -1;
    }
    return false;
}

SourceAnswer solve_roommates(const std::vector<std::vector<int>>& ranks) {
    if (static_cast<int>(ranks.size()) > kRoommatesBudget) {
        throw BudgetError("roommates source exceeds 8 agents");
    }
    validate_roommates(ranks);
    SourceAnswer ans;
    std::vector<int> partner(ranks.size(), -1);
    if (find_stable_matching(ranks, partner)) {
        ans.yes = true;
        for (int p = 0; p < static_cast<int>(partner.size()); ++p) {
            if (p < partner[static_cast<std::size_t>(p)]) {
                ans.witness.push_back({p, partner[static_cast<std::size_t>(p)]});
            }
        }
    }
    return ans;
}

// ---- seat-graph building blocks ----

std::vector<Edge> clique_edges(int lo, int hi) {
    std::vector<Edge> edges;
    for (int u = lo; u < hi; ++u) {
        for (int v = u + 1; v < hi; ++v) edges.emplace_back(u, v);
    }
    return edges;
}

void add_star(std::vector<Edge>& edges, int center, int leaf_lo, int leaf_hi) {
    for (int v = leaf_lo; v < leaf_hi; ++v) edges.emplace_back(std::min(center, v), std::max(center, v));
}

}  // namespace

SourceProblem SourceProblem::k_clique(GraphSource g, int k) {
    SourceProblem s;
    s.kind = Kind::KClique;
    s.graph = std::move(g);
    s.k = k;
    return s;
}

SourceProblem SourceProblem::independent_set(GraphSource g, int k) {
    SourceProblem s;
    s.kind = Kind::IndependentSet;
    s.graph = std::move(g);
    s.k = k;
    return s;
}

SourceProblem SourceProblem::partition(std::vector<std::int64_t> values) {
    SourceProblem s;
    s.kind = Kind::Partition;
    s.values = std::move(values);
    return s;
}

SourceProblem SourceProblem::three_partition(std::vector<std::int64_t> values, std::int64_t bound) {
    SourceProblem s;
    s.kind = Kind::ThreePartition;
    s.values = std::move(values);
    s.bound = bound;
    return s;
}

SourceProblem SourceProblem::triangles(GraphSource g) {
    SourceProblem s;
    s.kind = Kind::PartitionIntoTriangles;
    s.graph = std::move(g);
    return s;
}

SourceProblem SourceProblem::spanning(GraphSource pattern, GraphSource host) {
    SourceProblem s;
    s.kind = Kind::SpanningSubgraphIso;
    s.pattern = std::move(pattern);
    s.graph = std::move(host);
    return s;
}

SourceProblem SourceProblem::roommates(std::vector<std::vector<int>> ranks) {
    SourceProblem s;
    s.kind = Kind::ExchangeRoommates;
    s.ranks = std::move(ranks);
    return s;
}

SourceAnswer solve_source(const SourceProblem& source) {
    switch (source.kind) {
        case SourceProblem::Kind::KClique:
            return solve_subset(source.graph, source.k, true);
        case SourceProblem::Kind::IndependentSet:
            return solve_subset(source.graph, source.k, false);
        case SourceProblem::Kind::Partition:
            return solve_partition(source.values);
        case SourceProblem::Kind::ThreePartition:
            return solve_three_partition(source.values, source.bound);
        case SourceProblem::Kind::PartitionIntoTriangles:
            return solve_triangles(source.graph);
        case SourceProblem::Kind::SpanningSubgraphIso:
            return solve_spanning(source.pattern, source.graph);
        case SourceProblem::Kind::ExchangeRoommates:
            return solve_roommates(source.ranks);
    }
    throw ArgumentError("unknown source kind");
}

std::string reduction_name(ReductionId id) {
    switch (id) {
        case ReductionId::StaExchangeRoommates: return "sta_exchange_roommates";
        case ReductionId::EfaTriangles: return "efa_triangles";
        case ReductionId::EfaCliqueIs: return "efa_clique_is";
        case ReductionId::Efa3Partition: return "efa_3partition";
        case ReductionId::MwaSpanning: return "mwa_spanning";
        case ReductionId::MuaSpanningRegular: return "mua_spanning_regular";
        case ReductionId::MwaKClique: return "mwa_kclique";
        case ReductionId::MuaPartition: return "mua_partition";
        case ReductionId::EfaPartition: return "efa_partition";
        case ReductionId::LocalStaIndependentSet: return "local_sta_independent_set";
    }
    throw ArgumentError("unknown reduction id");
}

std::optional<ReductionId> parse_reduction(const std::string& name) {
    for (ReductionId id : {ReductionId::StaExchangeRoommates, ReductionId::EfaTriangles,
                           ReductionId::EfaCliqueIs, ReductionId::Efa3Partition,
                           ReductionId::MwaSpanning, ReductionId::MuaSpanningRegular,
                           ReductionId::MwaKClique, ReductionId::MuaPartition,
                           ReductionId::EfaPartition, ReductionId::LocalStaIndependentSet}) {
        if (reduction_name(id) == name) return id;
    }
    return std::nullopt;
}

namespace {

HardInstance gen_sta_exchange_roommates(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::ExchangeRoommates, "roommates");
    validate_roommates(source.ranks);
    const int n = static_cast<int>(source.ranks.size());
    PreferenceProfile prof(n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            // Order-preserving cardinalization: rank 0 scores n-1, and so on
            // down; ties share a score. All scores are positive.
            prof.set_value(p, q,
                           Rational(n - 1 - source.ranks[static_cast<std::size_t>(p)]
                                                        [static_cast<std::size_t>(q)]));
        }
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n / 2; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    HardInstance hard;
    hard.instance = Instance(SeatGraph(n, std::move(edges)), std::move(prof));
    hard.problem = Problem::STA;
    hard.gadget_notes = {"seat edges (2i, 2i+1) host the matched pairs",
                         "scores are (n-1) minus the ordinal rank"};
    return hard;
}

HardInstance gen_efa_triangles(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::PartitionIntoTriangles, "triangle-partition");
    const SeatGraph g = as_graph(source.graph);
    const int nv = g.vertex_count();
    if (nv % 3 != 0) throw ArgumentError("vertex count must be divisible by 3");
    const int n = nv + 3;
    PreferenceProfile prof(n);
    const auto super_lo = nv;
    for (int p = super_lo; p < n; ++p) {
        for (int q = super_lo; q < n; ++q) {
            if (p != q) prof.set_value(p, q, Rational(2));
        }
    }
    for (int p = super_lo; p < n; ++p) {
        for (int v = 0; v < nv; ++v) {
            prof.set_value(p, v, Rational(1));
            prof.set_value(v, p, Rational(1));
        }
    }
    for (const auto& [u, v] : g.edges()) {
        prof.set_value(u, v, Rational(1));
        prof.set_value(v, u, Rational(1));
    }
    std::vector<Edge> edges;
    for (int t = 0; t < nv / 3 + 1; ++t) {
        edges.emplace_back(3 * t, 3 * t + 1);
        edges.emplace_back(3 * t, 3 * t + 2);
        edges.emplace_back(3 * t + 1, 3 * t + 2);
    }
    HardInstance hard;
    hard.instance = Instance(SeatGraph(n, std::move(edges)), std::move(prof));
    hard.problem = Problem::EFA;
    hard.gadget_notes = {span_note("vertex agents", 0, nv), span_note("super agents", nv, n),
                         "seats: disjoint triangles (3t, 3t+1, 3t+2)"};
    return hard;
}

HardInstance gen_efa_clique_is(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::KClique, "k-clique");
    const SeatGraph g = as_graph(source.graph);
    const int nv = g.vertex_count();
    const int k = source.k;
    if (k < 1 || k > nv) throw ArgumentError("clique size k must satisfy 1 <= k <= |V|");
    const int m = g.edge_count();
    const int copies = k * (k - 1) / 2 + 1;
    const int n = m + copies * nv;
    const int iso = copies * k + k * (k - 1) / 2;
    const int clique_sz = n - iso;
    if (clique_sz < 2) {
        throw ArgumentError("clique part needs at least 2 seats; enlarge the source graph");
    }
    PreferenceProfile prof(n);
    const auto first_copy = [&](int v) { return m + v * copies; };
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = g.edges()[static_cast<std::size_t>(e)];
        prof.set_value(e, first_copy(u), Rational(1));
        prof.set_value(e, first_copy(v), Rational(1));
    }
    for (int v = 0; v < nv; ++v) {
        for (int i = 0; i < copies; ++i) {
            for (int j = 0; j < copies; ++j) {
                if (i != j) prof.set_value(first_copy(v) + i, first_copy(v) + j, Rational(1));
            }
        }
    }
    HardInstance hard;
    hard.instance =
        Instance(SeatGraph(n, clique_edges(iso, n)), std::move(prof));
    hard.problem = Problem::EFA;
    hard.gadget_notes = {span_note("edge agents", 0, m),
                         span_note("vertex copies", m, n),
                         span_note("isolated seats", 0, iso), span_note("clique seats", iso, n)};
    return hard;
}

HardInstance gen_efa_3partition(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::ThreePartition, "three-way partition");
    validate_three_partition(source.values, source.bound);
    const int t = static_cast<int>(source.values.size()) / 3;
    const int n = 4 * t + 1;  // root + t triple agents + 3t element agents
    PreferenceProfile prof(n);
    for (int j = 1; j <= t; ++j) {
        prof.set_value(j, 0, Rational(source.bound));
        for (int i = 0; i < 3 * t; ++i) {
            prof.set_value(j, t + 1 + i, Rational(source.values[static_cast<std::size_t>(i)]));
        }
    }
    std::vector<Edge> edges;
    for (int j = 1; j <= t; ++j) {
        edges.emplace_back(0, j);
        for (int c = 0; c < 3; ++c) edges.emplace_back(j, t + 3 * (j - 1) + 1 + c);
    }
    HardInstance hard;
    hard.instance = Instance(SeatGraph(n, std::move(edges)), std::move(prof));
    hard.problem = Problem::EFA;
    hard.gadget_notes = {"agent/seat 0: root", span_note("triple agents / inner seats", 1, t + 1),
                         span_note("element agents / leaf seats", t + 1, n)};
    return hard;
}

HardInstance gen_spanning(const SourceProblem& source, bool regular_maximin) {
    expect_kind(source, SourceProblem::Kind::SpanningSubgraphIso, "spanning-subgraph");
    const SeatGraph pattern = as_graph(source.pattern);
    const SeatGraph host = as_graph(source.graph);
    if (pattern.vertex_count() != host.vertex_count()) {
        throw ArgumentError("pattern and host must have the same vertex count");
    }
    const int n = host.vertex_count();
    if (regular_maximin) {
        if (n == 0) throw ArgumentError("regular pattern must be non-empty");
        const int r = pattern.degree(0);
        for (int v = 0; v < n; ++v) {
            if (pattern.degree(v) != r) {
                throw ArgumentError("pattern seat graph must be regular");
            }
        }
    }
    PreferenceProfile prof(n);
    for (const auto& [u, v] : host.edges()) {
        prof.set_value(u, v, Rational(1));
        prof.set_value(v, u, Rational(1));
    }
    HardInstance hard;
    hard.instance = Instance(pattern, std::move(prof));
    hard.problem = regular_maximin ? Problem::MUA : Problem::MWA;
    hard.target = regular_maximin ? Rational(pattern.degree(0))
                                  : Rational(2 * pattern.edge_count());
    hard.gadget_notes = {"agents are host-graph vertices; preferences are host adjacency",
                         "seat graph is the pattern graph"};
    return hard;
}

HardInstance gen_mwa_kclique(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::KClique, "k-clique");
    const SeatGraph g = as_graph(source.graph);
    const int nv = g.vertex_count();
    const int k = source.k;
    if (k < 1 || k > nv) throw ArgumentError("clique size k must satisfy 1 <= k <= |V|");
    PreferenceProfile prof(nv);
    for (const auto& [u, v] : g.edges()) {
        prof.set_value(u, v, Rational(1));
        prof.set_value(v, u, Rational(1));
    }
    HardInstance hard;
    hard.instance = Instance(SeatGraph(nv, clique_edges(0, k)), std::move(prof));
    hard.problem = Problem::MWA;
    hard.target = Rational(static_cast<std::int64_t>(k) * (k - 1));
    hard.gadget_notes = {span_note("clique seats", 0, k), span_note("isolated seats", k, nv)};
    return hard;
}

void validate_partition_values(const std::vector<std::int64_t>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 2 || n % 2 != 0) throw ArgumentError("element count must be even and at least 2");
    for (std::int64_t v : a) {
        if (v < 0) throw ArgumentError("elements must be non-negative");
    }
}

// Two stars with n/2 leaves each; centers at 0 and n/2+1.
SeatGraph two_star_graph(int n) {
    std::vector<Edge> edges;
    add_star(edges, 0, 1, n / 2 + 1);
    add_star(edges, n / 2 + 1, n / 2 + 2, n + 2);
    return SeatGraph(n + 2, std::move(edges));
}

HardInstance gen_mua_partition(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::Partition, "partition");
    validate_partition_values(source.values);
    const int n = static_cast<int>(source.values.size());
    const std::int64_t total = std::accumulate(source.values.begin(), source.values.end(),
                                               std::int64_t{0});
    const Rational half(total, 2);
    PreferenceProfile prof(n + 2);
    for (int i = 0; i < n; ++i) {
        prof.set_value(i, n, half);
        prof.set_value(i, n + 1, half);
        prof.set_value(n, i, Rational(source.values[static_cast<std::size_t>(i)]));
        prof.set_value(n + 1, i, Rational(source.values[static_cast<std::size_t>(i)]));
    }
    HardInstance hard;
    hard.instance = Instance(two_star_graph(n), std::move(prof));
    hard.problem = Problem::MUA;
    hard.target = half;
    hard.gadget_notes = {span_note("element agents", 0, n), "agents n, n+1: centers",
                         "seats 0 and n/2+1: star centers"};
    return hard;
}

HardInstance gen_efa_partition(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::Partition, "partition");
    validate_partition_values(source.values);
    const int n = static_cast<int>(source.values.size());
    PreferenceProfile prof(n + 2);
    for (int i = 0; i < n; ++i) {
        const Rational v(source.values[static_cast<std::size_t>(i)]);
        prof.set_value(i, n, v);
        prof.set_value(i, n + 1, v);
        prof.set_value(n, i, v);
        prof.set_value(n + 1, i, v);
    }
    HardInstance hard;
    hard.instance = Instance(two_star_graph(n), std::move(prof));
    hard.problem = Problem::EFA;
    hard.gadget_notes = {span_note("element agents", 0, n), "agents n, n+1: centers",
                         "seats 0 and n/2+1: star centers"};
    return hard;
}

HardInstance gen_local_sta(const SourceProblem& source) {
    expect_kind(source, SourceProblem::Kind::IndependentSet, "independent-set");
    const SeatGraph h = as_graph(source.graph);
    const int nv = h.vertex_count();
    const int k = source.k;
    if (k < 1) throw ArgumentError("swap budget k must be at least 1");
    if (nv <= k + 2) throw ArgumentError("source graph needs more than k + 2 vertices");
    const int n = nv + 3 * k + 5;
    const std::int64_t big = static_cast<std::int64_t>(n) * n;

    // Agent/seat blocks, in index order.
    const int c1_lo = 0, c1_hi = k;
    const int c2_lo = k, c2_hi = 2 * k + 2;
    const int v_lo = 2 * k + 2, v_hi = 2 * k + 2 + nv;
    const int x1 = v_hi;
    const int y_lo = x1 + 1, y_hi = y_lo + k + 1;
    const int x2 = y_hi;

    enum Role { C1, C2, V, Y, X1, X2 };
    const auto role = [&](int p) {
        if (p < c1_hi) return C1;
        if (p < c2_hi) return C2;
        if (p < v_hi) return V;
        if (p == x1) return X1;
        if (p < y_hi) return Y;
        return X2;
    };

    PreferenceProfile prof(n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            std::int64_t value = 0;
            const Role rp = role(p), rq = role(q);
            const auto pair_is = [&](Role x, Role y) {
                return (rp == x && rq == y) || (rp == y && rq == x);
            };
            if (pair_is(C1, C1)) value = 0;
            else if (pair_is(C1, C2)) value = -big;
            else if (pair_is(C1, V)) value = -1;
            else if (pair_is(C1, Y)) value = 0;
            else if (pair_is(C1, X1)) value = 1;
            else if (pair_is(C1, X2)) value = -1;
            else if (pair_is(C2, C2)) value = 0;
            else if (pair_is(C2, V)) value = 1;
            else if (pair_is(C2, Y)) value = 1;
            else if (pair_is(C2, X1)) value = -big;
            else if (pair_is(C2, X2)) value = -big;
            else if (pair_is(V, V)) value = h.has_edge(p - v_lo, q - v_lo) ? -big : 0;
            else if (pair_is(V, Y)) value = 0;
            else if (pair_is(V, X1)) value = -1;
            else if (pair_is(V, X2)) value = 0;
            else if (pair_is(Y, Y)) value = 0;
            else if (pair_is(Y, X1)) value = -big;
            else if (pair_is(Y, X2)) value = 1;
            else if (pair_is(X1, X2)) value = -big;
            prof.set_value(p, q, Rational(value));
            prof.set_value(q, p, Rational(value));
        }
    }

    std::vector<Edge> edges = clique_edges(0, 2 * k + 2);
    add_star(edges, x1, v_lo, v_hi);
    add_star(edges, x2, y_lo, y_hi);

    HardInstance hard;
    hard.instance = Instance(SeatGraph(n, std::move(edges)), std::move(prof));
    hard.problem = Problem::STA;
    hard.start_arrangement = Arrangement::identity(n);
    hard.k = k;
    hard.gadget_notes = {span_note("block C1", c1_lo, c1_hi), span_note("block C2", c2_lo, c2_hi),
                         span_note("source vertices", v_lo, v_hi),
                         "agent/seat " + std::to_string(x1) + ": first star center",
                         span_note("block Y", y_lo, y_hi),
                         "agent/seat " + std::to_string(x2) + ": second star center",
                         "large penalty value: " + std::to_string(big)};
    return hard;
}

}  // namespace

HardInstance generate(ReductionId id, const SourceProblem& source) {
    switch (id) {
        case ReductionId::StaExchangeRoommates: return gen_sta_exchange_roommates(source);
        case ReductionId::EfaTriangles: return gen_efa_triangles(source);
        case ReductionId::EfaCliqueIs: return gen_efa_clique_is(source);
        case ReductionId::Efa3Partition: return gen_efa_3partition(source);
        case ReductionId::MwaSpanning: return gen_spanning(source, false);
        case ReductionId::MuaSpanningRegular: return gen_spanning(source, true);
        case ReductionId::MwaKClique: return gen_mwa_kclique(source);
        case ReductionId::MuaPartition: return gen_mua_partition(source);
        case ReductionId::EfaPartition: return gen_efa_partition(source);
        case ReductionId::LocalStaIndependentSet: return gen_local_sta(source);
    }
    throw ArgumentError("unknown reduction id");
}

Instance pof_unbounded(std::int64_t x, std::int64_t y) {
    if (!(x >= y && y >= 1)) throw ArgumentError("parameters must satisfy x >= y >= 1");
    PreferenceProfile prof(4);
    prof.set_value(0, 2, Rational(x));
    prof.set_value(1, 3, Rational(x));
    prof.set_value(2, 1, Rational(x));
    prof.set_value(3, 0, Rational(x));
    prof.set_value(0, 1, Rational(y));
    prof.set_value(1, 0, Rational(y));
    prof.set_value(2, 3, Rational(y));
    prof.set_value(3, 2, Rational(y));
    return Instance(SeatGraph(4, {{0, 1}, {2, 3}}), std::move(prof));
}

Instance pof_binary(int n) {
    if (n < 2 || n % 2 != 0) throw ArgumentError("clique size n must be even and at least 2");
    // Agents 0..n-1 form a mutual clique; agents n..2n-1 a one-way cycle.
    PreferenceProfile prof(2 * n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p != q) prof.set_value(p, q, Rational(1));
        }
    }
    for (int i = 0; i < n; ++i) {
        prof.set_value(n + i, n + (i + 1) % n, Rational(1));
    }
    std::vector<Edge> edges = clique_edges(0, n);
    for (int i = 0; i < n / 2; ++i) edges.emplace_back(n + 2 * i, n + 2 * i + 1);
    return Instance(SeatGraph(2 * n, std::move(edges)), std::move(prof));
}

Instance pof_symmetric_triangles(int n) {
    if (n < 3 || n % 3 != 0) throw ArgumentError("clique size n must be divisible by 3");
    // Agents 0..n-1 form a mutual clique; agents n..2n-1 a mutual cycle.
    PreferenceProfile prof(2 * n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p != q) prof.set_value(p, q, Rational(1));
        }
    }
    for (int i = 0; i < n; ++i) {
        const int a = n + i;
        const int b = n + (i + 1) % n;
        prof.set_value(a, b, Rational(1));
        prof.set_value(b, a, Rational(1));
    }
    std::vector<Edge> edges = clique_edges(0, n);
    for (int t = 0; t < n / 3; ++t) {
        const int base = n + 3 * t;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
    }
    return Instance(SeatGraph(2 * n, std::move(edges)), std::move(prof));
}

Instance pof_no_envy_p3() {
    PreferenceProfile prof(3);
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            if (p != q) prof.set_value(p, q, Rational(1));
        }
    }
    return Instance(SeatGraph(3, {{0, 1}, {1, 2}}), std::move(prof));
}

}  // namespace seat::reductions
