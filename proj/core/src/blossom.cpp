// Maximum-weight perfect matching on general graphs: primal-dual blossom
// search with exact rational dual variables. The kernel works on a complete
// graph with strictly positive weights (then a maximum-weight matching is
// necessarily perfect); the public wrapper completes arbitrary graphs with
// low-weight filler edges and shifts real weights far above them, which
// preserves the argmax over perfect matchings and exposes infeasibility as a
// filler edge in the optimum.

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "seatarrange/errors.hpp"
#include "seatarrange/matching.hpp"

namespace seat::matching {
namespace {

struct BEdge {
    int u = 0;
    int v = 0;
    Rational w;  // 0 means "no usable edge" for blossom bookkeeping
};

// Vertices are 1..n; blossom pseudo-vertices take ids n+1..n_x. Index 0 is the
// null sentinel throughout (match[x] == 0 means exposed).
class WeightedBlossom {
public:
    explicit WeightedBlossom(const std::vector<std::vector<Rational>>& weights)
        : n_(static_cast<int>(weights.size())), cap_(2 * n_ + 8) {
        g_.assign(static_cast<std::size_t>(cap_), std::vector<BEdge>(static_cast<std::size_t>(cap_)));
        for (int u = 1; u <= n_; ++u) {
            for (int v = 1; v <= n_; ++v) {
                g_[idx(u)][idx(v)] = BEdge{u, v, u == v ? Rational(0)
                                                        : weights[idx(u) - 1][idx(v) - 1]};
            }
        }
        lab_.assign(static_cast<std::size_t>(cap_), Rational(0));
        match_.assign(static_cast<std::size_t>(cap_), 0);
        slack_.assign(static_cast<std::size_t>(cap_), 0);
        st_.assign(static_cast<std::size_t>(cap_), 0);
        pa_.assign(static_cast<std::size_t>(cap_), 0);
        side_.assign(static_cast<std::size_t>(cap_), -1);
        vis_.assign(static_cast<std::size_t>(cap_), 0);
        flower_.assign(static_cast<std::size_t>(cap_), {});
        flower_from_.assign(static_cast<std::size_t>(cap_),
                            std::vector<int>(static_cast<std::size_t>(n_) + 1, 0));
    }

    // match result, 1-based; every vertex matched when the preconditions hold.
    std::vector<int> solve() {
        n_x_ = n_;
        for (int u = 0; u <= n_; ++u) st_[idx(u)] = u;
        Rational w_max(0);
        for (int u = 1; u <= n_; ++u) {
            for (int v = 1; v <= n_; ++v) {
                flower_from_[idx(u)][idx(v)] = (u == v) ? u : 0;
                w_max = std::max(w_max, g_[idx(u)][idx(v)].w);
            }
        }
        for (int u = 1; u <= n_; ++u) lab_[idx(u)] = w_max;
        while (grow()) {
        }
        return match_;
    }

private:
    static std::size_t idx(int x) { return static_cast<std::size_t>(x); }

    Rational e_delta(const BEdge& e) const {
        return lab_[idx(e.u)] + lab_[idx(e.v)] - g_[idx(e.u)][idx(e.v)].w -
               g_[idx(e.u)][idx(e.v)].w;
    }

    void update_slack(int u, int x) {
        if (!slack_[idx(x)] || e_delta(g_[idx(u)][idx(x)]) < e_delta(g_[idx(slack_[idx(x)])][idx(x)])) {
            slack_[idx(x)] = u;
        }
    }

    void set_slack(int x) {
        slack_[idx(x)] = 0;
        for (int u = 1; u <= n_; ++u) {
            if (g_[idx(u)][idx(x)].w > Rational(0) && st_[idx(u)] != x && side_[idx(st_[idx(u)])] == 0) {
                update_slack(u, x);
            }
        }
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int leaf : flower_[idx(x)]) q_push(leaf);
        }
    }

    void set_st(int x, int b) {
        st_[idx(x)] = b;
        if (x > n_) {
            for (int leaf : flower_[idx(x)]) set_st(leaf, b);
        }
    }

    int get_pr(int b, int xr) {
        auto& fl = flower_[idx(b)];
        int pr = static_cast<int>(std::find(fl.begin(), fl.end(), xr) - fl.begin());
        if (pr % 2 == 1) {
            std::reverse(fl.begin() + 1, fl.end());
            return static_cast<int>(fl.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[idx(u)] = g_[idx(u)][idx(v)].v;
        if (u > n_) {
            const BEdge e = g_[idx(u)][idx(v)];
            int xr = flower_from_[idx(u)][idx(e.u)];
            int pr = get_pr(u, xr);
            auto& fl = flower_[idx(u)];
            for (int i = 0; i < pr; ++i) set_match(fl[idx(i)], fl[idx(i ^ 1)]);
            set_match(xr, v);
            std::rotate(fl.begin(), fl.begin() + pr, fl.end());
        }
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[idx(match_[idx(u)])];
            set_match(u, v);
            if (xnv == 0) return;
            set_match(xnv, st_[idx(pa_[idx(xnv)])]);
            u = st_[idx(pa_[idx(xnv)])];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++vis_token_; u != 0 || v != 0; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[idx(u)] == vis_token_) return u;
            vis_[idx(u)] = vis_token_;
            u = st_[idx(match_[idx(u)])];
            if (u != 0) u = st_[idx(pa_[idx(u)])];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[idx(b)] != 0) ++b;
        if (b > n_x_) ++n_x_;
        lab_[idx(b)] = Rational(0);
        side_[idx(b)] = 0;
        match_[idx(b)] = match_[idx(lca)];
        auto& fl = flower_[idx(b)];
        fl.clear();
        fl.push_back(lca);
        for (int x = u, y; x != lca; x = st_[idx(pa_[idx(y)])]) {
            fl.push_back(x);
            fl.push_back(y = st_[idx(match_[idx(x)])]);
            q_push(y);
        }
        std::reverse(fl.begin() + 1, fl.end());
        for (int x = v, y; x != lca; x = st_[idx(pa_[idx(y)])]) {
            fl.push_back(x);
            fl.push_back(y = st_[idx(match_[idx(x)])]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) {
            g_[idx(b)][idx(x)].w = Rational(0);
            g_[idx(x)][idx(b)].w = Rational(0);
        }
        for (int x = 1; x <= n_; ++x) flower_from_[idx(b)][idx(x)] = 0;
        for (int leaf : fl) {
            for (int x = 1; x <= n_x_; ++x) {
                if (g_[idx(b)][idx(x)].w == Rational(0) ||
                    e_delta(g_[idx(leaf)][idx(x)]) < e_delta(g_[idx(b)][idx(x)])) {
                    g_[idx(b)][idx(x)] = g_[idx(leaf)][idx(x)];
                    g_[idx(x)][idx(b)] = g_[idx(x)][idx(leaf)];
                }
            }
            for (int x = 1; x <= n_; ++x) {
                if (flower_from_[idx(leaf)][idx(x)] != 0) flower_from_[idx(b)][idx(x)] = leaf;
            }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        auto& fl = flower_[idx(b)];
        for (int leaf : fl) set_st(leaf, leaf);
        int xr = flower_from_[idx(b)][idx(g_[idx(b)][idx(pa_[idx(b)])].u)];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = fl[idx(i)];
            int xns = fl[idx(i + 1)];
            pa_[idx(xs)] = g_[idx(xns)][idx(xs)].u;
            side_[idx(xs)] = 1;
            side_[idx(xns)] = 0;
            slack_[idx(xs)] = 0;
            set_slack(xns);
            q_push(xns);
        }
        side_[idx(xr)] = 1;
        pa_[idx(xr)] = pa_[idx(b)];
        for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < fl.size(); ++i) {
            side_[idx(fl[i])] = -1;
            set_slack(fl[i]);
        }
        st_[idx(b)] = 0;
    }

    bool on_found_edge(const BEdge& e) {
        int u = st_[idx(e.u)];
        int v = st_[idx(e.v)];
        if (side_[idx(v)] == -1) {
            pa_[idx(v)] = e.u;
            side_[idx(v)] = 1;
            int nu = st_[idx(match_[idx(v)])];
            slack_[idx(v)] = 0;
            slack_[idx(nu)] = 0;
            side_[idx(nu)] = 0;
            q_push(nu);
        } else if (side_[idx(v)] == 0) {
            int lca = get_lca(u, v);
            if (lca == 0) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool grow() {
        std::fill(side_.begin() + 1, side_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x) {
            if (st_[idx(x)] == x && match_[idx(x)] == 0) {
                pa_[idx(x)] = 0;
                side_[idx(x)] = 0;
                q_push(x);
            }
        }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (side_[idx(st_[idx(u)])] == 1) continue;
                for (int v = 1; v <= n_; ++v) {
                    if (g_[idx(u)][idx(v)].w > Rational(0) && st_[idx(u)] != st_[idx(v)]) {
                        if (e_delta(g_[idx(u)][idx(v)]) == Rational(0)) {
                            if (on_found_edge(g_[idx(u)][idx(v)])) return true;
                        } else {
                            update_slack(u, st_[idx(v)]);
                        }
                    }
                }
            }
            std::optional<Rational> d;
            auto relax = [&](const Rational& cand) {
                if (!d || cand < *d) d = cand;
            };
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[idx(b)] == b && side_[idx(b)] == 1) relax(lab_[idx(b)] / Rational(2));
            }
            for (int x = 1; x <= n_x_; ++x) {
                if (st_[idx(x)] == x && slack_[idx(x)] != 0) {
                    if (side_[idx(x)] == -1) {
                        relax(e_delta(g_[idx(slack_[idx(x)])][idx(x)]));
                    } else if (side_[idx(x)] == 0) {
                        relax(e_delta(g_[idx(slack_[idx(x)])][idx(x)]) / Rational(2));
                    }
                }
            }
            for (int u = 1; u <= n_; ++u) {
                if (side_[idx(st_[idx(u)])] == 0) {
                    if (!d || lab_[idx(u)] <= *d) return false;
                    lab_[idx(u)] -= *d;
                } else if (side_[idx(st_[idx(u)])] == 1) {
                    lab_[idx(u)] += *d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[idx(b)] == b && side_[idx(b)] != -1) {
                    if (side_[idx(b)] == 0) {
                        lab_[idx(b)] += *d + *d;
                    } else {
                        lab_[idx(b)] -= *d + *d;
                    }
                }
            }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x) {
                if (st_[idx(x)] == x && slack_[idx(x)] != 0 && st_[idx(slack_[idx(x)])] != x &&
                    e_delta(g_[idx(slack_[idx(x)])][idx(x)]) == Rational(0)) {
                    if (on_found_edge(g_[idx(slack_[idx(x)])][idx(x)])) return true;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[idx(b)] == b && side_[idx(b)] == 1 && lab_[idx(b)] == Rational(0)) {
                    expand_blossom(b);
                }
            }
        }
    }

    int n_;
    int cap_;
    int n_x_ = 0;
    int vis_token_ = 0;
    std::vector<std::vector<BEdge>> g_;
    std::vector<Rational> lab_;
    std::vector<int> match_, slack_, st_, pa_, side_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

// Raw kernel run: nullopt when the graph has no perfect matching; otherwise a
// maximum-weight perfect matching without canonical ordering guarantees.
std::optional<Matching> kernel_perfect(const WeightedGraph& graph) {
    const int n = graph.vertex_count();
    if (n % 2 != 0) return std::nullopt;
    if (n == 0) return Matching{};
    Rational lo = graph.edges().empty() ? Rational(0) : graph.edges().front().weight;
    Rational hi = lo;
    for (const auto& e : graph.edges()) {
        lo = std::min(lo, e.weight);
        hi = std::max(hi, e.weight);
    }
    const Rational spread = hi - lo;
    // Real edges sit at least BIG above every filler edge; a perfect matching
    // avoiding filler always beats one that uses it.
    const Rational big = Rational(n / 2) * spread + Rational(n + 5);
    std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    for (const auto& e : graph.edges()) {
        Rational shifted = e.weight - lo + big;
        w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = shifted;
        w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = shifted;
    }
    for (int v = 0; v < n; ++v) w[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = Rational(0);
    WeightedBlossom solver(w);
    auto match = solver.solve();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
        int v = match[static_cast<std::size_t>(u)];
        if (v == 0) return std::nullopt;  // unreachable for positive complete inputs
        if (v > u) {
            if (!graph.has_edge(u - 1, v - 1)) return std::nullopt;  // filler used: no real PM
            pairs.emplace_back(u - 1, v - 1);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return Matching{std::move(pairs)};
}

// Graph minus two vertices, with a map back to original ids.
WeightedGraph without(const WeightedGraph& g, int a, int b, std::vector<int>& back) {
    back.clear();
    std::vector<int> fwd(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == a || v == b) continue;
        fwd[static_cast<std::size_t>(v)] = static_cast<int>(back.size());
        back.push_back(v);
    }
    std::vector<WeightedEdge> edges;
    for (const auto& e : g.edges()) {
        if (e.u == a || e.u == b || e.v == a || e.v == b) continue;
        edges.push_back({fwd[static_cast<std::size_t>(e.u)], fwd[static_cast<std::size_t>(e.v)], e.weight});
    }
    return WeightedGraph(static_cast<int>(back.size()), std::move(edges));
}

constexpr int kCanonicalLimit = 24;

// Rebuilds the optimum as the lexicographically smallest pair list by fixing
// the cheapest viable partner of the least unmatched vertex and re-solving.
Matching canonical_perfect(const WeightedGraph& graph, const Rational& total) {
    struct Frame {
        WeightedGraph g;
        std::vector<int> back;  // local vertex -> original vertex
    };
    Frame cur;
    cur.g = graph;
    cur.back.resize(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) cur.back[static_cast<std::size_t>(v)] = v;
    Rational remaining = total;
    std::vector<std::pair<int, int>> fixed;
    while (cur.g.vertex_count() > 0) {
        bool advanced = false;
        for (int v = 1; v < cur.g.vertex_count() && !advanced; ++v) {
            if (!cur.g.has_edge(0, v)) continue;
            Rational w = cur.g.weight(0, v);
            std::vector<int> back;
            WeightedGraph sub = without(cur.g, 0, v, back);
            auto opt = kernel_perfect(sub);
            if (!opt) continue;
            if (opt->total_weight(sub) + w == remaining) {
                fixed.emplace_back(cur.back[0], cur.back[static_cast<std::size_t>(v)]);
                remaining -= w;
                std::vector<int> orig_back(back.size());
                for (std::size_t i = 0; i < back.size(); ++i) {
                    orig_back[i] = cur.back[static_cast<std::size_t>(back[i])];
                }
                cur.g = std::move(sub);
                cur.back = std::move(orig_back);
                advanced = true;
            }
        }
        if (!advanced) throw Error("canonicalization lost the optimum");  // invariant
    }
    for (auto& [a, b] : fixed) {
        if (a > b) std::swap(a, b);
    }
    std::sort(fixed.begin(), fixed.end());
    return Matching{std::move(fixed)};
}

struct SizedRaw {
    std::vector<std::pair<int, int>> pairs;  // sorted, real vertices only
    Rational total;
};

// Maximum-weight matching of exactly size s via dummy augmentation: n - 2s
// dummies adjacent to every real vertex at weight 0; a perfect matching of the
// augmented graph restricted to real pairs is a size-s matching.
std::optional<SizedRaw> raw_size(const WeightedGraph& graph, int s) {
    const int n = graph.vertex_count();
    if (2 * s > n) return std::nullopt;
    std::vector<WeightedEdge> edges = graph.edges();
    const int total_vertices = 2 * n - 2 * s;
    for (int d = n; d < total_vertices; ++d) {
        for (int v = 0; v < n; ++v) edges.push_back({v, d, Rational(0)});
    }
    WeightedGraph augmented(total_vertices, std::move(edges));
    auto perfect = kernel_perfect(augmented);
    if (!perfect) return std::nullopt;
    SizedRaw out;
    out.total = Rational(0);
    for (auto [u, v] : perfect->pairs) {
        if (u < n && v < n) {
            out.pairs.emplace_back(u, v);
            out.total += graph.weight(u, v);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

constexpr int kCanonicalSizeLimit = 16;

}  // namespace

std::optional<Matching> max_weight_perfect_matching(const WeightedGraph& graph) {
    auto raw = kernel_perfect(graph);
    if (!raw) return std::nullopt;
    if (graph.vertex_count() > kCanonicalLimit) return raw;
    return canonical_perfect(graph, raw->total_weight(graph));
}

std::optional<Matching> max_weight_matching_of_size(const WeightedGraph& graph, int s) {
    if (s < 0) throw ArgumentError("negative matching size");
    if (s == 0) return Matching{};
    auto best = raw_size(graph, s);
    if (!best) return std::nullopt;
    if (graph.vertex_count() > kCanonicalSizeLimit) return Matching{std::move(best->pairs)};
    // Lexicographic canonicalization: fix the smallest viable pair, re-solve.
    WeightedGraph cur = graph;
    std::vector<int> back(static_cast<std::size_t>(graph.vertex_count()));
    for (int v = 0; v < graph.vertex_count(); ++v) back[static_cast<std::size_t>(v)] = v;
    Rational remaining = best->total;
    int left = s;
    std::vector<std::pair<int, int>> fixed;
    while (left > 0) {
        bool advanced = false;
        for (const auto& e : cur.edges()) {
            std::vector<int> sub_back;
            WeightedGraph sub = without(cur, e.u, e.v, sub_back);
            Rational target = remaining - e.weight;
            bool ok = false;
            if (left == 1) {
                ok = (target == Rational(0));
            } else {
                auto opt = raw_size(sub, left - 1);
                ok = opt && opt->total == target;
            }
            if (!ok) continue;
            fixed.emplace_back(back[static_cast<std::size_t>(e.u)], back[static_cast<std::size_t>(e.v)]);
            remaining = target;
            --left;
            std::vector<int> orig_back(sub_back.size());
            for (std::size_t i = 0; i < sub_back.size(); ++i) {
                orig_back[i] = back[static_cast<std::size_t>(sub_back[i])];
            }
            cur = std::move(sub);
            back = std::move(orig_back);
            advanced = true;
            break;
        }
        if (!advanced) throw Error("size canonicalization lost the optimum");  // invariant
    }
    std::sort(fixed.begin(), fixed.end());
    return Matching{std::move(fixed)};
}

}  // namespace seat::matching
