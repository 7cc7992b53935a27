#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "seatarrange/instance.hpp"
#include "seatarrange/preferences.hpp"
#include "seatarrange/seat_graph.hpp"

namespace support {

inline std::int64_t rand_int(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline seat::PreferenceProfile random_profile(std::mt19937& rng, int n, std::int64_t lo,
                                              std::int64_t hi, bool symmetric) {
    seat::PreferenceProfile profile(n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const seat::Rational v(rand_int(rng, lo, hi));
            profile.set_value(p, q, v);
            profile.set_value(q, p, symmetric ? v : seat::Rational(rand_int(rng, lo, hi)));
        }
    }
    return profile;
}

// Distinct values across all ordered pairs, shuffled; spans lo upward.
inline seat::PreferenceProfile random_strict_profile(std::mt19937& rng, int n, std::int64_t lo) {
    std::vector<std::int64_t> values(static_cast<std::size_t>(n) * (n - 1));
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = lo + static_cast<std::int64_t>(i);
    }
    std::shuffle(values.begin(), values.end(), rng);
    seat::PreferenceProfile profile(n);
    std::size_t next = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p != q) profile.set_value(p, q, seat::Rational(values[next++]));
        }
    }
    return profile;
}

inline seat::SeatGraph random_graph(std::mt19937& rng, int n, int edge_percent) {
    std::vector<seat::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rand_int(rng, 0, 99) < edge_percent) edges.emplace_back(u, v);
        }
    }
    return seat::SeatGraph(n, std::move(edges));
}

// Disjoint edges and isolated vertices over a shuffled vertex set.
inline seat::SeatGraph random_components2_graph(std::mt19937& rng, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<seat::Edge> edges;
    for (std::size_t i = 0; i + 1 < order.size();) {
        if (rand_int(rng, 0, 1) == 0) {
            edges.emplace_back(order[i], order[i + 1]);
            i += 2;
        } else {
            i += 1;
        }
    }
    return seat::SeatGraph(n, std::move(edges));
}

// Perfect matching seat graph on a shuffled even vertex set.
inline seat::SeatGraph random_edge_only_graph(std::mt19937& rng, int half) {
    const int n = 2 * half;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<seat::Edge> edges;
    for (int i = 0; i < half; ++i) {
        edges.emplace_back(order[static_cast<std::size_t>(2 * i)],
                           order[static_cast<std::size_t>(2 * i + 1)]);
    }
    return seat::SeatGraph(n, std::move(edges));
}

}  // namespace support
