#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "seatarrange/evaluate.hpp"
#include "seatarrange/json_io.hpp"
#include "seatarrange/matching.hpp"
#include "seatarrange/oracle.hpp"
#include "seatarrange/param.hpp"
#include "seatarrange/reductions.hpp"

using namespace seat;

namespace {

Instance random_instance(std::mt19937& rng, int n, bool symmetric) {
    std::uniform_int_distribution<int> value(-5, 5);
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng) < 50) edges.emplace_back(u, v);
        }
    }
    PreferenceProfile profile(n);
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Rational forward(value(rng));
            profile.set_value(p, q, forward);
            profile.set_value(q, p, symmetric ? forward : Rational(value(rng)));
        }
    }
    return Instance(SeatGraph(n, std::move(edges)), std::move(profile));
}

matching::WeightedGraph random_complete_weighted(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> value(-9, 9);
    std::vector<matching::WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back({u, v, Rational(value(rng))});
        }
    }
    return matching::WeightedGraph(n, std::move(edges));
}

void BM_BruteWelfare(benchmark::State& state) {
    std::mt19937 rng(11);
    const Instance instance = random_instance(rng, static_cast<int>(state.range(0)), false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::brute_solve(oracle::Problem::MWA, instance));
    }
}
BENCHMARK(BM_BruteWelfare)->DenseRange(5, 8);

void BM_VertexCoverWelfare(benchmark::State& state) {
    // Clique-seat gadget: three clique seats plus a growing tail of isolated
    // seats keeps the cover size fixed while the agent count scales.
    const int vertices = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < vertices; ++u) {
        for (int v = u + 1; v < vertices; ++v) {
            if ((u + v) % 3 != 0) edges.emplace_back(u, v);
        }
    }
    const auto hard = reductions::generate(
        reductions::ReductionId::MwaKClique,
        reductions::SourceProblem::k_clique(reductions::GraphSource{vertices, edges}, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(param::mwa_vertex_cover(hard.instance));
    }
}
BENCHMARK(BM_VertexCoverWelfare)->DenseRange(6, 14, 2);

void BM_WeightedPerfectMatching(benchmark::State& state) {
    std::mt19937 rng(13);
    const auto graph = random_complete_weighted(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(matching::max_weight_perfect_matching(graph));
    }
}
BENCHMARK(BM_WeightedPerfectMatching)->DenseRange(8, 16, 2);

void BM_BoundedSwapGadget(benchmark::State& state) {
    // Path source of growing length; the gadget has 3k + 5 extra agents.
    const int vertices = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
    const auto hard = reductions::generate(
        reductions::ReductionId::LocalStaIndependentSet,
        reductions::SourceProblem::independent_set(reductions::GraphSource{vertices, edges}, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            param::local_k_sta(hard.instance, *hard.start_arrangement, *hard.k));
    }
}
BENCHMARK(BM_BoundedSwapGadget)->DenseRange(5, 8);

void BM_DocumentRoundTrip(benchmark::State& state) {
    std::mt19937 rng(17);
    json_io::InstanceDocument doc;
    doc.instance = random_instance(rng, static_cast<int>(state.range(0)), true);
    doc.arrangement = Arrangement::identity(doc.instance.size());
    doc.metadata.name = "bench";
    const std::string text = json_io::save_instance(doc);
    for (auto _ : state) {
        benchmark::DoNotOptimize(json_io::save_instance(json_io::load_instance(text)));
    }
}
BENCHMARK(BM_DocumentRoundTrip)->DenseRange(8, 32, 8);

}  // namespace

BENCHMARK_MAIN();
