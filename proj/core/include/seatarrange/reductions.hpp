#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seatarrange/arrangement.hpp"
#include "seatarrange/instance.hpp"
#include "seatarrange/oracle.hpp"

namespace seat::reductions {

// A plain graph payload for source problems (not a seat graph).
struct GraphSource {
    int vertices = 0;
    std::vector<Edge> edges;
};

// Inputs to the instance generators, one payload shape per source kind.
struct SourceProblem {
    enum class Kind {
        KClique,
        IndependentSet,
        Partition,
        ThreePartition,
        PartitionIntoTriangles,
        SpanningSubgraphIso,
        ExchangeRoommates,
    };

    Kind kind = Kind::KClique;
    GraphSource graph;    // KClique, IndependentSet, PartitionIntoTriangles; host for SpanningSubgraphIso
    GraphSource pattern;  // SpanningSubgraphIso only: the graph to embed (becomes the seat graph)
    int k = 0;            // KClique, IndependentSet
    std::vector<std::int64_t> values;  // Partition, ThreePartition
    std::int64_t bound = 0;            // ThreePartition per-triple sum B
    // ExchangeRoommates: rank[p][q] with 0 = most preferred; ties share a rank;
    // the diagonal is ignored. Lists are complete.
    std::vector<std::vector<int>> ranks;

    static SourceProblem k_clique(GraphSource g, int k);
    static SourceProblem independent_set(GraphSource g, int k);
    // Partition here asks for two halves of equal cardinality and equal sum
    // (that is the variant the star gadgets decide; see solve_source).
    static SourceProblem partition(std::vector<std::int64_t> values);
    static SourceProblem three_partition(std::vector<std::int64_t> values, std::int64_t bound);
    static SourceProblem triangles(GraphSource g);
    static SourceProblem spanning(GraphSource pattern, GraphSource host);
    static SourceProblem roommates(std::vector<std::vector<int>> ranks);
};

struct SourceAnswer {
    bool yes = false;
    // Kind-specific witness rows: chosen subset (KClique/IndependentSet), two
    // halves (Partition), triples (ThreePartition), triangles, the bijection
    // pattern-vertex -> host-vertex as one row (SpanningSubgraphIso), matched
    // pairs (ExchangeRoommates). Empty when the answer is no.
    std::vector<std::vector<int>> witness;
};

// Exhaustive source-problem decision; throws BudgetError beyond small sizes
// (graphs <= 8 vertices, multisets <= 12 elements, roommates <= 8 agents).
SourceAnswer solve_source(const SourceProblem& source);

enum class ReductionId {
    StaExchangeRoommates,
    EfaTriangles,
    EfaCliqueIs,
    Efa3Partition,
    MwaSpanning,
    MuaSpanningRegular,
    MwaKClique,
    MuaPartition,
    EfaPartition,
    LocalStaIndependentSet,
};

std::string reduction_name(ReductionId id);
std::optional<ReductionId> parse_reduction(const std::string& name);

// A generated hard instance bundled with its decision data.
struct HardInstance {
    Instance instance;
    oracle::Problem problem = oracle::Problem::MWA;
    std::optional<Rational> target;            // decision threshold where defined
    std::optional<Arrangement> start_arrangement;  // local search only
    std::optional<int> k;                      // swap budget, local search only
    std::vector<std::string> gadget_notes;     // agent/seat role labels
};

// Builds the instance for the given reduction from a matching source payload.
// Side-condition violations raise ArgumentError naming the requirement.
HardInstance generate(ReductionId id, const SourceProblem& source);

// Price-of-fairness example families.
Instance pof_unbounded(std::int64_t x, std::int64_t y);       // x >= y >= 1
Instance pof_binary(int n);                                   // n even, >= 2
Instance pof_symmetric_triangles(int n);                      // n divisible by 3, >= 3
Instance pof_no_envy_p3();

}  // namespace seat::reductions
