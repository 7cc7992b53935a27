#include "seatarrange/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seatarrange/errors.hpp"
#include "seatarrange/evaluate.hpp"
#include "seatarrange/json_io.hpp"
#include "seatarrange/matching.hpp"
#include "seatarrange/oracle.hpp"
#include "seatarrange/param.hpp"
#include "seatarrange/polysolve.hpp"
#include "seatarrange/reductions.hpp"

namespace seat::cli {

namespace {

using nlohmann::ordered_json;
using oracle::Problem;

constexpr long long kVcDispatchLimit = 1'000'000;

int enumeration_cap() {
    const char* s = std::getenv("SEATARRANGE_ENUM_CAP");
    if (s == nullptr || *s == '\0') return oracle::kDefaultEnumerationCap;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s, s + std::string_view(s).size(), value);
    if (ec != std::errc{} || *ptr != '\0' || value < 1) {
        throw ArgumentError("SEATARRANGE_ENUM_CAP must be a positive integer");
    }
    return value;
}

Problem parse_problem(const std::string& name) {
    if (name == "mwa") return Problem::MWA;
    if (name == "mua") return Problem::MUA;
    if (name == "sta") return Problem::STA;
    if (name == "efa") return Problem::EFA;
    throw ArgumentError("unknown problem: " + name);
}

json_io::InstanceDocument load_document(const std::string& input) {
    if (input == "-") return json_io::load_instance(std::cin);
    return json_io::load_instance_file(input);
}

ordered_json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    ordered_json out = ordered_json::array();
    for (const auto& [a, b] : pairs) out.push_back(ordered_json::array({a, b}));
    return out;
}

void emit(std::ostream& out, const ordered_json& report) { out << report.dump() << "\n"; }

// ---- solve dispatch ----

bool placements_within(int n, int k, long long limit) {
    long long product = 1;
    for (int i = 0; i < k; ++i) {
        const long long factor = n - i;
        if (factor <= 1) break;
        if (product > limit / factor) return false;
        product *= factor;
    }
    return true;
}

// The vertex-cover route enumerates P(n, cover size) placements. A maximum
// matching bounds the cover size from below, so the exact cover is only
// computed once that cheap bound already fits the limit.
bool vc_route_affordable(const Instance& instance, long long limit) {
    const int n = instance.size();
    std::vector<matching::WeightedEdge> edges;
    edges.reserve(instance.graph.edges().size());
    for (const auto& [u, v] : instance.graph.edges()) {
        edges.push_back({u, v, Rational(1)});
    }
    const auto mm = matching::max_cardinality_matching(matching::WeightedGraph(n, edges));
    if (!placements_within(n, static_cast<int>(mm.pairs.size()), limit)) return false;
    const int gamma = param::min_vertex_cover(instance.graph).size();
    return placements_within(n, gamma, limit);
}

std::string auto_method(Problem problem, const Instance& instance, int cap) {
    const int n = instance.size();
    const SeatGraph& g = instance.graph;
    switch (problem) {
        case Problem::MWA:
            if (g.components_at_most(2)) return "components2";
            if (vc_route_affordable(instance, kVcDispatchLimit)) return "vc";
            if (n <= cap) return "brute";
            break;
        case Problem::MUA:
            if (g.components_at_most(2)) return "components2";
            if (n <= cap) return "brute";
            break;
        case Problem::STA:
            if (instance.profile.classify().symmetric &&
                vc_route_affordable(instance, kVcDispatchLimit)) {
                return "vc";
            }
            if (n <= cap) return "brute";
            break;
        case Problem::EFA: {
            if (g.is_edge_only()) return "edge-efa";
            if (g.components_at_most(2)) {
                const auto flags = instance.profile.classify();
                if (flags.symmetric) return "sym-efa";
                if (flags.strict || flags.positive) return "strict-pos-efa";
            }
            if (n <= cap) return "brute";
            break;
        }
    }
    throw BudgetError("no exact method fits this instance within budget; "
                      "raise SEATARRANGE_ENUM_CAP to force enumeration");
}

oracle::SolveReport run_method(const std::string& method, Problem problem,
                               const Instance& instance, int cap) {
    if (method == "brute") return oracle::brute_solve(problem, instance, cap);
    if (method == "components2") {
        if (problem == Problem::MWA) return polysolve::mwa_small_components(instance);
        if (problem == Problem::MUA) return polysolve::mua_small_components(instance);
        throw ArgumentError("method components2 applies to problems mwa and mua");
    }
    if (method == "vc") {
        if (problem == Problem::MWA) return param::mwa_vertex_cover(instance);
        if (problem == Problem::STA) return param::sta_symmetric(instance);
        throw ArgumentError("method vc applies to problems mwa and sta");
    }
    if (method == "edge-efa" || method == "sym-efa" || method == "strict-pos-efa") {
        if (problem != Problem::EFA) {
            throw ArgumentError("method " + method + " applies to problem efa");
        }
        if (method == "edge-efa") return polysolve::efa_edge_graph(instance);
        if (method == "sym-efa") return polysolve::efa_symmetric_small_components(instance);
        return polysolve::efa_strict_or_positive(instance);
    }
    throw ArgumentError("unknown method: " + method);
}

int cmd_solve(const std::string& problem_name_str, const std::string& method_flag,
              const std::string& input, std::ostream& out) {
    const auto doc = load_document(input);
    const Problem problem = parse_problem(problem_name_str);
    const int cap = enumeration_cap();
    const std::string method =
        method_flag == "auto" ? auto_method(problem, doc.instance, cap) : method_flag;
    const oracle::SolveReport result = run_method(method, problem, doc.instance, cap);

    ordered_json report;
    report["problem"] = oracle::problem_name(problem);
    report["method"] = result.method;
    report["feasible"] = result.feasible;
    if (result.arrangement) report["arrangement"] = result.arrangement->seat_of();
    if (result.objective) {
        report[problem == Problem::MWA ? "welfare" : "maximin"] = result.objective->to_string();
    }
    emit(out, report);
    return result.feasible ? 0 : 1;
}

// ---- check ----

int cmd_check(const std::string& input, std::ostream& out) {
    const auto doc = load_document(input);
    if (!doc.arrangement) throw ArgumentError("document carries no arrangement to check");
    const Instance& instance = doc.instance;
    const Arrangement& arrangement = *doc.arrangement;

    ordered_json utilities = ordered_json::array();
    for (int p = 0; p < instance.size(); ++p) {
        utilities.push_back(utility(instance, arrangement, p).to_string());
    }
    const auto blocking = blocking_pairs(instance, arrangement);
    const auto envy = envy_pairs(instance, arrangement);

    ordered_json report;
    report["utilities"] = std::move(utilities);
    report["welfare"] = social_welfare(instance, arrangement).to_string();
    report["blocking_pairs"] = pairs_json(blocking);
    report["envy_pairs"] = pairs_json(envy);
    report["stable"] = blocking.empty();
    report["envy_free"] = envy.empty();
    emit(out, report);
    return 0;
}

// ---- localsearch ----

int cmd_localsearch(const std::string& input, std::optional<int> k_flag, std::ostream& out) {
    const auto doc = load_document(input);
    int k = 0;
    if (k_flag) {
        k = *k_flag;
    } else if (doc.metadata.k) {
        k = *doc.metadata.k;
    } else {
        throw ArgumentError("no swap budget: pass --k or set metadata.k");
    }
    const Arrangement* start = nullptr;
    if (doc.metadata.start_arrangement) {
        start = &*doc.metadata.start_arrangement;
    } else if (doc.arrangement) {
        start = &*doc.arrangement;
    } else {
        throw ArgumentError("document carries no start arrangement");
    }
    const auto plan = param::local_k_sta(doc.instance, *start, k);

    ordered_json report;
    report["k"] = k;
    report["feasible"] = plan.has_value();
    if (plan) {
        report["arrangement"] = plan->target.seat_of();
        report["swaps"] = pairs_json(plan->transpositions);
        report["distance"] = static_cast<int>(plan->transpositions.size());
    }
    emit(out, report);
    return plan ? 0 : 1;
}

// ---- metrics ----

int cmd_metrics(const std::string& kind, const std::string& input, std::ostream& out) {
    const auto doc = load_document(input);
    const int cap = enumeration_cap();
    const oracle::PriceReport price = kind == "pof"
                                          ? oracle::price_of_fairness(doc.instance, cap)
                                          : oracle::price_of_stability(doc.instance, cap);
    std::string value;
    switch (price.category) {
        case oracle::PriceCategory::Value: value = price.value->to_string(); break;
        case oracle::PriceCategory::Undefined: value = "undefined"; break;
        case oracle::PriceCategory::Unbounded: value = "unbounded"; break;
    }
    ordered_json report;
    report[kind] = value;
    if (price.witness_optimal) {
        report["optimal"] = price.witness_optimal->seat_of();
        report["optimal_welfare"] = social_welfare(doc.instance, *price.witness_optimal).to_string();
    }
    if (price.witness_constrained) {
        report["constrained"] = price.witness_constrained->seat_of();
        report["constrained_welfare"] =
            social_welfare(doc.instance, *price.witness_constrained).to_string();
    }
    emit(out, report);
    return price.category == oracle::PriceCategory::Undefined ? 1 : 0;
}

// ---- gen ----

reductions::GraphSource parse_graph_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    reductions::GraphSource g;
    try {
        std::size_t used = 0;
        g.vertices = std::stoi(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
        throw ArgumentError("graph spec must start with a vertex count: " + spec);
    }
    if (colon == std::string::npos) return g;
    std::stringstream rest(spec.substr(colon + 1));
    std::string token;
    while (std::getline(rest, token, ',')) {
        if (token.empty()) continue;
        const auto dash = token.find('-');
        if (dash == std::string::npos) {
            throw ArgumentError("graph edge must look like u-v: " + token);
        }
        try {
            g.edges.emplace_back(std::stoi(token.substr(0, dash)),
                                 std::stoi(token.substr(dash + 1)));
        } catch (const std::exception&) {
            throw ArgumentError("graph edge must look like u-v: " + token);
        }
    }
    return g;
}

std::vector<std::int64_t> parse_values_csv(const std::string& csv) {
    std::vector<std::int64_t> values;
    std::stringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ArgumentError("values must be a comma-separated integer list: " + token);
        }
    }
    return values;
}

std::vector<std::vector<int>> parse_ranks_spec(const std::string& spec) {
    std::vector<std::vector<int>> rows;
    std::stringstream in(spec);
    std::string row;
    while (std::getline(in, row, ';')) {
        std::vector<int> parsed;
        std::stringstream row_in(row);
        std::string token;
        while (std::getline(row_in, token, ',')) {
            try {
                std::size_t used = 0;
                parsed.push_back(std::stoi(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ArgumentError("ranks must be integers: " + token);
            }
        }
        rows.push_back(std::move(parsed));
    }
    return rows;
}

struct GenFlags {
    std::string reduction;
    std::string family;
    std::string graph;
    std::string pattern;
    std::string values;
    std::string ranks;
    std::string name;
    std::string out_path;
    std::optional<int> k;
    std::optional<std::int64_t> bound;
    std::optional<std::int64_t> x;
    std::optional<std::int64_t> y;
    std::optional<int> n;
};

template <typename T>
const T& need(const std::optional<T>& flag, const char* what) {
    if (!flag) throw ArgumentError(std::string("this generator requires ") + what);
    return *flag;
}

const std::string& need(const std::string& flag, const char* what) {
    if (flag.empty()) throw ArgumentError(std::string("this generator requires ") + what);
    return flag;
}

reductions::SourceProblem build_source(reductions::ReductionId id, const GenFlags& flags) {
    using reductions::ReductionId;
    using reductions::SourceProblem;
    switch (id) {
        case ReductionId::StaExchangeRoommates:
            return SourceProblem::roommates(parse_ranks_spec(need(flags.ranks, "--ranks")));
        case ReductionId::EfaTriangles:
            return SourceProblem::triangles(parse_graph_spec(need(flags.graph, "--graph")));
        case ReductionId::EfaCliqueIs:
            return SourceProblem::k_clique(parse_graph_spec(need(flags.graph, "--graph")),
                                           need(flags.k, "--k"));
        case ReductionId::Efa3Partition:
            return SourceProblem::three_partition(parse_values_csv(need(flags.values, "--values")),
                                                  need(flags.bound, "--bound"));
        case ReductionId::MwaSpanning:
        case ReductionId::MuaSpanningRegular:
            return SourceProblem::spanning(parse_graph_spec(need(flags.pattern, "--pattern")),
                                           parse_graph_spec(need(flags.graph, "--graph")));
        case ReductionId::MwaKClique:
            return SourceProblem::k_clique(parse_graph_spec(need(flags.graph, "--graph")),
                                           need(flags.k, "--k"));
        case ReductionId::MuaPartition:
        case ReductionId::EfaPartition:
            return SourceProblem::partition(parse_values_csv(need(flags.values, "--values")));
        case ReductionId::LocalStaIndependentSet:
            return SourceProblem::independent_set(parse_graph_spec(need(flags.graph, "--graph")),
                                                  need(flags.k, "--k"));
    }
    throw ArgumentError("unknown reduction id");
}

int cmd_gen(const GenFlags& flags, std::ostream& out) {
    if (flags.reduction.empty() == flags.family.empty()) {
        throw ArgumentError("pass exactly one of --reduction and --family");
    }
    json_io::InstanceDocument doc;
    if (!flags.reduction.empty()) {
        const auto id = reductions::parse_reduction(flags.reduction);
        if (!id) throw ArgumentError("unknown reduction: " + flags.reduction);
        reductions::HardInstance hard = reductions::generate(*id, build_source(*id, flags));
        doc.instance = std::move(hard.instance);
        doc.metadata.name = flags.name.empty() ? flags.reduction : flags.name;
        doc.metadata.problem = oracle::problem_name(hard.problem);
        doc.metadata.target = hard.target;
        doc.metadata.k = hard.k;
        doc.metadata.start_arrangement = hard.start_arrangement;
    } else {
        const std::string& family = flags.family;
        if (family == "pof_unbounded") {
            doc.instance = reductions::pof_unbounded(need(flags.x, "--x"), need(flags.y, "--y"));
        } else if (family == "pof_binary") {
            doc.instance = reductions::pof_binary(need(flags.n, "--n"));
        } else if (family == "pof_symmetric_triangles") {
            doc.instance = reductions::pof_symmetric_triangles(need(flags.n, "--n"));
        } else if (family == "pof_no_envy_p3") {
            doc.instance = reductions::pof_no_envy_p3();
        } else {
            throw ArgumentError("unknown family: " + family);
        }
        doc.metadata.name = flags.name.empty() ? family : flags.name;
    }
    const std::string text = json_io::save_instance(doc);
    (void)json_io::load_instance(text);  // every generated document must reload cleanly
    if (flags.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(flags.out_path, std::ios::trunc);
        if (!file) throw ArgumentError("cannot open file for writing: " + flags.out_path);
        file << text;
    }
    return 0;
}

// ---- selftest ----

int cmd_selftest(std::ostream& out, std::ostream& err) {
    using reductions::ReductionId;
    using reductions::SourceProblem;
    const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"pof_unbounded_mwa_welfare",
         [] {
             const auto report =
                 polysolve::mwa_small_components(reductions::pof_unbounded(5, 1));
             return report.objective == Rational(10);
         }},
        {"p3_check_envy",
         [] {
             const Instance instance = reductions::pof_no_envy_p3();
             const Arrangement arrangement = Arrangement::identity(3);
             const auto envy = envy_pairs(instance, arrangement);
             return is_stable(instance, arrangement) && envy.size() == 2 &&
                    envy[0] == std::make_pair(0, 1) && envy[1] == std::make_pair(2, 1);
         }},
        {"pof_binary4_value",
         [] {
             const auto price = oracle::price_of_fairness(reductions::pof_binary(4));
             return price.category == oracle::PriceCategory::Value &&
                    price.value == Rational(7, 4);
         }},
        {"efa_triangles_k3",
         [] {
             const auto hard = reductions::generate(
                 ReductionId::EfaTriangles,
                 SourceProblem::triangles({3, {{0, 1}, {0, 2}, {1, 2}}}));
             return oracle::brute_solve(Problem::EFA, hard.instance).feasible;
         }},
        {"mwa_kclique_triangle",
         [] {
             const auto hard = reductions::generate(
                 ReductionId::MwaKClique,
                 SourceProblem::k_clique({3, {{0, 1}, {0, 2}, {1, 2}}}, 3));
             const auto report = oracle::brute_solve(Problem::MWA, hard.instance);
             return hard.target == Rational(6) && report.objective == hard.target;
         }},
        {"mua_partition_small",
         [] {
             const auto hard = reductions::generate(ReductionId::MuaPartition,
                                                    SourceProblem::partition({1, 1, 2, 2}));
             const auto report = oracle::brute_solve(Problem::MUA, hard.instance);
             return report.objective == Rational(3);
         }},
        {"roommates_rank_ties",
         [] {
             const std::vector<std::vector<int>> ranks(4, std::vector<int>(4, 0));
             const auto source = SourceProblem::roommates(ranks);
             const auto hard =
                 reductions::generate(ReductionId::StaExchangeRoommates, source);
             return oracle::brute_solve(Problem::STA, hard.instance).feasible &&
                    reductions::solve_source(source).yes;
         }},
        {"schema_duplicate_edge",
         [] {
             const std::string text = R"({"format":1,"agents":2,
                 "preferences":[[0,1],[1,0]],
                 "seat_graph":{"vertices":2,"edges":[[0,1],[1,0]]}})";
             try {
                 (void)json_io::load_instance(text);
             } catch (const SchemaError& e) {
                 return std::string(e.what()).find("duplicate edge") != std::string::npos;
             }
             return false;
         }},
        {"auto_matches_brute",
         [] {
             const Instance instance = reductions::pof_unbounded(5, 1);
             const auto method = auto_method(Problem::MWA, instance, 10);
             const auto fast = run_method(method, Problem::MWA, instance, 10);
             const auto slow = oracle::brute_solve(Problem::MWA, instance);
             return method == "components2" && fast.objective == slow.objective;
         }},
        {"document_roundtrip_bytes",
         [] {
             const auto hard = reductions::generate(ReductionId::MuaPartition,
                                                    SourceProblem::partition({1, 1, 2, 2}));
             json_io::InstanceDocument doc;
             doc.instance = hard.instance;
             doc.metadata.name = "roundtrip";
             doc.metadata.problem = "mua";
             doc.metadata.target = hard.target;
             const std::string text = json_io::save_instance(doc);
             return json_io::save_instance(json_io::load_instance(text)) == text;
         }},
    };
    for (const auto& [name, check] : checks) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            err << "selftest " << name << " raised: " << e.what() << "\n";
        }
        if (!ok) {
            ordered_json report;
            report["selftest"] = "fail";
            report["check"] = name;
            emit(out, report);
            return 1;
        }
    }
    ordered_json report;
    report["selftest"] = "ok";
    report["checks"] = static_cast<int>(checks.size());
    emit(out, report);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solvers, verifiers, and instance generators for seat arrangements"};
    app.require_subcommand(1);

    std::string solve_problem;
    std::string solve_method = "auto";
    std::string solve_input;
    auto* solve = app.add_subcommand("solve", "solve an optimization or existence problem");
    solve->add_option("--problem", solve_problem, "problem to solve")
        ->required()
        ->check(CLI::IsMember({"mwa", "mua", "sta", "efa"}));
    solve
        ->add_option("--method", solve_method, "algorithm to use (auto picks the cheapest fit)")
        ->check(CLI::IsMember({"auto", "brute", "components2", "vc", "edge-efa", "sym-efa",
                               "strict-pos-efa"}));
    solve->add_option("input", solve_input, "instance file, or - for stdin")->required();

    std::string check_input;
    auto* check = app.add_subcommand("check", "evaluate the arrangement embedded in a document");
    check->add_option("input", check_input, "instance file, or - for stdin")->required();

    std::string ls_input;
    int ls_k = -1;
    auto* localsearch =
        app.add_subcommand("localsearch", "find a stable arrangement within k swaps of a start");
    auto* ls_k_opt = localsearch->add_option("--k", ls_k, "swap budget (defaults to metadata.k)");
    localsearch->add_option("input", ls_input, "instance file, or - for stdin")->required();

    std::string metrics_kind;
    std::string metrics_input;
    auto* metrics = app.add_subcommand("metrics", "price of stability or fairness with witnesses");
    metrics->add_option("--kind", metrics_kind, "which price to compute")
        ->required()
        ->check(CLI::IsMember({"pof", "pos"}));
    metrics->add_option("input", metrics_input, "instance file, or - for stdin")->required();

    GenFlags gen_flags;
    int gen_k = 0;
    std::int64_t gen_bound = 0, gen_x = 0, gen_y = 0;
    int gen_n = 0;
    auto* gen = app.add_subcommand("gen", "generate a hardness gadget or metric family instance");
    gen->add_option("--reduction", gen_flags.reduction, "reduction gadget to generate");
    gen->add_option("--family", gen_flags.family, "metric family to generate");
    gen->add_option("--graph", gen_flags.graph, "source graph, e.g. 5:0-1,1-2");
    gen->add_option("--pattern", gen_flags.pattern, "pattern graph for spanning reductions");
    gen->add_option("--values", gen_flags.values, "source multiset, e.g. 3,3,2,4");
    gen->add_option("--ranks", gen_flags.ranks, "rank rows, e.g. 0,0,1,2;1,0,0,2;...");
    gen->add_option("--name", gen_flags.name, "metadata name override");
    gen->add_option("--out", gen_flags.out_path, "output file (default stdout)");
    auto* gen_k_opt = gen->add_option("--k", gen_k, "parameter k");
    auto* gen_bound_opt = gen->add_option("--bound", gen_bound, "per-triple bound");
    auto* gen_x_opt = gen->add_option("--x", gen_x, "family parameter x");
    auto* gen_y_opt = gen->add_option("--y", gen_y, "family parameter y");
    auto* gen_n_opt = gen->add_option("--n", gen_n, "family parameter n");

    auto* selftest = app.add_subcommand("selftest", "run the embedded golden corpus");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_problem, solve_method, solve_input, out);
        if (check->parsed()) return cmd_check(check_input, out);
        if (localsearch->parsed()) {
            std::optional<int> k;
            if (ls_k_opt->count() > 0) k = ls_k;
            return cmd_localsearch(ls_input, k, out);
        }
        if (metrics->parsed()) return cmd_metrics(metrics_kind, metrics_input, out);
        if (gen->parsed()) {
            if (gen_k_opt->count() > 0) gen_flags.k = gen_k;
            if (gen_bound_opt->count() > 0) gen_flags.bound = gen_bound;
            if (gen_x_opt->count() > 0) gen_flags.x = gen_x;
            if (gen_y_opt->count() > 0) gen_flags.y = gen_y;
            if (gen_n_opt->count() > 0) gen_flags.n = gen_n;
            return cmd_gen(gen_flags, out);
        }
        if (selftest->parsed()) return cmd_selftest(out, err);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace seat::cli
