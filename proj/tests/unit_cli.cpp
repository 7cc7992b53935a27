#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "seatarrange/cli.hpp"
#include "seatarrange/json_io.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = seat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "seatarrange-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    const auto path = scratch_dir() / name;
    std::ofstream file(path, std::ios::trunc);
    file << text;
    file.close();
    return path.string();
}

const std::string kPathDoc = R"({
  "format": 1,
  "agents": 3,
  "preferences": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
  "seat_graph": {"vertices": 3, "edges": [[0, 1], [1, 2]]},
  "arrangement": [0, 1, 2]
})";

const std::string kUnboundedDoc = R"({
  "format": 1,
  "agents": 4,
  "preferences": [[0, 5, 0, 0], [5, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
  "seat_graph": {"vertices": 4, "edges": [[0, 1], [2, 3]]}
})";

const std::string kNoStableRanksSpec = "0,0,1,2;1,0,0,2;0,2,0,1;0,2,1,0";

}  // namespace

TEST_CASE("usage surface") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"solve", "--help"}).code == 0);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"solve", "x.json"}).code == 2);  // --problem is required
    CHECK(run_cli({"solve", "--problem", "max", "x.json"}).code == 2);
    CHECK(run_cli({"metrics", "--kind", "price", "x.json"}).code == 2);
    const auto help = run_cli({"--help"});
    CHECK(help.out.find("solve") != std::string::npos);
    CHECK(help.out.find("gen") != std::string::npos);
}

TEST_CASE("solve reports welfare for a two-component instance") {
    const auto path = (scratch_dir() / "family51.json").string();
    REQUIRE(run_cli({"gen", "--family", "pof_unbounded", "--x", "5", "--y", "1", "--out", path})
                .code == 0);
    const auto res = run_cli({"solve", "--problem", "mwa", path});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "{\"problem\":\"mwa\",\"method\":\"components2\",\"feasible\":true,"
          "\"arrangement\":[0,2,1,3],\"welfare\":\"10\"}\n");

    const auto again = run_cli({"solve", "--problem", "mwa", path});
    CHECK(again.out == res.out);  // byte deterministic

    const auto brute = run_cli({"solve", "--problem", "mwa", "--method", "brute", path});
    CHECK(brute.code == 0);
    CHECK(brute.out.find("\"method\":\"brute\"") != std::string::npos);
    CHECK(brute.out.find("\"welfare\":\"10\"") != std::string::npos);
    CHECK(brute.out.find("\"arrangement\":[0,2,1,3]") != std::string::npos);
}

TEST_CASE("solve exit code distinguishes infeasible decisions") {
    const auto path = write_scratch("p3.json", kPathDoc);
    const auto efa = run_cli({"solve", "--problem", "efa", path});
    CHECK(efa.code == 1);
    CHECK(efa.out == "{\"problem\":\"efa\",\"method\":\"brute\",\"feasible\":false}\n");
    const auto sta = run_cli({"solve", "--problem", "sta", path});
    CHECK(sta.code == 0);
    CHECK(sta.out.find("\"feasible\":true") != std::string::npos);
}

TEST_CASE("solve rejects method and problem mismatches") {
    const auto path = write_scratch("p3.json", kPathDoc);
    CHECK(run_cli({"solve", "--problem", "sta", "--method", "components2", path}).code == 2);
    CHECK(run_cli({"solve", "--problem", "mwa", "--method", "edge-efa", path}).code == 2);
    CHECK(run_cli({"solve", "--problem", "mua", "--method", "vc", path}).code == 2);
    CHECK(run_cli({"solve", "--problem", "mwa", "--method", "unknown", path}).code == 2);
    // A path of three seats is one component of three, so the paired solver
    // for small components refuses it.
    CHECK(run_cli({"solve", "--problem", "efa", "--method", "sym-efa", path}).code == 2);
}

TEST_CASE("solve accepts fractional preference values") {
    const std::string doc = R"({
      "format": 1,
      "agents": 2,
      "preferences": [[0, "1/2"], ["3/2", 0]],
      "seat_graph": {"vertices": 2, "edges": [[0, 1]]}
    })";
    const auto path = write_scratch("fractional.json", doc);
    const auto res = run_cli({"solve", "--problem", "mwa", path});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "{\"problem\":\"mwa\",\"method\":\"components2\",\"feasible\":true,"
          "\"arrangement\":[0,1],\"welfare\":\"2\"}\n");
}

TEST_CASE("check evaluates the embedded arrangement") {
    const auto path = write_scratch("p3.json", kPathDoc);
    const auto res = run_cli({"check", path});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "{\"utilities\":[\"1\",\"2\",\"1\"],\"welfare\":\"4\",\"blocking_pairs\":[],"
          "\"envy_pairs\":[[0,1],[2,1]],\"stable\":true,\"envy_free\":false}\n");

    const auto bare = write_scratch("p3-bare.json", R"({
      "format": 1,
      "agents": 3,
      "preferences": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
      "seat_graph": {"vertices": 3, "edges": [[0, 1], [1, 2]]}
    })");
    CHECK(run_cli({"check", bare}).code == 2);
}

TEST_CASE("check reads a document from standard input") {
    std::istringstream feed(kPathDoc);
    auto* saved = std::cin.rdbuf(feed.rdbuf());
    const auto res = run_cli({"check", "-"});
    std::cin.rdbuf(saved);
    CHECK(res.code == 0);
    CHECK(res.out.find("\"welfare\":\"4\"") != std::string::npos);
}

TEST_CASE("schema violations exit with the usage code") {
    CHECK(run_cli({"check", (scratch_dir() / "missing.json").string()}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-syntax.json", "{")}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-format.json", R"({
      "format": 2, "agents": 2, "preferences": [[0, 1], [1, 0]],
      "seat_graph": {"vertices": 2, "edges": [[0, 1]]}, "arrangement": [0, 1]
    })")}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-diagonal.json", R"({
      "format": 1, "agents": 2, "preferences": [[1, 1], [1, 0]],
      "seat_graph": {"vertices": 2, "edges": [[0, 1]]}, "arrangement": [0, 1]
    })")}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-dup-edge.json", R"({
      "format": 1, "agents": 2, "preferences": [[0, 1], [1, 0]],
      "seat_graph": {"vertices": 2, "edges": [[0, 1], [1, 0]]}, "arrangement": [0, 1]
    })")}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-vertex-count.json", R"({
      "format": 1, "agents": 2, "preferences": [[0, 1], [1, 0]],
      "seat_graph": {"vertices": 3, "edges": [[0, 1]]}, "arrangement": [0, 1]
    })")}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-arrangement.json", R"({
      "format": 1, "agents": 2, "preferences": [[0, 1], [1, 0]],
      "seat_graph": {"vertices": 2, "edges": [[0, 1]]}, "arrangement": [0, 0]
    })")}).code == 2);
    CHECK(run_cli({"check", write_scratch("bad-extra-key.json", R"({
      "format": 1, "agents": 2, "preferences": [[0, 1], [1, 0]],
      "seat_graph": {"vertices": 2, "edges": [[0, 1]]}, "arrangement": [0, 1],
      "extra": true
    })")}).code == 2);
    const auto diag = run_cli({"check", (scratch_dir() / "bad-diagonal.json").string()});
    CHECK(diag.err.find("preferences[0][0]") != std::string::npos);
}

TEST_CASE("enumeration cap environment variable") {
    const auto path = write_scratch("unbounded.json", kUnboundedDoc);
    ::setenv("SEATARRANGE_ENUM_CAP", "3", 1);
    const auto capped = run_cli({"solve", "--problem", "mwa", "--method", "brute", path});
    CHECK(capped.code == 3);
    ::setenv("SEATARRANGE_ENUM_CAP", "not-a-number", 1);
    CHECK(run_cli({"solve", "--problem", "mwa", "--method", "brute", path}).code == 2);
    ::unsetenv("SEATARRANGE_ENUM_CAP");
    CHECK(run_cli({"solve", "--problem", "mwa", "--method", "brute", path}).code == 0);
}

TEST_CASE("metrics reports values, unbounded, and undefined prices") {
    const auto file = write_scratch("unbounded.json", kUnboundedDoc);
    const auto pof = run_cli({"metrics", "--kind", "pof", file});
    CHECK(pof.code == 0);
    CHECK(pof.out.rfind("{\"pof\":\"unbounded\"", 0) == 0);
    CHECK(pof.out.find("\"optimal_welfare\":\"8\"") != std::string::npos);
    CHECK(pof.out.find("\"constrained_welfare\":\"0\"") != std::string::npos);
    const auto pos = run_cli({"metrics", "--kind", "pos", file});
    CHECK(pos.code == 0);
    CHECK(pos.out.rfind("{\"pos\":\"1\"", 0) == 0);

    const auto ratio = (scratch_dir() / "family51.json").string();
    REQUIRE(run_cli({"gen", "--family", "pof_unbounded", "--x", "5", "--y", "1", "--out", ratio})
                .code == 0);
    const auto value = run_cli({"metrics", "--kind", "pof", ratio});
    CHECK(value.code == 0);
    CHECK(value.out ==
          "{\"pof\":\"5/2\",\"optimal\":[0,2,1,3],\"optimal_welfare\":\"10\","
          "\"constrained\":[0,1,2,3],\"constrained_welfare\":\"4\"}\n");

    const auto gadget = (scratch_dir() / "no-stable.json").string();
    CHECK(run_cli({"gen", "--reduction", "sta_exchange_roommates", "--ranks", kNoStableRanksSpec,
                   "--out", gadget})
              .code == 0);
    const auto undefined = run_cli({"metrics", "--kind", "pos", gadget});
    CHECK(undefined.code == 1);
    CHECK(undefined.out.rfind("{\"pos\":\"undefined\"", 0) == 0);
    CHECK(undefined.out.find("\"optimal\"") != std::string::npos);
    CHECK(undefined.out.find("\"constrained\"") == std::string::npos);
}

TEST_CASE("metrics recovers the binary family ratio") {
    const auto file = (scratch_dir() / "binary4.json").string();
    CHECK(run_cli({"gen", "--family", "pof_binary", "--n", "4", "--out", file}).code == 0);
    const auto res = run_cli({"metrics", "--kind", "pof", file});
    CHECK(res.code == 0);
    CHECK(res.out.rfind("{\"pof\":\"7/4\"", 0) == 0);
}

TEST_CASE("localsearch uses metadata defaults and flag overrides") {
    const auto feasible = (scratch_dir() / "swap-p5.json").string();
    CHECK(run_cli({"gen", "--reduction", "local_sta_independent_set", "--graph",
                   "5:0-1,1-2,2-3,3-4", "--k", "2", "--out", feasible})
              .code == 0);
    const auto found = run_cli({"localsearch", feasible});
    CHECK(found.code == 0);
    CHECK(found.out ==
          "{\"k\":2,\"feasible\":true,"
          "\"arrangement\":[6,8,2,3,4,5,0,7,1,9,10,11,12,13,14,15],"
          "\"swaps\":[[0,6],[1,8]],\"distance\":2}\n");
    CHECK(run_cli({"localsearch", feasible}).out == found.out);

    // Flag overrides metadata: at k = 0 the unstable start is the only candidate.
    const auto pinned = run_cli({"localsearch", "--k", "0", feasible});
    CHECK(pinned.code == 1);
    CHECK(pinned.out == "{\"k\":0,\"feasible\":false}\n");

    const auto infeasible = (scratch_dir() / "swap-k5.json").string();
    CHECK(run_cli({"gen", "--reduction", "local_sta_independent_set", "--graph",
                   "5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4", "--k", "2", "--out", infeasible})
              .code == 0);
    const auto missed = run_cli({"localsearch", infeasible});
    CHECK(missed.code == 1);
    CHECK(missed.out == "{\"k\":2,\"feasible\":false}\n");
}

TEST_CASE("localsearch requires a budget and a start") {
    const auto p3 = write_scratch("p3.json", kPathDoc);
    CHECK(run_cli({"localsearch", p3}).code == 2);  // no --k and no metadata.k
    const auto with_k = run_cli({"localsearch", "--k", "1", p3});
    CHECK(with_k.code == 0);  // document arrangement serves as the start
    const auto bare = write_scratch("p3-bare.json", R"({
      "format": 1,
      "agents": 3,
      "preferences": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
      "seat_graph": {"vertices": 3, "edges": [[0, 1], [1, 2]]}
    })");
    CHECK(run_cli({"localsearch", "--k", "1", bare}).code == 2);
}

TEST_CASE("gen validates its flag combinations") {
    CHECK(run_cli({"gen"}).code == 2);
    CHECK(run_cli({"gen", "--reduction", "mwa_kclique", "--family", "pof_binary"}).code == 2);
    CHECK(run_cli({"gen", "--reduction", "no_such_gadget", "--graph", "3:0-1"}).code == 2);
    CHECK(run_cli({"gen", "--family", "no_such_family"}).code == 2);
    CHECK(run_cli({"gen", "--reduction", "mwa_kclique", "--graph", "3:0-1,0-2,1-2"}).code == 2);
    CHECK(run_cli({"gen", "--reduction", "mwa_kclique", "--graph", "three:0-1", "--k", "2"})
              .code == 2);
    CHECK(run_cli({"gen", "--reduction", "efa_triangles", "--graph", "3:0_1"}).code == 2);
    CHECK(run_cli({"gen", "--family", "pof_binary", "--n", "4", "--out",
                   "/nonexistent-dir/out.json"})
              .code == 2);
}

TEST_CASE("gen emits loadable documents for every generator") {
    const std::vector<std::vector<std::string>> cases = {
        {"gen", "--reduction", "sta_exchange_roommates", "--ranks", kNoStableRanksSpec},
        {"gen", "--reduction", "efa_triangles", "--graph", "3:0-1,0-2,1-2"},
        {"gen", "--reduction", "efa_clique_is", "--graph", "3:0-1,1-2", "--k", "2"},
        {"gen", "--reduction", "efa_3partition", "--values", "1,2,3,1,2,3", "--bound", "6"},
        {"gen", "--reduction", "mwa_spanning", "--pattern", "3:0-1,1-2", "--graph",
         "3:0-1,0-2,1-2"},
        {"gen", "--reduction", "mua_spanning_regular", "--pattern", "3:0-1,0-2,1-2", "--graph",
         "3:0-1,0-2,1-2"},
        {"gen", "--reduction", "mwa_kclique", "--graph", "3:0-1,0-2,1-2", "--k", "3"},
        {"gen", "--reduction", "mua_partition", "--values", "1,1,2,2"},
        {"gen", "--reduction", "efa_partition", "--values", "1,1,2,2"},
        {"gen", "--reduction", "local_sta_independent_set", "--graph", "5:0-1,1-2,2-3,3-4",
         "--k", "2"},
        {"gen", "--family", "pof_unbounded", "--x", "5", "--y", "1"},
        {"gen", "--family", "pof_binary", "--n", "4"},
        {"gen", "--family", "pof_symmetric_triangles", "--n", "6"},
        {"gen", "--family", "pof_no_envy_p3"},
    };
    for (const auto& args : cases) {
        CAPTURE(args[2]);
        const auto res = run_cli(args);
        CHECK(res.code == 0);
        REQUIRE(!res.out.empty());
        CHECK_NOTHROW((void)seat::json_io::load_instance(res.out));
        CHECK(run_cli(args).out == res.out);  // byte deterministic
    }
}

TEST_CASE("gen carries reduction metadata into the document") {
    const auto res = run_cli({"gen", "--reduction", "mwa_kclique", "--graph", "3:0-1,0-2,1-2",
                              "--k", "3", "--name", "triangle-probe"});
    REQUIRE(res.code == 0);
    const auto doc = seat::json_io::load_instance(res.out);
    CHECK(doc.metadata.name == "triangle-probe");
    CHECK(doc.metadata.problem == "mwa");
    REQUIRE(doc.metadata.target.has_value());
    CHECK(*doc.metadata.target == seat::Rational(6));
    CHECK(res.out.find("\"name\": \"triangle-probe\"") != std::string::npos);
}

TEST_CASE("generators scale past the source oracle budgets") {
    // Both sources exceed the answer-oracle budgets, yet generation proceeds:
    // budgets guard decision answers, not gadget construction.
    const auto graph = run_cli({"gen", "--reduction", "local_sta_independent_set", "--graph",
                                "13:", "--k", "2"});
    CHECK(graph.code == 0);
    CHECK_NOTHROW((void)seat::json_io::load_instance(graph.out));
    const auto values = run_cli({"gen", "--reduction", "mua_partition", "--values",
                                 "1,1,1,1,1,1,1,1,1,1,1,1,1,1"});
    CHECK(values.code == 0);
    CHECK_NOTHROW((void)seat::json_io::load_instance(values.out));
}

TEST_CASE("selftest runs its embedded corpus") {
    const auto res = run_cli({"selftest"});
    CHECK(res.code == 0);
    CHECK(res.out == "{\"selftest\":\"ok\",\"checks\":10}\n");
}
