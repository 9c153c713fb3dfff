#include <panconnect/cli/commands.hpp>
#include <panconnect/edgelist.hpp>
#include <panconnect/graph.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;
using namespace panconnect;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code = 0;
        std::string out;
        std::string err;
    };

    auto run(const std::vector<std::string> & args) -> Run
    {
        std::ostringstream out, err;
        int code = cli::run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto scratch(const std::string & name) -> fs::path
    {
        auto dir = fs::temp_directory_path() / "panconnect_cli_test";
        fs::create_directories(dir);
        return dir / name;
    }

    auto slurp(const fs::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    auto csv_rows(const std::string & text) -> std::vector<std::vector<std::string>>
    {
        std::vector<std::vector<std::string>> rows;
        std::istringstream in(text);
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::istringstream cells_in(line);
            std::string cell;
            while (std::getline(cells_in, cell, ','))
                cells.push_back(cell);
            if (line.back() == ',')
                cells.emplace_back();
            rows.push_back(cells);
        }
        return rows;
    }
}

TEST_CASE("generate")
{
    auto b51 = run({"generate", "--family", "layer", "--n", "5", "--m", "1"});
    CHECK(b51.code == 0);
    CHECK(b51.out.starts_with("# family=layer n=5 m=1 vertices=15 edges=20\n"));
    CHECK(b51.out == to_edge_list(build_layer_graph(5, 1)));

    auto k5 = run({"generate", "--family", "johnson", "--n", "5", "--m", "1"});
    CHECK(k5.out.starts_with("# family=johnson n=5 m=1 vertices=5 edges=10\n"));

    auto j42 = run({"generate", "--family", "johnson", "--n", "4", "--m", "2"});
    CHECK(j42.out.starts_with("# family=johnson n=4 m=2 vertices=6 edges=12\n"));

    auto sq = run({"generate", "--family", "layer", "--n", "3", "--m", "1", "--square"});
    CHECK(sq.out.starts_with("# family=raw n=3 m=1 vertices=6 edges=12\n"));

    auto path = scratch("j52.txt");
    CHECK(run({"generate", "--family", "johnson", "--n", "5", "--m", "2", "--output", path.string()}).code == 0);
    CHECK(load_edge_list(path).edge_count() == 30);
}

TEST_CASE("verify")
{
    auto pan = run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "panconnected"});
    REQUIRE(pan.code == 0);
    auto doc = json::parse(pan.out);
    CHECK(doc["schema"] == "panconnect-report/1");
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["checks"][0]["name"] == "panconnected");
    CHECK(doc["checks"][0]["counterexample"].is_null());
    CHECK(doc["checks"][0]["statistics"]["pairs"] == 45);
    CHECK_FALSE(doc.contains("wall_ms"));

    auto conn = run({"verify", "--family", "layer", "--n", "6", "--m", "2", "--check", "connectivity"});
    REQUIRE(conn.code == 0);
    auto details = json::parse(conn.out)["checks"][0]["details"];
    CHECK(details["kappa"] == 3);
    CHECK(details["delta"] == 3);

    auto vt = run({"verify", "--family", "layer", "--n", "5", "--m", "2", "--check", "transitivity"});
    REQUIRE(vt.code == 0);
    CHECK(json::parse(vt.out)["checks"][0]["details"]["vertex_transitive"] == true);

    auto csv = run({"verify", "--family", "layer", "--n", "6", "--m", "2", "--check", "connectivity", "--format", "csv"});
    CHECK(csv.out == "family,n,m,check,verdict,kappa,delta,pairs,lengths_checked,nodes_expanded,ms\n"
                     "layer,6,2,connectivity,pass,3,3,0,0,0,0\n");

    auto timed = run({"verify", "--family", "johnson", "--n", "4", "--m", "2", "--check", "pancyclic", "--timing"});
    CHECK(json::parse(timed.out).contains("wall_ms"));

    auto reduced = run({"verify", "--family", "johnson", "--n", "6", "--m", "3", "--check", "panconnected",
        "--symmetry-reduced"});
    REQUIRE(reduced.code == 0);
    CHECK(json::parse(reduced.out)["checks"][0]["statistics"]["pairs"] == 3);
}

TEST_CASE("iso")
{
    auto small = run({"iso", "--n", "3", "--m", "1"});
    REQUIRE(small.code == 0);
    auto doc = json::parse(small.out);
    CHECK(doc["certified"] == true);
    CHECK(doc["target"]["n"] == 4);
    CHECK(doc["target"]["m"] == 2);

    auto ten = json::parse(run({"iso", "--n", "4", "--m", "1"}).out);
    CHECK(ten["source"]["edges"] == 30);
    CHECK(ten["target"]["edges"] == 30);

    auto big = json::parse(run({"iso", "--n", "9", "--m", "2"}).out);
    CHECK(big["certified"] == true);
    CHECK(big["map"].size() == 120);
}

TEST_CASE("sweep")
{
    auto pan = run({"sweep", "--family", "johnson", "--n-min", "4", "--n-max", "7", "--check", "panconnected"});
    REQUIRE(pan.code == 0);
    auto rows = csv_rows(pan.out);
    CHECK(rows.size() == 10);
    for (const auto & r : rows)
        CHECK(r[4] == "pass");

    auto conn = run({"sweep", "--family", "layer", "--n-min", "4", "--n-max", "10", "--check", "connectivity"});
    REQUIRE(conn.code == 0);
    auto conn_rows = csv_rows(conn.out);
    CHECK(conn_rows.size() == 1 + 2 + 2 + 3 + 3 + 4 + 4);
    for (const auto & r : conn_rows)
        CHECK(std::stoi(r[5]) == std::stoi(r[2]) + 1);

    auto edges = run({"sweep", "--family", "layer", "--n-min", "3", "--n-max", "9", "--check", "edge-transitive"});
    CHECK(edges.code == 0);
    for (const auto & r : csv_rows(edges.out))
        CHECK(r[4] == "pass");

    auto capped = run({"sweep", "--family", "layer", "--n-min", "3", "--n-max", "12", "--max-vertices", "100",
        "--check", "connectivity"});
    for (const auto & r : csv_rows(capped.out))
        CHECK(build_layer_graph(std::stoi(r[1]), std::stoi(r[2])).vertex_count() <= 100);
}

TEST_CASE("repeated runs are byte-identical, whatever the thread count")
{
    std::vector<std::string> args{"sweep", "--family", "johnson", "--n-min", "4", "--n-max", "6", "--check",
        "connectivity", "--check", "panconnected", "--check", "pancyclic"};
    auto first = run(args), second = run(args);
    CHECK(first.out == second.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--jobs", "4"});
    CHECK(run(threaded).out == first.out);

    std::vector<std::string> verify{"verify", "--family", "layer", "--n", "5", "--m", "2", "--check", "connectivity",
        "--check", "transitivity", "--check", "panconnected", "--witnesses"};
    auto a = run(verify), b = run(verify);
    CHECK(a.out == b.out);
    verify.insert(verify.end(), {"--jobs", "3"});
    CHECK(run(verify).out == a.out);
}

TEST_CASE("C6 counterexamples replay")
{
    auto graph = scratch("c6.txt");
    save_edge_list(graph, make_cycle(6));
    auto report = scratch("c6.json");
    auto verdict = run({"verify", "--family", "raw", "--graph", graph.string(), "--check", "panconnected", "--check",
        "pancyclic", "--check", "hamilton-connected", "--check", "connectivity", "--output", report.string()});
    CHECK(verdict.code == 1);
    auto doc = json::parse(slurp(report));
    CHECK(doc["verdict"] == "fail");
    auto checks = doc["checks"];
    CHECK(checks[0]["name"] == "connectivity");
    CHECK(checks[0]["verdict"] == "pass");
    CHECK(checks[1]["counterexample"]["kind"] == "missing-path");
    CHECK(checks[1]["counterexample"]["u"] == 0);
    CHECK(checks[1]["counterexample"]["v"] == 3);
    CHECK(checks[1]["counterexample"]["length"] == 4);
    CHECK(checks[2]["counterexample"]["kind"] == "missing-cycle");
    CHECK(checks[2]["counterexample"]["length"] == 3);
    CHECK(checks[3]["counterexample"]["kind"] == "missing-path");

    auto replay = run({"replay", "--graph", graph.string(), "--report", report.string()});
    CHECK(replay.code == 0);
    CHECK(replay.out ==
        "panconnected: missing-path confirmed\n"
        "pancyclic: missing-cycle confirmed\n"
        "hamilton-connected: missing-path confirmed\n");

    // A false claim does not survive replay.
    doc["checks"][1]["counterexample"]["length"] = 3;
    auto forged = scratch("c6_forged.json");
    std::ofstream(forged) << doc.dump();
    auto refuted = run({"replay", "--graph", graph.string(), "--report", forged.string()});
    CHECK(refuted.code == 1);
    CHECK(refuted.out.find("panconnected: missing-path REFUTED") != std::string::npos);

    // The report must belong to the graph it is replayed against.
    auto other = scratch("c7.txt");
    save_edge_list(other, make_cycle(7));
    CHECK(run({"replay", "--graph", other.string(), "--report", report.string()}).code == 2);
}

TEST_CASE("irregular layer graphs replay their degree witness")
{
    auto graph = scratch("b51.txt");
    save_edge_list(graph, build_layer_graph(5, 1));
    auto report = scratch("b51.json");
    auto verdict = run({"verify", "--graph", graph.string(), "--check", "vertex-transitive", "--output", report.string()});
    CHECK(verdict.code == 1);
    auto doc = json::parse(slurp(report));
    CHECK(doc["checks"][0]["counterexample"]["kind"] == "irregular-degrees");
    auto replay = run({"replay", "--graph", graph.string(), "--report", report.string()});
    CHECK(replay.code == 0);
    CHECK(replay.out == "vertex-transitive: irregular-degrees confirmed\n");

    // The combined check expects exactly this irregularity, so it passes.
    CHECK(run({"verify", "--graph", graph.string(), "--check", "transitivity"}).code == 0);
}

TEST_CASE("passing reports have nothing to replay")
{
    auto graph = scratch("j42.txt");
    save_edge_list(graph, build_johnson(4, 2));
    auto report = scratch("j42.json");
    CHECK(run({"verify", "--graph", graph.string(), "--check", "panconnected", "--output", report.string()}).code == 0);
    auto replay = run({"replay", "--graph", graph.string(), "--report", report.string()});
    CHECK(replay.code == 0);
    CHECK(replay.out == "no counterexamples to replay\n");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "planarity"}).code == 2);
    CHECK(run({"verify", "--family", "johnson", "--n", "5", "--m", "2"}).code == 2);
    CHECK(run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "pancyclic", "--budget", "0"}).code == 2);
    CHECK(run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "pancyclic", "--format", "xml"}).code == 2);
    CHECK(run({"generate", "--family", "layer", "--n", "4", "--m", "2"}).code == 2);
    CHECK(run({"generate", "--family", "johnson", "--n", "4", "--m", "7"}).code == 2);
    CHECK(run({"generate", "--family", "raw"}).code == 2);
    CHECK(run({"generate", "--family", "cube"}).code == 2);
    CHECK(run({"generate", "--graph", scratch("missing.txt").string()}).code == 2);
    CHECK(run({"iso", "--n", "4"}).code == 2);
    CHECK(run({"iso", "--n", "4", "--m", "2"}).code == 2);
    CHECK(run({"sweep", "--family", "raw", "--n-min", "3", "--n-max", "4", "--check", "connectivity"}).code == 2);
    CHECK(run({"verify", "--family", "layer", "--n", "5", "--m", "1", "--check", "iso35", "--check", "panconnected",
              "--symmetry-reduced"}).code == 2);

    auto usage = run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "planarity"});
    CHECK(usage.err.find("planarity") != std::string::npos);
    CHECK(usage.out.empty());
}

TEST_CASE("help and version")
{
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("sweep") != std::string::npos);
    auto version = run({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out == "1.0.0\n");
}

TEST_CASE("the environment overrides --jobs")
{
    ::setenv("PANCONNECT_JOBS", "0", 1);
    CHECK(run({"verify", "--family", "johnson", "--n", "4", "--m", "2", "--check", "connectivity"}).code == 2);
    ::setenv("PANCONNECT_JOBS", "3", 1);
    auto env = run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "panconnected", "--jobs", "1"});
    ::unsetenv("PANCONNECT_JOBS");
    auto flag = run({"verify", "--family", "johnson", "--n", "5", "--m", "2", "--check", "panconnected"});
    CHECK(env.code == 0);
    CHECK(env.out == flag.out);
}
