#include <panconnect/edgelist.hpp>
#include <panconnect/errors.hpp>
#include <panconnect/graph.hpp>

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace panconnect;

namespace
{
    auto reread(const std::string & text) -> Graph
    {
        std::istringstream in(text);
        return read_edge_list(in);
    }

    auto replace_once(std::string text, const std::string & from, const std::string & to) -> std::string
    {
        auto at = text.find(from);
        REQUIRE(at != std::string::npos);
        return text.replace(at, from.size(), to);
    }
}

TEST_CASE("edge list text is exact")
{
    auto text = to_edge_list(build_layer_graph(3, 1));
    CHECK(text ==
        "# family=layer n=3 m=1 vertices=6 edges=6\n"
        "v 0 1\n"
        "v 1 2\n"
        "v 2 3\n"
        "v 3 1,2\n"
        "v 4 1,3\n"
        "v 5 2,3\n"
        "e 0 3\n"
        "e 0 4\n"
        "e 1 3\n"
        "e 1 5\n"
        "e 2 4\n"
        "e 2 5\n");
}

TEST_CASE("round trip preserves labels, edges and meta")
{
    for (const auto & g : {build_johnson(5, 2), build_layer_graph(5, 1), square(build_layer_graph(4, 1)), make_cycle(7)}) {
        auto text = to_edge_list(g);
        auto back = reread(text);
        CHECK(back.meta() == g.meta());
        CHECK(back.edges() == g.edges());
        CHECK(std::vector<SubsetWord>(back.labels().begin(), back.labels().end()) ==
            std::vector<SubsetWord>(g.labels().begin(), g.labels().end()));
        CHECK(to_edge_list(back) == text);
    }
}

TEST_CASE("corrupted files are rejected")
{
    auto text = to_edge_list(build_layer_graph(3, 1));
    CHECK_THROWS_AS(reread(replace_once(text, "edges=6", "edges=7")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "vertices=6", "vertices=5")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "e 0 4\n", "")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "e 0 3\ne 0 4\n", "e 0 4\ne 0 3\n")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "e 0 3", "e 3 0")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "\n", "\r\n")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "v 5 2,3", "v 5 1,2")), UsageError);
    CHECK_THROWS_AS(reread(replace_once(text, "family=layer", "family=grid")), UsageError);
    CHECK_THROWS_AS(reread(""), UsageError);

    // Well-formed but not what the layer constructor produces.
    auto relabeled = replace_once(replace_once(text, "e 0 3\n", ""), "edges=6", "edges=5");
    CHECK_THROWS_AS(reread(relabeled), UsageError);
    // The same body declared raw is accepted.
    auto raw = replace_once(relabeled, "family=layer", "family=raw");
    CHECK(reread(raw).edge_count() == 5);
}

TEST_CASE("files on disk")
{
    auto path = std::filesystem::temp_directory_path() / "panconnect_edgelist_test.txt";
    auto g = build_johnson(6, 3);
    save_edge_list(path, g);
    CHECK(load_edge_list(path).edges() == g.edges());
    std::filesystem::remove(path);
    CHECK_THROWS_AS((void) load_edge_list(path), UsageError);
}
