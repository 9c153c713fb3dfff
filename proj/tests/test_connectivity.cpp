#include "oracles.hpp"

#include <panconnect/connectivity.hpp>
#include <panconnect/errors.hpp>
#include <panconnect/graph.hpp>

#include <doctest.h>

using namespace panconnect;

TEST_CASE("local connectivity examples")
{
    CHECK(local_connectivity(make_cycle(6), 0, 3) == 2);
    CHECK(local_connectivity(make_complete(5), 1, 3) == 4);

    // Singletons {i},{j} meet at {i,j} and again through {k} for each of the three other k.
    // The degree-2 vertices are the ones whose local connectivity is delta = 2.
    auto b51 = build_layer_graph(5, 1);
    auto a = oracle::matrix_of(b51);
    for (VertexId u = 0; u < b51.vertex_count(); ++u)
        for (VertexId v = u + 1; v < b51.vertex_count(); ++v) {
            std::size_t expected = v < 5 ? 4 : 2;
            CHECK(local_connectivity(b51, u, v) == expected);
            CHECK(oracle::local_connectivity(a, u, v) == expected);
        }
    CHECK_THROWS_AS((void) local_connectivity(b51, 2, 2), UsageError);
}

TEST_CASE("local connectivity and separators match exhaustive enumeration")
{
    for (const auto & g : oracle::small_corpus()) {
        CAPTURE(g.describe());
        auto a = oracle::matrix_of(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
                REQUIRE(local_connectivity(g, u, v) == oracle::local_connectivity(a, u, v));
                if (g.adjacent(u, v))
                    continue;
                auto sep = min_vertex_separator(g, u, v);
                REQUIRE(sep.size() == oracle::min_separator_size(a, u, v));
                std::vector<bool> removed(g.vertex_count(), false);
                for (auto x : sep) {
                    REQUIRE(x != u);
                    REQUIRE(x != v);
                    removed[x] = true;
                }
                REQUIRE(oracle::separated(a, u, v, removed));
            }
    }
}

TEST_CASE("vertex connectivity examples")
{
    CHECK(vertex_connectivity(make_complete(6)).kappa == 5);
    CHECK(vertex_connectivity(build_johnson(5, 2)).kappa == 6);
    CHECK(vertex_connectivity(make_cycle(6)).kappa == 2);
    CHECK(vertex_connectivity(make_path(4)).kappa == 1);
    std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK(vertex_connectivity(make_raw_graph(4, two)).kappa == 0);
    CHECK_THROWS_AS((void) vertex_connectivity(make_complete(1)), UsageError);

    auto c6 = vertex_connectivity(make_cycle(6));
    CHECK(is_vertex_cut(make_cycle(6), c6.separator));
    REQUIRE(c6.pair.has_value());
    CHECK(*c6.pair == Edge{0, 2});
}

TEST_CASE("kappa equals the minimum brute-force separator over the corpus")
{
    for (const auto & g : oracle::small_corpus()) {
        CAPTURE(g.describe());
        auto a = oracle::matrix_of(g);
        std::size_t expected = g.vertex_count() - 1;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = u + 1; v < g.vertex_count(); ++v)
                if (! a[u][v])
                    expected = std::min(expected, oracle::min_separator_size(a, u, v));
        auto result = vertex_connectivity(g, 1);
        REQUIRE(result.kappa == expected);
        REQUIRE(vertex_connectivity(g, 4).kappa == expected);
        if (! result.separator.empty()) {
            REQUIRE(result.separator.size() == expected);
            REQUIRE(is_vertex_cut(g, result.separator));
        }
    }
}

TEST_CASE("layer graphs have connectivity m+1")
{
    for (int n = 3; n <= 9; ++n)
        for (int m = 1; 2 * m < n; ++m) {
            auto g = build_layer_graph(n, m);
            if (g.vertex_count() > 300)
                continue;
            CAPTURE(n);
            CAPTURE(m);
            REQUIRE(vertex_connectivity(g, 2).kappa == static_cast<std::size_t>(m + 1));
        }
}

TEST_CASE("the threaded sweep returns the same witness")
{
    auto g = build_layer_graph(7, 2);
    auto one = vertex_connectivity(g, 1), many = vertex_connectivity(g, 4);
    CHECK(one.kappa == many.kappa);
    CHECK(one.pair == many.pair);
    CHECK(one.separator == many.separator);
}

TEST_CASE("k-connectivity")
{
    CHECK_FALSE(is_k_connected(make_path(4), 2));
    CHECK(is_k_connected(make_path(4), 1));
    CHECK(is_k_connected(make_cycle(6), 2));
    CHECK_FALSE(is_k_connected(make_cycle(6), 3));
    CHECK(is_k_connected(make_complete(4), 3));
    CHECK_FALSE(is_k_connected(make_complete(4), 4));
}

TEST_CASE("random deletion trials")
{
    auto b62 = build_layer_graph(6, 2);
    auto safe = random_deletion_trials(b62, 2, 100, 0);
    CHECK(safe.trials == 100);
    CHECK(safe.failures == 0);
    CHECK(safe.first_failing.empty());

    auto p5 = make_path(5);
    auto risky = random_deletion_trials(p5, 1, 200, 0);
    CHECK(risky.failures > 0);
    REQUIRE(risky.first_failing.size() == 1);
    CHECK(is_vertex_cut(p5, risky.first_failing));

    auto again = random_deletion_trials(p5, 1, 200, 0);
    CHECK(again.failures == risky.failures);
    CHECK(again.first_failing == risky.first_failing);
}

TEST_CASE("vertex cuts")
{
    auto c6 = make_cycle(6);
    CHECK(is_vertex_cut(c6, {0, 3}));
    CHECK_FALSE(is_vertex_cut(c6, {0, 1}));
    CHECK(is_vertex_cut(make_complete(3), {0, 1}));
}
