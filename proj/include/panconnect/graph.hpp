#pragma once

#include <panconnect/subset.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace panconnect
{
    using VertexId = std::uint32_t;
    using Edge = std::pair<VertexId, VertexId>;

    enum class Family
    {
        johnson,
        layer,
        raw
    };

    [[nodiscard]] auto family_name(Family f) -> std::string_view;
    [[nodiscard]] auto parse_family(std::string_view text) -> Family;

    /// Which constructor produced a graph. For raw graphs n and m describe the label
    /// ground set only and carry no family semantics.
    struct GraphMeta
    {
        Family family = Family::raw;
        int n = 0;
        int m = 0;

        friend auto operator==(const GraphMeta &, const GraphMeta &) -> bool = default;
    };

    /// Immutable simple undirected graph. Vertex ids are positions in the label table;
    /// neighbor lists are sorted ascending.
    class Graph
    {
    public:
        Graph() = default;

        /// Validates and builds. Throws UsageError on loops, duplicate edges, out-of-range
        /// ids, duplicate labels, or labels over the wrong ground set.
        static auto from_edges(std::vector<SubsetWord> labels, std::span<const Edge> edges, GraphMeta meta) -> Graph;

        /// Same as from_edges but takes one (not necessarily sorted) neighbor list per vertex,
        /// which must already be symmetric.
        static auto from_adjacency(std::vector<SubsetWord> labels, std::vector<std::vector<VertexId>> adjacency,
            GraphMeta meta) -> Graph;

        [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return _labels.size(); }
        [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return _edge_count; }
        [[nodiscard]] auto meta() const noexcept -> const GraphMeta & { return _meta; }

        [[nodiscard]] auto label(VertexId v) const -> const SubsetWord & { return _labels[v]; }
        [[nodiscard]] auto labels() const noexcept -> std::span<const SubsetWord> { return _labels; }

        [[nodiscard]] auto neighbors(VertexId v) const noexcept -> std::span<const VertexId>
        {
            return {_targets.data() + _offsets[v], _targets.data() + _offsets[v + 1]};
        }
        [[nodiscard]] auto degree(VertexId v) const noexcept -> std::size_t { return _offsets[v + 1] - _offsets[v]; }
        [[nodiscard]] auto adjacent(VertexId u, VertexId v) const -> bool;

        /// All edges as (smaller id, larger id), sorted lexicographically.
        [[nodiscard]] auto edges() const -> std::vector<Edge>;

        /// Vertex carrying the given label, if any.
        [[nodiscard]] auto find_vertex(const SubsetWord & label) const -> std::optional<VertexId>;

        /// Short description such as "J(5,2)", "B(5,1)" or "raw(6 vertices)".
        [[nodiscard]] auto describe() const -> std::string;

    private:
        std::vector<SubsetWord> _labels;
        std::vector<std::size_t> _offsets{0};
        std::vector<VertexId> _targets;
        std::size_t _edge_count = 0;
        GraphMeta _meta;
        std::vector<std::pair<std::uint64_t, VertexId>> _label_index;
    };

    /// J(n,m): the m-subsets of [n] in colex order, adjacent when their symmetric difference has size two.
    [[nodiscard]] auto build_johnson(int n, int m) -> Graph;

    /// B(n,m): the m-subsets then the (m+1)-subsets of [n], each block in colex order, with
    /// containment edges. Requires n >= 3 and 1 <= m < n/2.
    [[nodiscard]] auto build_layer_graph(int n, int m) -> Graph;

    /// Same labels and ids; u ~ v iff 1 <= dist(u,v) <= 2 in g. Output family is raw.
    [[nodiscard]] auto square(const Graph & g) -> Graph;

    /// Raw graph on vertices 0..count-1 labelled {1},...,{count} over [count]; count <= 64.
    [[nodiscard]] auto make_raw_graph(std::size_t count, std::span<const Edge> edges) -> Graph;
    [[nodiscard]] auto make_cycle(std::size_t count) -> Graph;
    [[nodiscard]] auto make_path(std::size_t count) -> Graph;
    [[nodiscard]] auto make_complete(std::size_t count) -> Graph;

    constexpr int unreachable = std::numeric_limits<int>::max();

    /// Hop distances from source; unreachable vertices get `unreachable`.
    [[nodiscard]] auto bfs_distances(const Graph & g, VertexId source) -> std::vector<int>;

    struct DegreeStats
    {
        std::size_t min_degree = 0;
        std::size_t max_degree = 0;
        bool regular = true;
    };

    [[nodiscard]] auto degree_stats(const Graph & g) -> DegreeStats;

    /// Throws UsageError on the empty graph.
    [[nodiscard]] auto is_connected(const Graph & g) -> bool;

    /// Connectivity of the subgraph induced by the vertices not flagged in `removed`.
    /// An empty or single-vertex remainder counts as connected.
    [[nodiscard]] auto is_connected_without(const Graph & g, const std::vector<bool> & removed) -> bool;
}
