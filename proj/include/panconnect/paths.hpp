#pragma once

#include <panconnect/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace panconnect
{
    /// A u-v path given by its vertex sequence; target_length counts edges.
    struct PathWitness
    {
        std::vector<VertexId> vertices;
        std::size_t target_length = 0;
    };

    /// A cycle given by distinct vertices; the closing edge runs from the last back to the first.
    struct CycleWitness
    {
        std::vector<VertexId> vertices;

        [[nodiscard]] auto length() const noexcept -> std::size_t { return vertices.size(); }
    };

    // Validators are written independently of the search; they only read adjacency lists.
    [[nodiscard]] auto is_valid_path(const Graph & g, const PathWitness & w, VertexId u, VertexId v) -> bool;
    [[nodiscard]] auto is_valid_cycle(const Graph & g, const CycleWitness & w) -> bool;

    enum class SearchOutcome
    {
        found,
        not_found,
        budget_exhausted
    };

    [[nodiscard]] auto outcome_name(SearchOutcome o) -> std::string_view;

    struct PathSearchResult
    {
        SearchOutcome outcome = SearchOutcome::not_found;
        std::optional<PathWitness> witness;
        std::uint64_t nodes_expanded = 0;
    };

    constexpr std::uint64_t default_budget = 50'000'000;

    /// Depth-first search for a simple u-v path with exactly `length` edges. Neighbors are
    /// tried in ascending id order and a branch is cut when the remaining length is below
    /// the distance to v. `dist_to_v` must hold BFS distances to v. At most `budget` vertices
    /// are pushed before giving up with budget_exhausted.
    [[nodiscard]] auto find_path_of_length(const Graph & g, VertexId u, VertexId v, std::size_t length,
        std::uint64_t budget, std::span<const int> dist_to_v) -> PathSearchResult;

    /// As above, computing the distance table. Throws UsageError unless u != v and
    /// d(u,v) <= length <= |V|-1.
    [[nodiscard]] auto find_path_of_length(const Graph & g, VertexId u, VertexId v, std::size_t length,
        std::uint64_t budget = default_budget) -> PathSearchResult;

    struct CycleSearchResult
    {
        SearchOutcome outcome = SearchOutcome::not_found;
        std::optional<CycleWitness> witness;
        /// The edge closing the witness cycle.
        std::optional<Edge> closing_edge;
        std::uint64_t nodes_expanded = 0;
        std::size_t edges_tried = 0;
    };

    /// A cycle of the given length (3 <= length <= |V|): for each edge {u,v} in order, a u-v path
    /// of length-1 edges closed by the edge itself. Budget applies per edge.
    [[nodiscard]] auto find_cycle_of_length(const Graph & g, std::size_t length, std::uint64_t budget = default_budget)
        -> CycleSearchResult;
}
