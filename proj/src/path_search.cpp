#include <panconnect/errors.hpp>
#include <panconnect/paths.hpp>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace panconnect
{
    auto outcome_name(SearchOutcome o) -> std::string_view
    {
        switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::not_found: return "not-found";
        case SearchOutcome::budget_exhausted: return "budget-exhausted";
        }
        return "not-found";
    }

    auto find_path_of_length(const Graph & g, VertexId u, VertexId v, size_t length, uint64_t budget,
        std::span<const int> dist_to_v) -> PathSearchResult
    {
        PathSearchResult result;
        if (dist_to_v[u] == unreachable || static_cast<size_t>(dist_to_v[u]) > length)
            return result;

        vector<VertexId> path{u};
        vector<size_t> cursor{0};
        vector<char> on_path(g.vertex_count(), 0);
        on_path[u] = 1;
        path.reserve(length + 1);
        cursor.reserve(length + 1);

        while (! path.empty()) {
            auto current = path.back();
            auto remaining = length - (path.size() - 1);
            auto next = g.neighbors(current);
            auto & at = cursor.back();

            bool pushed = false;
            if (remaining > 0) {
                auto after = remaining - 1;
                while (at < next.size()) {
                    auto w = next[at++];
                    if (on_path[w])
                        continue;
                    if (w == v) {
                        if (after != 0)
                            continue;
                        path.push_back(w);
                        ++result.nodes_expanded;
                        result.outcome = SearchOutcome::found;
                        result.witness = PathWitness{std::move(path), length};
                        return result;
                    }
                    if (after < static_cast<size_t>(dist_to_v[w]))
                        continue;
                    if (result.nodes_expanded >= budget) {
                        result.outcome = SearchOutcome::budget_exhausted;
                        return result;
                    }
                    ++result.nodes_expanded;
                    on_path[w] = 1;
                    path.push_back(w);
                    cursor.push_back(0);
                    pushed = true;
                    break;
                }
            }
            if (! pushed) {
                on_path[current] = 0;
                path.pop_back();
                cursor.pop_back();
            }
        }
        return result;
    }

    auto find_path_of_length(const Graph & g, VertexId u, VertexId v, size_t length, uint64_t budget) -> PathSearchResult
    {
        if (u >= g.vertex_count() || v >= g.vertex_count())
            throw UsageError("path endpoint out of range");
        if (u == v)
            throw UsageError("path search needs two distinct endpoints");
        auto dist = bfs_distances(g, v);
        if (dist[u] == unreachable || length < static_cast<size_t>(dist[u]) || length + 1 > g.vertex_count())
            throw UsageError("path length " + std::to_string(length) + " outside [d(u,v), |V|-1]");
        return find_path_of_length(g, u, v, length, budget, dist);
    }

    auto find_cycle_of_length(const Graph & g, size_t length, uint64_t budget) -> CycleSearchResult
    {
        if (length < 3 || length > g.vertex_count())
            throw UsageError("cycle length " + std::to_string(length) + " outside [3, |V|]");
        CycleSearchResult result;
        bool exhausted = false;
        vector<vector<int>> dist_cache(g.vertex_count());
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (auto v : g.neighbors(u)) {
                if (v < u)
                    continue;
                auto & dist = dist_cache[v];
                if (dist.empty())
                    dist = bfs_distances(g, v);
                ++result.edges_tried;
                auto path = find_path_of_length(g, u, v, length - 1, budget, dist);
                result.nodes_expanded += path.nodes_expanded;
                if (path.outcome == SearchOutcome::found) {
                    result.outcome = SearchOutcome::found;
                    result.witness = CycleWitness{std::move(path.witness->vertices)};
                    result.closing_edge = Edge{u, v};
                    return result;
                }
                exhausted = exhausted || path.outcome == SearchOutcome::budget_exhausted;
            }
        result.outcome = exhausted ? SearchOutcome::budget_exhausted : SearchOutcome::not_found;
        return result;
    }
}
