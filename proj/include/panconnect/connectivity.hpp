#pragma once

#include <panconnect/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace panconnect
{
    /// Unit vertex-capacity network for one graph: vertex v becomes in-node 2v and out-node
    /// 2v+1 joined by a capacity-1 arc, and each edge {u,v} becomes uncapacitated arcs
    /// out(u)->in(v) and out(v)->in(u). Built once; each flow runs on a private residual copy.
    class FlowNetworkView
    {
    public:
        explicit FlowNetworkView(const Graph & g);

        struct FlowResult
        {
            std::size_t paths = 0;
            /// Minimum u-v separator; filled only for non-adjacent pairs when requested.
            std::vector<VertexId> separator;
        };

        /// Maximum number of internally vertex-disjoint u-v paths, stopping early once
        /// `limit` is reached. An edge uv counts as one path of its own.
        [[nodiscard]] auto disjoint_paths(VertexId u, VertexId v, std::size_t limit, bool want_separator) const -> FlowResult;

        [[nodiscard]] auto graph() const noexcept -> const Graph & { return _g; }

    private:
        struct Arc
        {
            std::uint32_t to;
            std::uint32_t reverse;
        };

        const Graph & _g;
        std::vector<std::size_t> _first;
        std::vector<Arc> _arcs;
        std::vector<std::int32_t> _capacity;
    };

    /// Maximum number of internally vertex-disjoint u-v paths. Throws UsageError if u == v.
    [[nodiscard]] auto local_connectivity(const Graph & g, VertexId u, VertexId v) -> std::size_t;

    /// Minimum set of vertices (excluding u, v) meeting every u-v path. u and v must be
    /// distinct and non-adjacent.
    [[nodiscard]] auto min_vertex_separator(const Graph & g, VertexId u, VertexId v) -> std::vector<VertexId>;

    struct ConnectivityResult
    {
        std::size_t kappa = 0;
        /// A vertex cut of size kappa (empty for complete or disconnected graphs).
        std::vector<VertexId> separator;
        /// The non-adjacent pair whose flow attained kappa, first in (u,v) order.
        std::optional<Edge> pair;
        std::size_t flow_calls = 0;
    };

    /// kappa(G): 0 when disconnected, p-1 for K_p, otherwise the minimum local connectivity
    /// over all non-adjacent pairs. Requires at least two vertices.
    [[nodiscard]] auto vertex_connectivity(const Graph & g, unsigned jobs = 1) -> ConnectivityResult;

    /// |V| > k and kappa(G) >= k.
    [[nodiscard]] auto is_k_connected(const Graph & g, std::size_t k, unsigned jobs = 1) -> bool;

    struct DeletionTrials
    {
        std::size_t trials = 0;
        std::size_t failures = 0;
        /// The first deleted set that disconnected the graph, if any.
        std::vector<VertexId> first_failing;
    };

    /// Removes `removed_count` distinct random vertices `trials` times and counts how often
    /// the rest is disconnected. Deterministic for a given seed.
    [[nodiscard]] auto random_deletion_trials(const Graph & g, std::size_t removed_count, std::size_t trials,
        std::uint64_t seed) -> DeletionTrials;

    /// True iff removing `cut` disconnects g or leaves at most one vertex.
    [[nodiscard]] auto is_vertex_cut(const Graph & g, const std::vector<VertexId> & cut) -> bool;
}
