#include <panconnect/connectivity.hpp>
#include <panconnect/errors.hpp>
#include <panconnect/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <tuple>

using std::size_t;
using std::uint32_t;
using std::vector;

namespace panconnect
{
    namespace
    {
        constexpr std::int32_t uncapacitated = std::numeric_limits<std::int32_t>::max() / 2;
        constexpr uint32_t no_arc = std::numeric_limits<uint32_t>::max();

        auto in_node(VertexId v) -> uint32_t { return 2 * v; }
        auto out_node(VertexId v) -> uint32_t { return 2 * v + 1; }
    }

    FlowNetworkView::FlowNetworkView(const Graph & g) : _g(g)
    {
        auto nodes = 2 * g.vertex_count();
        // Arc pairs are appended forward/backward; the reverse index is fixed up below.
        vector<std::tuple<uint32_t, uint32_t, std::int32_t>> arcs;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            arcs.emplace_back(in_node(v), out_node(v), 1);
            for (auto w : g.neighbors(v))
                arcs.emplace_back(out_node(v), in_node(w), uncapacitated);
        }

        _first.assign(nodes + 1, 0);
        for (auto & [from, to, cap] : arcs) {
            ++_first[from + 1];
            ++_first[to + 1];
        }
        for (size_t i = 0; i < nodes; ++i)
            _first[i + 1] += _first[i];
        _arcs.resize(_first[nodes]);
        _capacity.resize(_first[nodes]);
        vector<size_t> fill(_first.begin(), _first.end() - 1);
        for (auto & [from, to, cap] : arcs) {
            auto forward = fill[from]++;
            auto backward = fill[to]++;
            _arcs[forward] = {to, static_cast<uint32_t>(backward)};
            _arcs[backward] = {from, static_cast<uint32_t>(forward)};
            _capacity[forward] = cap;
            _capacity[backward] = 0;
        }
    }

    auto FlowNetworkView::disjoint_paths(VertexId u, VertexId v, size_t limit, bool want_separator) const -> FlowResult
    {
        if (u == v)
            throw UsageError("local connectivity needs two distinct vertices");
        if (u >= _g.vertex_count() || v >= _g.vertex_count())
            throw UsageError("vertex id out of range");

        FlowResult result;
        auto source = out_node(u);
        auto sink = in_node(v);
        if (_g.adjacent(u, v))
            result.paths = 1;

        auto residual = _capacity;
        auto nodes = 2 * _g.vertex_count();
        vector<uint32_t> parent_arc(nodes, no_arc);
        vector<uint32_t> queue;
        queue.reserve(nodes);

        auto search = [&]() -> bool {
            std::fill(parent_arc.begin(), parent_arc.end(), no_arc);
            queue.clear();
            queue.push_back(source);
            parent_arc[source] = static_cast<uint32_t>(_arcs.size());
            for (size_t head = 0; head < queue.size(); ++head) {
                auto node = queue[head];
                for (auto a = _first[node]; a < _first[node + 1]; ++a) {
                    auto to = _arcs[a].to;
                    if (residual[a] <= 0 || parent_arc[to] != no_arc)
                        continue;
                    // The edge uv itself is already counted.
                    if (node == source && to == sink)
                        continue;
                    parent_arc[to] = static_cast<uint32_t>(a);
                    if (to == sink)
                        return true;
                    queue.push_back(to);
                }
            }
            return false;
        };

        while (result.paths < limit && search()) {
            for (auto node = sink; node != source;) {
                auto a = parent_arc[node];
                --residual[a];
                ++residual[_arcs[a].reverse];
                node = _arcs[_arcs[a].reverse].to;
            }
            ++result.paths;
        }

        if (want_separator && ! _g.adjacent(u, v) && result.paths < limit) {
            // search() just failed, so parent_arc marks the residual-reachable side of a minimum cut.
            // Only internal arcs are finite, so the cut is a set of vertices.
            for (VertexId w = 0; w < _g.vertex_count(); ++w)
                if (w != u && w != v && parent_arc[in_node(w)] != no_arc && parent_arc[out_node(w)] == no_arc)
                    result.separator.push_back(w);
        }
        return result;
    }

    auto local_connectivity(const Graph & g, VertexId u, VertexId v) -> size_t
    {
        FlowNetworkView network{g};
        return network.disjoint_paths(u, v, std::numeric_limits<size_t>::max(), false).paths;
    }

    auto min_vertex_separator(const Graph & g, VertexId u, VertexId v) -> vector<VertexId>
    {
        if (u != v && g.adjacent(u, v))
            throw UsageError("adjacent vertices have no separating vertex set");
        FlowNetworkView network{g};
        return network.disjoint_paths(u, v, std::numeric_limits<size_t>::max(), true).separator;
    }

    auto vertex_connectivity(const Graph & g, unsigned jobs) -> ConnectivityResult
    {
        if (g.vertex_count() < 2)
            throw UsageError("vertex connectivity needs at least two vertices");
        ConnectivityResult result;
        if (! is_connected(g))
            return result;
        auto count = g.vertex_count();
        if (g.edge_count() == count * (count - 1) / 2) {
            result.kappa = count - 1;
            return result;
        }

        FlowNetworkView network{g};
        // Flows only need to run until they reach the best value so far; the minimum is unaffected.
        std::atomic<size_t> best{degree_stats(g).min_degree};
        std::atomic<size_t> calls{0};
        parallel_for(count, jobs, [&](size_t row) {
            auto u = static_cast<VertexId>(row);
            for (auto v = u + 1; v < count; ++v) {
                if (g.adjacent(u, v))
                    continue;
                calls.fetch_add(1, std::memory_order_relaxed);
                auto paths = network.disjoint_paths(u, v, best.load(std::memory_order_relaxed), false).paths;
                for (auto seen = best.load(); paths < seen && ! best.compare_exchange_weak(seen, paths);) {}
            }
        });
        result.kappa = best.load();
        result.flow_calls = calls.load();

        // Witness: the first non-adjacent pair in (u,v) order attaining kappa.
        for (VertexId u = 0; u < count && ! result.pair; ++u)
            for (auto v = u + 1; v < count; ++v) {
                if (g.adjacent(u, v))
                    continue;
                auto flow = network.disjoint_paths(u, v, result.kappa + 1, true);
                if (flow.paths == result.kappa) {
                    result.pair = Edge{u, v};
                    result.separator = std::move(flow.separator);
                    break;
                }
            }
        return result;
    }

    auto is_k_connected(const Graph & g, size_t k, unsigned jobs) -> bool
    {
        if (k < 1)
            throw UsageError("k-connectivity needs k >= 1");
        if (g.vertex_count() <= k)
            return false;
        return vertex_connectivity(g, jobs).kappa >= k;
    }

    auto random_deletion_trials(const Graph & g, size_t removed_count, size_t trials, std::uint64_t seed) -> DeletionTrials
    {
        auto count = g.vertex_count();
        if (removed_count >= count)
            throw UsageError("cannot delete that many vertices");
        std::mt19937_64 rng{seed};
        vector<VertexId> order(count);
        DeletionTrials result;
        result.trials = trials;
        for (size_t t = 0; t < trials; ++t) {
            for (VertexId v = 0; v < count; ++v)
                order[v] = v;
            vector<bool> removed(count, false);
            // Partial Fisher-Yates with plain modulo keeps the sequence identical across standard libraries.
            for (size_t i = 0; i < removed_count; ++i) {
                auto j = i + static_cast<size_t>(rng() % (count - i));
                std::swap(order[i], order[j]);
                removed[order[i]] = true;
            }
            if (! is_connected_without(g, removed) && result.failures++ == 0) {
                result.first_failing.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(removed_count));
                std::sort(result.first_failing.begin(), result.first_failing.end());
            }
        }
        return result;
    }

    auto is_vertex_cut(const Graph & g, const vector<VertexId> & cut) -> bool
    {
        vector<bool> removed(g.vertex_count(), false);
        for (auto v : cut) {
            if (v >= g.vertex_count())
                return false;
            removed[v] = true;
        }
        auto alive = static_cast<size_t>(std::count(removed.begin(), removed.end(), false));
        return alive <= 1 || ! is_connected_without(g, removed);
    }
}
