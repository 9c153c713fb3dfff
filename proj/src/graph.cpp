#include <panconnect/errors.hpp>
#include <panconnect/graph.hpp>
#include <panconnect/kernels.hpp>

#include <algorithm>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace panconnect
{
    auto family_name(Family f) -> std::string_view
    {
        switch (f) {
        case Family::johnson: return "johnson";
        case Family::layer: return "layer";
        case Family::raw: return "raw";
        }
        return "raw";
    }

    auto parse_family(std::string_view text) -> Family
    {
        if (text == "johnson")
            return Family::johnson;
        if (text == "layer")
            return Family::layer;
        if (text == "raw")
            return Family::raw;
        throw UsageError("unknown graph family '" + string{text} + "' (expected johnson, layer or raw)");
    }

    auto Graph::from_edges(vector<SubsetWord> labels, std::span<const Edge> edges, GraphMeta meta) -> Graph
    {
        vector<vector<VertexId>> adjacency(labels.size());
        for (auto [u, v] : edges) {
            if (u >= labels.size() || v >= labels.size())
                throw UsageError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} references a missing vertex");
            adjacency[u].push_back(v);
            adjacency[v].push_back(u);
        }
        return from_adjacency(std::move(labels), std::move(adjacency), meta);
    }

    auto Graph::from_adjacency(vector<SubsetWord> labels, vector<vector<VertexId>> adjacency, GraphMeta meta) -> Graph
    {
        if (adjacency.size() != labels.size())
            throw UsageError("adjacency and label table sizes differ");

        Graph g;
        g._meta = meta;
        g._offsets.assign(labels.size() + 1, 0);
        size_t total = 0;
        for (size_t v = 0; v < adjacency.size(); ++v) {
            auto & list = adjacency[v];
            std::sort(list.begin(), list.end());
            if (std::adjacent_find(list.begin(), list.end()) != list.end())
                throw UsageError("duplicate edge at vertex " + std::to_string(v));
            for (auto w : list) {
                if (w >= labels.size())
                    throw UsageError("neighbor id " + std::to_string(w) + " out of range");
                if (w == v)
                    throw UsageError("loop at vertex " + std::to_string(v));
            }
            total += list.size();
            g._offsets[v + 1] = total;
        }
        g._targets.reserve(total);
        for (auto & list : adjacency)
            g._targets.insert(g._targets.end(), list.begin(), list.end());

        for (VertexId v = 0; v < labels.size(); ++v)
            for (auto w : g.neighbors(v))
                if (! std::binary_search(g.neighbors(w).begin(), g.neighbors(w).end(), v))
                    throw UsageError("adjacency is not symmetric at {" + std::to_string(v) + "," + std::to_string(w) + "}");
        g._edge_count = total / 2;

        if (! labels.empty()) {
            int ground = labels.front().ground_n();
            for (const auto & l : labels)
                if (l.ground_n() != ground)
                    throw UsageError("vertex labels use different ground sets");
        }
        g._label_index.reserve(labels.size());
        for (VertexId v = 0; v < labels.size(); ++v)
            g._label_index.emplace_back(labels[v].bits(), v);
        std::sort(g._label_index.begin(), g._label_index.end());
        for (size_t i = 1; i < g._label_index.size(); ++i)
            if (g._label_index[i - 1].first == g._label_index[i].first)
                throw UsageError("duplicate vertex label " + labels[g._label_index[i].second].to_string());
        g._labels = std::move(labels);
        return g;
    }

    auto Graph::adjacent(VertexId u, VertexId v) const -> bool
    {
        auto list = neighbors(u);
        return std::binary_search(list.begin(), list.end(), v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (auto v : neighbors(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::find_vertex(const SubsetWord & label) const -> std::optional<VertexId>
    {
        if (_labels.empty() || label.ground_n() != _labels.front().ground_n())
            return std::nullopt;
        auto it = std::lower_bound(_label_index.begin(), _label_index.end(), std::pair{label.bits(), VertexId{0}});
        if (it == _label_index.end() || it->first != label.bits())
            return std::nullopt;
        return it->second;
    }

    auto Graph::describe() const -> string
    {
        switch (_meta.family) {
        case Family::johnson: return "J(" + std::to_string(_meta.n) + "," + std::to_string(_meta.m) + ")";
        case Family::layer: return "B(" + std::to_string(_meta.n) + "," + std::to_string(_meta.m) + ")";
        case Family::raw: break;
        }
        return "raw(" + std::to_string(vertex_count()) + " vertices)";
    }

    namespace
    {
        auto words_of(const vector<SubsetWord> & subsets) -> vector<uint64_t>
        {
            vector<uint64_t> words;
            words.reserve(subsets.size());
            for (const auto & s : subsets)
                words.push_back(s.bits());
            return words;
        }
    }

    auto build_johnson(int n, int m) -> Graph
    {
        if (n < 2 || n > max_ground_size || m < 1 || m >= n)
            throw UsageError("J(n,m) requires 1 <= m < n <= 64, got n=" + std::to_string(n) + " m=" + std::to_string(m));
        auto labels = enumerate_k_subsets(n, m);
        auto words = words_of(labels);
        vector<vector<VertexId>> adjacency(labels.size());
        for (size_t v = 0; v < words.size(); ++v)
            kernels::select_xor_popcount(words, words[v], 2, 0, adjacency[v]);
        return Graph::from_adjacency(std::move(labels), std::move(adjacency), {Family::johnson, n, m});
    }

    auto build_layer_graph(int n, int m) -> Graph
    {
        if (n < 3 || n > max_ground_size)
            throw UsageError("B(n,m) requires 3 <= n <= 64, got n=" + std::to_string(n));
        if (m < 1 || 2 * m >= n)
            throw UsageError("B(n,m) requires 1 <= m < n/2 (the layer graph precondition), got n=" + std::to_string(n) +
                " m=" + std::to_string(m));
        auto lower = enumerate_k_subsets(n, m);
        auto upper = enumerate_k_subsets(n, m + 1);
        auto lower_words = words_of(lower);
        auto upper_words = words_of(upper);
        auto lower_count = static_cast<VertexId>(lower.size());

        // Between adjacent layers, containment is exactly |v xor w| == 1.
        vector<vector<VertexId>> adjacency(lower.size() + upper.size());
        for (size_t v = 0; v < lower_words.size(); ++v)
            kernels::select_xor_popcount(upper_words, lower_words[v], 1, lower_count, adjacency[v]);
        for (size_t w = 0; w < upper_words.size(); ++w)
            kernels::select_xor_popcount(lower_words, upper_words[w], 1, 0, adjacency[lower_count + w]);

        auto labels = std::move(lower);
        labels.insert(labels.end(), upper.begin(), upper.end());
        return Graph::from_adjacency(std::move(labels), std::move(adjacency), {Family::layer, n, m});
    }

    auto square(const Graph & g) -> Graph
    {
        auto count = g.vertex_count();
        size_t stride = (count + 63) / 64;
        vector<uint64_t> base(count * stride, 0);
        for (VertexId v = 0; v < count; ++v)
            for (auto w : g.neighbors(v))
                base[v * stride + w / 64] |= uint64_t{1} << (w % 64);

        vector<vector<VertexId>> adjacency(count);
        vector<uint64_t> row(stride);
        for (VertexId v = 0; v < count; ++v) {
            std::copy_n(base.begin() + static_cast<std::ptrdiff_t>(v * stride), stride, row.begin());
            for (auto w : g.neighbors(v))
                kernels::or_into(row, std::span<const uint64_t>{base.data() + w * stride, stride});
            row[v / 64] &= ~(uint64_t{1} << (v % 64));
            auto & list = adjacency[v];
            list.reserve(kernels::popcount_words(row));
            for (size_t word = 0; word < stride; ++word)
                for (uint64_t rest = row[word]; rest != 0; rest &= rest - 1)
                    list.push_back(static_cast<VertexId>(word * 64 + static_cast<size_t>(std::countr_zero(rest))));
        }
        vector<SubsetWord> labels(g.labels().begin(), g.labels().end());
        return Graph::from_adjacency(std::move(labels), std::move(adjacency), {Family::raw, g.meta().n, g.meta().m});
    }

    auto make_raw_graph(size_t count, std::span<const Edge> edges) -> Graph
    {
        if (count < 1 || count > static_cast<size_t>(max_ground_size))
            throw UsageError("raw graphs carry singleton labels and need 1..64 vertices");
        vector<SubsetWord> labels;
        for (size_t i = 0; i < count; ++i)
            labels.emplace_back(uint64_t{1} << i, static_cast<int>(count));
        return Graph::from_edges(std::move(labels), edges, {Family::raw, static_cast<int>(count), 1});
    }

    auto make_cycle(size_t count) -> Graph
    {
        if (count < 3)
            throw UsageError("a cycle needs at least 3 vertices");
        vector<Edge> edges;
        for (size_t i = 0; i < count; ++i)
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % count));
        return make_raw_graph(count, edges);
    }

    auto make_path(size_t count) -> Graph
    {
        vector<Edge> edges;
        for (size_t i = 0; i + 1 < count; ++i)
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
        return make_raw_graph(count, edges);
    }

    auto make_complete(size_t count) -> Graph
    {
        vector<Edge> edges;
        for (size_t i = 0; i < count; ++i)
            for (size_t j = i + 1; j < count; ++j)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        return make_raw_graph(count, edges);
    }

    auto bfs_distances(const Graph & g, VertexId source) -> vector<int>
    {
        if (source >= g.vertex_count())
            throw UsageError("BFS source " + std::to_string(source) + " out of range");
        vector<int> dist(g.vertex_count(), unreachable);
        vector<VertexId> queue;
        queue.reserve(g.vertex_count());
        dist[source] = 0;
        queue.push_back(source);
        for (size_t head = 0; head < queue.size(); ++head) {
            auto v = queue[head];
            for (auto w : g.neighbors(v))
                if (dist[w] == unreachable) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    auto degree_stats(const Graph & g) -> DegreeStats
    {
        DegreeStats stats;
        if (g.vertex_count() == 0)
            return stats;
        stats.min_degree = stats.max_degree = g.degree(0);
        for (VertexId v = 1; v < g.vertex_count(); ++v) {
            stats.min_degree = std::min(stats.min_degree, g.degree(v));
            stats.max_degree = std::max(stats.max_degree, g.degree(v));
        }
        stats.regular = stats.min_degree == stats.max_degree;
        return stats;
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.vertex_count() == 0)
            throw UsageError("connectivity of the empty graph is undefined");
        auto dist = bfs_distances(g, 0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d == unreachable; });
    }

    auto is_connected_without(const Graph & g, const vector<bool> & removed) -> bool
    {
        auto start = std::find(removed.begin(), removed.end(), false);
        if (start == removed.end())
            return true;
        vector<bool> seen(removed);
        vector<VertexId> stack{static_cast<VertexId>(start - removed.begin())};
        seen[stack.back()] = true;
        size_t reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v))
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        auto alive = static_cast<size_t>(std::count(removed.begin(), removed.end(), false));
        return reached == alive;
    }
}
