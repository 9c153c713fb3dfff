#include <panconnect/paths.hpp>

#include <algorithm>
#include <set>

namespace panconnect
{
    namespace
    {
        auto linked(const Graph & g, VertexId a, VertexId b) -> bool
        {
            auto list = g.neighbors(a);
            return std::find(list.begin(), list.end(), b) != list.end();
        }

        auto all_distinct_and_valid(const Graph & g, const std::vector<VertexId> & vertices) -> bool
        {
            std::set<VertexId> seen;
            for (auto x : vertices)
                if (x >= g.vertex_count() || ! seen.insert(x).second)
                    return false;
            return true;
        }
    }

    auto is_valid_path(const Graph & g, const PathWitness & w, VertexId u, VertexId v) -> bool
    {
        const auto & p = w.vertices;
        if (p.size() != w.target_length + 1 || p.front() != u || p.back() != v)
            return false;
        if (! all_distinct_and_valid(g, p))
            return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (! linked(g, p[i], p[i + 1]))
                return false;
        return true;
    }

    auto is_valid_cycle(const Graph & g, const CycleWitness & w) -> bool
    {
        const auto & c = w.vertices;
        if (c.size() < 3 || c.size() > g.vertex_count() || ! all_distinct_and_valid(g, c))
            return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (! linked(g, c[i], c[(i + 1) % c.size()]))
                return false;
        return true;
    }
}
