#include <panconnect/symmetry.hpp>

#include <algorithm>
#include <numeric>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace panconnect
{
    Permutation::Permutation(vector<int> images) : _images(std::move(images))
    {
        auto n = _images.size();
        if (n < 1 || n > static_cast<size_t>(max_ground_size))
            throw UsageError("permutations act on [n] with 1 <= n <= 64");
        vector<bool> seen(n + 1, false);
        for (int image : _images) {
            if (image < 1 || static_cast<size_t>(image) > n || seen[static_cast<size_t>(image)])
                throw UsageError("images do not form a permutation of [" + std::to_string(n) + "]");
            seen[static_cast<size_t>(image)] = true;
        }
    }

    auto Permutation::identity(int n) -> Permutation
    {
        vector<int> images(static_cast<size_t>(std::max(n, 0)));
        std::iota(images.begin(), images.end(), 1);
        return Permutation{std::move(images)};
    }

    auto Permutation::transposition(int n, int i, int j) -> Permutation
    {
        auto p = identity(n);
        if (i < 1 || j < 1 || i > n || j > n)
            throw UsageError("transposition points outside [" + std::to_string(n) + "]");
        std::swap(p._images[static_cast<size_t>(i - 1)], p._images[static_cast<size_t>(j - 1)]);
        return p;
    }

    auto Permutation::rotation(int n) -> Permutation
    {
        vector<int> images(static_cast<size_t>(std::max(n, 0)));
        for (int i = 1; i <= n; ++i)
            images[static_cast<size_t>(i - 1)] = i % n + 1;
        return Permutation{std::move(images)};
    }

    auto compose(const Permutation & p, const Permutation & q) -> Permutation
    {
        if (p.degree() != q.degree())
            throw UsageError("cannot compose permutations of different degrees");
        vector<int> images(static_cast<size_t>(p.degree()));
        for (int i = 1; i <= p.degree(); ++i)
            images[static_cast<size_t>(i - 1)] = p(q(i));
        return Permutation{std::move(images)};
    }

    auto apply_permutation_to_vertex(const Permutation & p, const SubsetWord & a) -> SubsetWord
    {
        if (p.degree() != a.ground_n())
            throw UsageError("permutation of [" + std::to_string(p.degree()) + "] applied to a subset of [" +
                std::to_string(a.ground_n()) + "]");
        std::uint64_t image = 0;
        for (std::uint64_t rest = a.bits(); rest != 0; rest &= rest - 1)
            image |= std::uint64_t{1} << (p(std::countr_zero(rest) + 1) - 1);
        return SubsetWord{image, a.ground_n()};
    }

    auto LabelAction::permutation(Permutation p) -> LabelAction
    {
        LabelAction action;
        action._n = p.degree();
        action._perm = std::move(p);
        return action;
    }

    auto LabelAction::layer_swap(int n) -> LabelAction
    {
        if (n < 1 || n > max_ground_size)
            throw UsageError("layer swap needs 1 <= n <= 64");
        LabelAction action;
        action._n = n;
        return action;
    }

    auto LabelAction::apply(const SubsetWord & a) const -> SubsetWord
    {
        if (_perm)
            return apply_permutation_to_vertex(*_perm, a);
        if (a.ground_n() != _n)
            throw UsageError("layer swap over [" + std::to_string(_n) + "] applied to a subset of [" +
                std::to_string(a.ground_n()) + "]");
        return complement(a);
    }

    auto LabelAction::describe() const -> string
    {
        if (! _perm)
            return "layer-swap";
        string out = "[";
        for (auto image : _perm->images()) {
            if (out.size() > 1)
                out += ',';
            out += std::to_string(image);
        }
        return out + "]";
    }

    auto induced_automorphism(const Graph & g, const LabelAction & action) -> vector<VertexId>
    {
        vector<VertexId> map(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto image = g.find_vertex(action.apply(g.label(v)));
            if (! image)
                throw NotAnAutomorphism("generator " + action.describe() + " sends vertex " + g.label(v).to_string() +
                        " outside " + g.describe(),
                    std::nullopt);
            map[v] = *image;
        }
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (auto v : g.neighbors(u))
                if (u < v && ! g.adjacent(map[u], map[v]))
                    throw NotAnAutomorphism("generator " + action.describe() + " maps edge {" + g.label(u).to_string() +
                            "}-{" + g.label(v).to_string() + "} to a non-edge of " + g.describe(),
                        Edge{u, v});
        return map;
    }

    auto default_generators(const Graph & g) -> vector<LabelAction>
    {
        const auto & meta = g.meta();
        if (meta.family == Family::raw)
            throw UsageError("raw graphs have no default symmetry generators");
        vector<LabelAction> generators;
        for (int i = 1; i < meta.n; ++i)
            generators.push_back(LabelAction::permutation(Permutation::transposition(meta.n, i, i + 1)));
        if (meta.family == Family::layer && meta.n == 2 * meta.m + 1)
            generators.push_back(LabelAction::layer_swap(meta.n));
        return generators;
    }

    namespace
    {
        auto induced_maps(const Graph & g, const vector<LabelAction> & generators) -> vector<vector<VertexId>>
        {
            vector<vector<VertexId>> maps;
            maps.reserve(generators.size());
            for (const auto & action : generators)
                maps.push_back(induced_automorphism(g, action));
            return maps;
        }

        auto normalized(VertexId u, VertexId v) -> Edge
        {
            return u < v ? Edge{u, v} : Edge{v, u};
        }

        // Breadth-first closure over integer-indexed items; `image(i, map)` gives the index of the image.
        template <typename ImageFn>
        auto closure(size_t item_count, size_t seed, const vector<vector<VertexId>> & maps, ImageFn image,
            vector<bool> & seen) -> vector<size_t>
        {
            vector<size_t> members{seed};
            seen[seed] = true;
            for (size_t head = 0; head < members.size(); ++head)
                for (const auto & map : maps) {
                    auto next = image(members[head], map);
                    if (next < item_count && ! seen[next]) {
                        seen[next] = true;
                        members.push_back(next);
                    }
                }
            std::sort(members.begin(), members.end());
            return members;
        }

        auto edge_index(const vector<Edge> & edges, Edge e) -> size_t
        {
            auto it = std::lower_bound(edges.begin(), edges.end(), e);
            return static_cast<size_t>(it - edges.begin());
        }
    }

    auto vertex_orbit(const Graph & g, VertexId seed, const vector<LabelAction> & generators) -> vector<VertexId>
    {
        if (seed >= g.vertex_count())
            throw UsageError("orbit seed out of range");
        auto maps = induced_maps(g, generators);
        vector<bool> seen(g.vertex_count(), false);
        auto members = closure(g.vertex_count(), seed, maps, [](size_t v, const vector<VertexId> & map) { return map[v]; }, seen);
        return {members.begin(), members.end()};
    }

    auto edge_orbit(const Graph & g, Edge seed, const vector<LabelAction> & generators) -> vector<Edge>
    {
        auto edges = g.edges();
        auto start = edge_index(edges, normalized(seed.first, seed.second));
        if (start >= edges.size() || edges[start] != normalized(seed.first, seed.second))
            throw UsageError("orbit seed is not an edge");
        auto maps = induced_maps(g, generators);
        vector<bool> seen(edges.size(), false);
        auto members = closure(
            edges.size(), start, maps,
            [&](size_t e, const vector<VertexId> & map) {
                return edge_index(edges, normalized(map[edges[e].first], map[edges[e].second]));
            },
            seen);
        vector<Edge> result;
        for (auto i : members)
            result.push_back(edges[i]);
        return result;
    }

    auto vertex_orbits(const Graph & g, const vector<LabelAction> & generators) -> vector<vector<VertexId>>
    {
        auto maps = induced_maps(g, generators);
        vector<bool> seen(g.vertex_count(), false);
        vector<vector<VertexId>> orbits;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (! seen[v]) {
                auto members = closure(g.vertex_count(), v, maps, [](size_t x, const vector<VertexId> & map) { return map[x]; }, seen);
                orbits.emplace_back(members.begin(), members.end());
            }
        return orbits;
    }

    auto edge_orbits(const Graph & g, const vector<LabelAction> & generators) -> vector<vector<Edge>>
    {
        auto maps = induced_maps(g, generators);
        auto edges = g.edges();
        vector<bool> seen(edges.size(), false);
        vector<vector<Edge>> orbits;
        auto image = [&](size_t e, const vector<VertexId> & map) {
            return edge_index(edges, normalized(map[edges[e].first], map[edges[e].second]));
        };
        for (size_t e = 0; e < edges.size(); ++e)
            if (! seen[e]) {
                vector<Edge> orbit;
                for (auto i : closure(edges.size(), e, maps, image, seen))
                    orbit.push_back(edges[i]);
                orbits.push_back(std::move(orbit));
            }
        return orbits;
    }

    auto basis_name(TransitivityBasis basis) -> std::string_view
    {
        switch (basis) {
        case TransitivityBasis::generated_subgroup: return "generated-subgroup";
        case TransitivityBasis::irregular_degrees: return "irregular-degrees";
        case TransitivityBasis::undetermined: return "undetermined";
        }
        return "undetermined";
    }

    auto check_vertex_transitive(const Graph & g, const vector<LabelAction> & generators) -> VertexTransitivity
    {
        VertexTransitivity result;
        result.orbits = vertex_orbits(g, generators);
        if (result.orbits.size() == 1) {
            result.transitive = true;
            result.basis = TransitivityBasis::generated_subgroup;
            return result;
        }
        auto stats = degree_stats(g);
        if (! stats.regular) {
            optional<VertexId> low, high;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (! low && g.degree(v) == stats.min_degree)
                    low = v;
                if (! high && g.degree(v) == stats.max_degree)
                    high = v;
            }
            result.basis = TransitivityBasis::irregular_degrees;
            result.degree_witness = Edge{*low, *high};
        }
        return result;
    }

    auto check_edge_transitive(const Graph & g, const vector<LabelAction> & generators) -> EdgeTransitivity
    {
        EdgeTransitivity result;
        result.orbits = edge_orbits(g, generators);
        result.transitive = result.orbits.size() <= 1;
        return result;
    }
}
