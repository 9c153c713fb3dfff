#include <panconnect/errors.hpp>
#include <panconnect/morphism.hpp>

#include <json.hpp>

#include <algorithm>

using nlohmann::json;
using std::make_shared;
using std::vector;

namespace panconnect
{
    auto certify_bijection(Bijection b) -> Bijection
    {
        if (! b.source || ! b.target)
            throw UsageError("bijection is missing a graph");
        const auto & source = *b.source;
        const auto & target = *b.target;
        if (b.map.size() != source.vertex_count())
            throw UsageError("vertex map is not total: " + std::to_string(b.map.size()) + " images for " +
                std::to_string(source.vertex_count()) + " source vertices");

        b.refutation.reset();
        if (source.vertex_count() != target.vertex_count()) {
            b.status = Certification::refuted;
            return b;
        }

        vector<VertexId> inverse(target.vertex_count(), static_cast<VertexId>(target.vertex_count()));
        for (VertexId u = 0; u < b.map.size(); ++u) {
            auto image = b.map[u];
            if (image >= target.vertex_count())
                throw UsageError("vertex map sends " + std::to_string(u) + " outside the target");
            if (inverse[image] != target.vertex_count())
                throw UsageError("vertex map is not injective: " + std::to_string(inverse[image]) + " and " +
                    std::to_string(u) + " share image " + std::to_string(image));
            inverse[image] = u;
        }

        for (VertexId u = 0; u < source.vertex_count(); ++u)
            for (auto v : source.neighbors(u))
                if (u < v && ! target.adjacent(b.map[u], b.map[v])) {
                    b.status = Certification::refuted;
                    b.refutation = Edge{u, v};
                    return b;
                }

        // Forward preservation is injective on edges, so a surplus target edge has a non-edge preimage.
        if (source.edge_count() != target.edge_count()) {
            for (auto [x, y] : target.edges()) {
                auto u = inverse[x], v = inverse[y];
                if (! source.adjacent(u, v)) {
                    b.status = Certification::refuted;
                    b.refutation = Edge{std::min(u, v), std::max(u, v)};
                    return b;
                }
            }
        }
        b.status = Certification::certified;
        return b;
    }

    namespace
    {
        auto certified_or_throw(Bijection b, const char * what) -> Bijection
        {
            b = certify_bijection(std::move(b));
            if (! b.certified()) {
                std::string witness = b.refutation
                    ? " at source pair {" + b.source->label(b.refutation->first).to_string() + "}, {" +
                        b.source->label(b.refutation->second).to_string() + "}"
                    : " (vertex counts differ)";
                throw InternalError(std::string{what} + " failed certification" + witness);
            }
            return b;
        }
    }

    auto layer_square_to_johnson_candidate(int n, int m) -> Bijection
    {
        auto layer = build_layer_graph(n, m);
        if (n + 1 > max_ground_size)
            throw UsageError("J(n+1,m+1) would exceed the 64-element ground set");
        Bijection b;
        b.source = make_shared<const Graph>(square(layer));
        b.target = make_shared<const Graph>(build_johnson(n + 1, m + 1));
        b.map.reserve(layer.vertex_count());
        const std::uint64_t extra = std::uint64_t{1} << n;
        for (const auto & label : layer.labels()) {
            auto bits = label.size() == m + 1 ? label.bits() : (label.bits() | extra);
            auto image = b.target->find_vertex(SubsetWord{bits, n + 1});
            if (! image)
                throw InternalError("image of " + label.to_string() + " is not a vertex of J(n+1,m+1)");
            b.map.push_back(*image);
        }
        return b;
    }

    auto layer_square_to_johnson_map(int n, int m) -> Bijection
    {
        return certified_or_throw(layer_square_to_johnson_candidate(n, m), "square(B(n,m)) -> J(n+1,m+1) map");
    }

    auto complementation_map(int n, int m) -> Bijection
    {
        Bijection b;
        b.source = make_shared<const Graph>(build_johnson(n, m));
        b.target = make_shared<const Graph>(build_johnson(n, n - m));
        b.map.reserve(b.source->vertex_count());
        for (const auto & label : b.source->labels())
            b.map.push_back(*b.target->find_vertex(complement(label)));
        return certified_or_throw(std::move(b), "complementation map");
    }

    auto replay_certificate(const Bijection & b) -> bool
    {
        if (! b.source || ! b.target || b.map.size() != b.source->vertex_count() ||
            b.source->vertex_count() != b.target->vertex_count() || b.source->edge_count() != b.target->edge_count())
            return false;
        vector<bool> hit(b.target->vertex_count(), false);
        for (auto image : b.map) {
            if (image >= hit.size() || hit[image])
                return false;
            hit[image] = true;
        }
        for (auto [u, v] : b.source->edges())
            if (! b.target->adjacent(b.map[u], b.map[v]))
                return false;
        return true;
    }

    auto meta_to_json(const Graph & g) -> json
    {
        return json{{"family", family_name(g.meta().family)}, {"n", g.meta().n}, {"m", g.meta().m},
            {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    }

    auto bijection_to_json(const Bijection & b) -> json
    {
        json out;
        out["source"] = meta_to_json(*b.source);
        out["target"] = meta_to_json(*b.target);
        out["map"] = b.map;
        out["certified"] = b.certified();
        out["refutation"] = b.refutation ? json{{"u", b.refutation->first}, {"v", b.refutation->second}} : json(nullptr);
        return out;
    }
}
