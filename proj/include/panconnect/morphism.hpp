#pragma once

#include <panconnect/graph.hpp>

#include <json.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace panconnect
{
    enum class Certification
    {
        unchecked,
        certified,
        refuted
    };

    /// A vertex map between two graphs. `map[u]` is the target id of source vertex u.
    struct Bijection
    {
        std::shared_ptr<const Graph> source;
        std::shared_ptr<const Graph> target;
        std::vector<VertexId> map;
        Certification status = Certification::unchecked;
        /// Source pair whose adjacency the map fails to preserve. Empty for a certified map,
        /// and also for a refutation caused by differing vertex counts.
        std::optional<Edge> refutation;

        [[nodiscard]] auto certified() const noexcept -> bool { return status == Certification::certified; }
    };

    /// Certified iff the map is a permutation and preserves every source edge while the
    /// edge counts agree. Throws UsageError if the map is not total or, between equal-sized
    /// graphs, not a permutation of target ids.
    [[nodiscard]] auto certify_bijection(Bijection b) -> Bijection;

    /// square(B(n,m)) -> J(n+1,m+1): an (m+1)-set maps to itself, an m-set v to v + {n+1}.
    /// The candidate is returned unchecked.
    [[nodiscard]] auto layer_square_to_johnson_candidate(int n, int m) -> Bijection;

    /// The same map, certified; throws InternalError with the offending edge if certification fails.
    [[nodiscard]] auto layer_square_to_johnson_map(int n, int m) -> Bijection;

    /// J(n,m) -> J(n,n-m) by complementing each label; returned certified.
    [[nodiscard]] auto complementation_map(int n, int m) -> Bijection;

    /// Replays a certified bijection against its graphs without trusting `status`.
    [[nodiscard]] auto replay_certificate(const Bijection & b) -> bool;

    [[nodiscard]] auto meta_to_json(const Graph & g) -> nlohmann::json;

    /// {"source":meta,"target":meta,"map":[...],"certified":bool,"refutation":null|{"u","v"}}
    [[nodiscard]] auto bijection_to_json(const Bijection & b) -> nlohmann::json;
}
