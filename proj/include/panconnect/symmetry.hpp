#pragma once

#include <panconnect/graph.hpp>
#include <panconnect/errors.hpp>

#include <optional>
#include <string>
#include <vector>

namespace panconnect
{
    /// A permutation of [n] in one-line notation: images[i-1] is the image of i.
    class Permutation
    {
    public:
        /// Throws UsageError unless `images` is a permutation of 1..n with n <= 64.
        explicit Permutation(std::vector<int> images);

        static auto identity(int n) -> Permutation;
        /// The transposition swapping i and j (1-based).
        static auto transposition(int n, int i, int j) -> Permutation;
        /// The cycle 1 -> 2 -> ... -> n -> 1.
        static auto rotation(int n) -> Permutation;

        [[nodiscard]] auto degree() const noexcept -> int { return static_cast<int>(_images.size()); }
        [[nodiscard]] auto operator()(int i) const -> int { return _images.at(static_cast<std::size_t>(i - 1)); }
        [[nodiscard]] auto images() const noexcept -> const std::vector<int> & { return _images; }

        friend auto operator==(const Permutation &, const Permutation &) -> bool = default;

    private:
        std::vector<int> _images;
    };

    /// (p o q)(i) = p(q(i)).
    [[nodiscard]] auto compose(const Permutation & p, const Permutation & q) -> Permutation;

    /// {p(i) : i in a}. Throws UsageError if p and a live over different ground sets.
    [[nodiscard]] auto apply_permutation_to_vertex(const Permutation & p, const SubsetWord & a) -> SubsetWord;

    /// A map on vertex labels: either an element permutation, or the layer swap a -> [n] \ a.
    class LabelAction
    {
    public:
        static auto permutation(Permutation p) -> LabelAction;
        static auto layer_swap(int n) -> LabelAction;

        [[nodiscard]] auto apply(const SubsetWord & a) const -> SubsetWord;
        [[nodiscard]] auto describe() const -> std::string;
        [[nodiscard]] auto is_layer_swap() const noexcept -> bool { return ! _perm.has_value(); }

    private:
        LabelAction() = default;
        std::optional<Permutation> _perm;
        int _n = 0;
    };

    /// Thrown when a generator fails to be an automorphism of the graph it is asked to act on.
    class NotAnAutomorphism : public UsageError
    {
    public:
        NotAnAutomorphism(const std::string & what, std::optional<Edge> witness) : UsageError(what), witness(witness) {}
        /// A source edge whose image is not an edge; empty when a label image is not a vertex.
        std::optional<Edge> witness;
    };

    /// Vertex permutation induced by the action. Throws NotAnAutomorphism unless it is an automorphism of g.
    [[nodiscard]] auto induced_automorphism(const Graph & g, const LabelAction & action) -> std::vector<VertexId>;

    /// Adjacent transpositions (i i+1), i = 1..n-1, over the label ground set of a johnson or layer
    /// graph, plus the layer swap for B(2m+1,m). Throws UsageError for raw graphs.
    [[nodiscard]] auto default_generators(const Graph & g) -> std::vector<LabelAction>;

    /// Closure of `seed` under the generators, sorted ascending.
    [[nodiscard]] auto vertex_orbit(const Graph & g, VertexId seed, const std::vector<LabelAction> & generators)
        -> std::vector<VertexId>;

    /// Closure of the edge `seed` under the generators, sorted lexicographically.
    [[nodiscard]] auto edge_orbit(const Graph & g, Edge seed, const std::vector<LabelAction> & generators) -> std::vector<Edge>;

    /// Orbits covering all vertices, ordered by smallest member.
    [[nodiscard]] auto vertex_orbits(const Graph & g, const std::vector<LabelAction> & generators)
        -> std::vector<std::vector<VertexId>>;

    /// Orbits covering all edges, ordered by smallest member.
    [[nodiscard]] auto edge_orbits(const Graph & g, const std::vector<LabelAction> & generators) -> std::vector<std::vector<Edge>>;

    enum class TransitivityBasis
    {
        /// One orbit under the generated group: proves transitivity.
        generated_subgroup,
        /// Degrees differ, so no automorphism group can be vertex-transitive.
        irregular_degrees,
        /// Several orbits under the generated group but regular: no conclusion.
        undetermined
    };

    [[nodiscard]] auto basis_name(TransitivityBasis basis) -> std::string_view;

    struct VertexTransitivity
    {
        bool transitive = false;
        TransitivityBasis basis = TransitivityBasis::undetermined;
        std::vector<std::vector<VertexId>> orbits;
        /// For irregular graphs: a minimum-degree and a maximum-degree vertex.
        std::optional<Edge> degree_witness;
    };

    struct EdgeTransitivity
    {
        bool transitive = false;
        std::vector<std::vector<Edge>> orbits;
    };

    [[nodiscard]] auto check_vertex_transitive(const Graph & g, const std::vector<LabelAction> & generators)
        -> VertexTransitivity;
    [[nodiscard]] auto check_edge_transitive(const Graph & g, const std::vector<LabelAction> & generators) -> EdgeTransitivity;
}
