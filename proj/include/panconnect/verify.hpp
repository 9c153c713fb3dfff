#pragma once

#include <panconnect/graph.hpp>
#include <panconnect/paths.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace panconnect
{
    enum class Verdict
    {
        pass,
        fail,
        inconclusive
    };

    [[nodiscard]] auto verdict_name(Verdict v) -> std::string_view;

    struct VerifyOptions
    {
        /// Node budget per (pair, length) search.
        std::uint64_t budget = default_budget;
        unsigned jobs = 1;
        /// Keep every witness in the report. Witnesses are revalidated either way.
        bool retain_witnesses = false;
    };

    /// Outcomes for one vertex pair over the lengths min_length..max_length.
    struct PairResult
    {
        VertexId u = 0;
        VertexId v = 0;
        int distance = 0;
        std::size_t min_length = 0;
        std::size_t max_length = 0;
        /// outcomes[i] is for length min_length + i.
        std::vector<SearchOutcome> outcomes;
        std::vector<PathWitness> witnesses;
        std::uint64_t nodes_expanded = 0;

        [[nodiscard]] auto achieved(std::size_t length) const -> bool
        {
            return length >= min_length && length <= max_length &&
                outcomes[length - min_length] == SearchOutcome::found;
        }
    };

    /// A pair/length combination that could not be realized. `exhaustive` distinguishes
    /// NotFound (proof of absence) from BudgetExhausted.
    struct MissingPath
    {
        VertexId u = 0;
        VertexId v = 0;
        std::size_t length = 0;
        bool exhaustive = true;
    };

    enum class PathProperty
    {
        panconnected,
        hamilton_connected
    };

    struct PanReport
    {
        PathProperty property = PathProperty::panconnected;
        bool symmetry_reduced = false;
        std::vector<PairResult> pairs;
        Verdict verdict = Verdict::pass;
        /// NotFound at the largest pair distance, first in (u, v, length) order among those.
        std::optional<MissingPath> counterexample;
        /// BudgetExhausted chosen by the same rule.
        std::optional<MissingPath> first_inconclusive;
        std::uint64_t nodes_expanded = 0;
        std::size_t lengths_checked = 0;
    };

    /// Every unordered pair u < v and every length d(u,v)..|V|-1. Requires a connected graph with |V| >= 3.
    [[nodiscard]] auto verify_panconnected(const Graph & g, const VerifyOptions & options = {}) -> PanReport;

    /// Representative pairs ({1..m}, v_d) with |{1..m} & v_d| = m-d, d = 1..m, for J(n,m) only.
    /// Relies on distance-transitivity of Johnson graphs, which callers validate against the full sweep.
    [[nodiscard]] auto verify_panconnected_symmetry_reduced(const Graph & g, const VerifyOptions & options = {}) -> PanReport;

    /// Every pair at length |V|-1.
    [[nodiscard]] auto verify_hamilton_connected(const Graph & g, const VerifyOptions & options = {}) -> PanReport;

    /// True iff every pair of the full report achieves exactly the lengths its distance-class
    /// representative achieves, and the verdicts agree.
    [[nodiscard]] auto reduced_agrees_with_full(const Graph & g, const PanReport & full, const PanReport & reduced) -> bool;

    struct CycleLengthResult
    {
        std::size_t length = 0;
        SearchOutcome outcome = SearchOutcome::not_found;
        std::optional<CycleWitness> witness;
        std::uint64_t nodes_expanded = 0;
    };

    struct PancyclicReport
    {
        std::vector<CycleLengthResult> lengths;
        Verdict verdict = Verdict::pass;
        /// Smallest length with no cycle at all.
        std::optional<std::size_t> counterexample;
        std::optional<std::size_t> first_inconclusive;
        std::uint64_t nodes_expanded = 0;
    };

    /// Cycle lengths 3..|V|. Requires |V| >= 3.
    [[nodiscard]] auto verify_pancyclic(const Graph & g, const VerifyOptions & options = {}) -> PancyclicReport;
}
