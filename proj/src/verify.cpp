#include <panconnect/errors.hpp>
#include <panconnect/parallel.hpp>
#include <panconnect/verify.hpp>

#include <algorithm>

using std::size_t;
using std::vector;

namespace panconnect
{
    auto verdict_name(Verdict v) -> std::string_view
    {
        switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
        }
        return "inconclusive";
    }

    namespace
    {
        auto require_searchable(const Graph & g) -> void
        {
            if (g.vertex_count() < 3)
                throw UsageError("path-property verification needs at least 3 vertices");
            if (! is_connected(g))
                throw UsageError(g.describe() + " is disconnected");
        }

        auto run_pairs(const Graph & g, vector<Edge> pairs, PathProperty property, const VerifyOptions & options,
            bool reduced) -> PanReport
        {
            PanReport report;
            report.property = property;
            report.symmetry_reduced = reduced;
            report.pairs.resize(pairs.size());

            // One distance table per distinct target, shared read-only by all tasks.
            vector<vector<int>> dist_to(g.vertex_count());
            for (auto [u, v] : pairs)
                if (dist_to[v].empty())
                    dist_to[v] = bfs_distances(g, v);

            auto last = g.vertex_count() - 1;
            parallel_for(pairs.size(), options.jobs, [&](size_t index) {
                auto [u, v] = pairs[index];
                const auto & dist = dist_to[v];
                auto & row = report.pairs[index];
                row.u = u;
                row.v = v;
                row.distance = dist[u];
                row.min_length = property == PathProperty::panconnected ? static_cast<size_t>(dist[u]) : last;
                row.max_length = last;
                for (auto length = row.min_length; length <= row.max_length; ++length) {
                    auto found = find_path_of_length(g, u, v, length, options.budget, dist);
                    row.nodes_expanded += found.nodes_expanded;
                    row.outcomes.push_back(found.outcome);
                    if (found.outcome != SearchOutcome::found)
                        continue;
                    if (! is_valid_path(g, *found.witness, u, v))
                        throw InternalError("path search produced an invalid witness for pair (" + std::to_string(u) +
                            "," + std::to_string(v) + ") length " + std::to_string(length));
                    if (options.retain_witnesses)
                        row.witnesses.push_back(std::move(*found.witness));
                }
            });

            // Reported misses come from the farthest pair, ties broken by (u, v, length).
            int missing_distance = -1, inconclusive_distance = -1;
            for (const auto & row : report.pairs) {
                report.nodes_expanded += row.nodes_expanded;
                report.lengths_checked += row.outcomes.size();
                for (size_t i = 0; i < row.outcomes.size(); ++i) {
                    MissingPath missing{row.u, row.v, row.min_length + i, true};
                    if (row.outcomes[i] == SearchOutcome::not_found && row.distance > missing_distance) {
                        report.counterexample = missing;
                        missing_distance = row.distance;
                    }
                    if (row.outcomes[i] == SearchOutcome::budget_exhausted && row.distance > inconclusive_distance) {
                        missing.exhaustive = false;
                        report.first_inconclusive = missing;
                        inconclusive_distance = row.distance;
                    }
                }
            }
            report.verdict = report.counterexample ? Verdict::fail
                : report.first_inconclusive        ? Verdict::inconclusive
                                                   : Verdict::pass;
            return report;
        }

        auto all_pairs(const Graph & g) -> vector<Edge>
        {
            vector<Edge> pairs;
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                for (auto v = u + 1; v < g.vertex_count(); ++v)
                    pairs.emplace_back(u, v);
            return pairs;
        }
    }

    auto verify_panconnected(const Graph & g, const VerifyOptions & options) -> PanReport
    {
        require_searchable(g);
        return run_pairs(g, all_pairs(g), PathProperty::panconnected, options, false);
    }

    auto verify_hamilton_connected(const Graph & g, const VerifyOptions & options) -> PanReport
    {
        require_searchable(g);
        return run_pairs(g, all_pairs(g), PathProperty::hamilton_connected, options, false);
    }

    auto verify_panconnected_symmetry_reduced(const Graph & g, const VerifyOptions & options) -> PanReport
    {
        const auto & meta = g.meta();
        if (meta.family != Family::johnson)
            throw UsageError("symmetry-reduced verification applies to Johnson graphs only");
        require_searchable(g);
        auto base = *g.find_vertex(SubsetWord{full_mask(meta.m), meta.n});
        vector<Edge> pairs;
        for (int d = 1; d <= std::min(meta.m, meta.n - meta.m); ++d) {
            // Keep {1..m-d}, swap in {m+1..m+d}.
            auto bits = full_mask(meta.m - d) | (full_mask(d) << meta.m);
            pairs.emplace_back(base, *g.find_vertex(SubsetWord{bits, meta.n}));
        }
        return run_pairs(g, std::move(pairs), PathProperty::panconnected, options, true);
    }

    auto reduced_agrees_with_full(const Graph & g, const PanReport & full, const PanReport & reduced) -> bool
    {
        if (full.verdict != reduced.verdict || ! reduced.symmetry_reduced || full.symmetry_reduced)
            return false;
        for (const auto & row : full.pairs) {
            auto d = static_cast<int>(g.meta().m) - intersect_size(g.label(row.u), g.label(row.v));
            auto rep = std::find_if(reduced.pairs.begin(), reduced.pairs.end(),
                [&](const PairResult & r) { return r.distance == d; });
            if (rep == reduced.pairs.end() || rep->min_length != row.min_length || rep->max_length != row.max_length ||
                rep->outcomes != row.outcomes)
                return false;
        }
        return true;
    }

    auto verify_pancyclic(const Graph & g, const VerifyOptions & options) -> PancyclicReport
    {
        if (g.vertex_count() < 3)
            throw UsageError("pancyclicity needs at least 3 vertices");
        PancyclicReport report;
        report.lengths.resize(g.vertex_count() - 2);
        parallel_for(report.lengths.size(), options.jobs, [&](size_t index) {
            auto & entry = report.lengths[index];
            entry.length = index + 3;
            auto found = find_cycle_of_length(g, entry.length, options.budget);
            entry.outcome = found.outcome;
            entry.nodes_expanded = found.nodes_expanded;
            if (found.outcome == SearchOutcome::found) {
                if (! is_valid_cycle(g, *found.witness) || found.witness->length() != entry.length)
                    throw InternalError("cycle search produced an invalid witness for length " + std::to_string(entry.length));
                entry.witness = std::move(found.witness);
            }
        });
        for (const auto & entry : report.lengths) {
            report.nodes_expanded += entry.nodes_expanded;
            if (entry.outcome == SearchOutcome::not_found && ! report.counterexample)
                report.counterexample = entry.length;
            if (entry.outcome == SearchOutcome::budget_exhausted && ! report.first_inconclusive)
                report.first_inconclusive = entry.length;
        }
        report.verdict = report.counterexample ? Verdict::fail
            : report.first_inconclusive        ? Verdict::inconclusive
                                               : Verdict::pass;
        return report;
    }
}
