// Replay of report counterexamples. Deliberately shares nothing with the search and
// flow code: absence claims are re-derived by unpruned enumeration of simple paths.

#include <panconnect/cli/commands.hpp>
#include <panconnect/cli/report.hpp>
#include <panconnect/connectivity.hpp>
#include <panconnect/edgelist.hpp>
#include <panconnect/errors.hpp>
#include <panconnect/morphism.hpp>
#include <panconnect/symmetry.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

using nlohmann::json;
using std::string;
using std::vector;

namespace panconnect::cli
{
    namespace
    {
        enum class Replay
        {
            confirmed,
            refuted,
            unfinished
        };

        auto replay_name(Replay r) -> const char *
        {
            switch (r) {
            case Replay::confirmed: return "confirmed";
            case Replay::refuted: return "REFUTED";
            case Replay::unfinished: return "unfinished (enumeration limit)";
            }
            return "unfinished";
        }

        struct Enumerator
        {
            const Graph & g;
            std::uint64_t limit;
            std::uint64_t visited = 0;
            vector<char> used;

            // True if some simple path from `at` with exactly `left` more edges ends at `goal`.
            auto extend(VertexId at, std::size_t left, VertexId goal) -> bool
            {
                if (++visited > limit)
                    return false;
                if (left == 0)
                    return at == goal;
                if (at == goal)
                    return false;
                for (auto w : g.neighbors(at)) {
                    if (used[w])
                        continue;
                    used[w] = 1;
                    bool hit = extend(w, left - 1, goal);
                    used[w] = 0;
                    if (hit)
                        return true;
                }
                return false;
            }
        };

        auto replay_missing_path(const Graph & g, const json & ce, std::uint64_t limit) -> Replay
        {
            auto u = ce.at("u").get<VertexId>(), v = ce.at("v").get<VertexId>();
            auto length = ce.at("length").get<std::size_t>();
            if (u >= g.vertex_count() || v >= g.vertex_count() || u == v)
                return Replay::refuted;
            Enumerator e{g, limit, 0, vector<char>(g.vertex_count(), 0)};
            e.used[u] = 1;
            if (e.extend(u, length, v))
                return Replay::refuted;
            return e.visited > limit ? Replay::unfinished : Replay::confirmed;
        }

        auto replay_missing_cycle(const Graph & g, const json & ce, std::uint64_t limit) -> Replay
        {
            auto length = ce.at("length").get<std::size_t>();
            if (length < 3 || length > g.vertex_count())
                return Replay::refuted;
            std::uint64_t visited = 0;
            vector<char> used(g.vertex_count(), 0);
            // Root each cycle at its smallest vertex s: walk length-1 edges over vertices > s and close back to s.
            auto closes = [&](auto & self, VertexId s, VertexId at, std::size_t left) -> bool {
                if (++visited > limit)
                    return false;
                if (left == 0) {
                    auto back = g.neighbors(at);
                    return std::find(back.begin(), back.end(), s) != back.end();
                }
                for (auto w : g.neighbors(at)) {
                    if (used[w] || w < s)
                        continue;
                    used[w] = 1;
                    bool hit = self(self, s, w, left - 1);
                    used[w] = 0;
                    if (hit)
                        return true;
                }
                return false;
            };
            for (VertexId s = 0; s < g.vertex_count(); ++s) {
                used[s] = 1;
                bool hit = closes(closes, s, s, length - 1);
                used[s] = 0;
                if (hit)
                    return Replay::refuted;
            }
            return visited > limit ? Replay::unfinished : Replay::confirmed;
        }

        auto replay_vertex_cut(const Graph & g, const json & ce) -> Replay
        {
            auto cut = ce.at("cut").get<vector<VertexId>>();
            auto delta = ce.at("delta").get<std::size_t>();
            if (cut.size() != ce.at("size").get<std::size_t>())
                return Replay::refuted;
            // A cut smaller than the minimum degree is what contradicts kappa = delta.
            return is_vertex_cut(g, cut) && cut.size() < delta ? Replay::confirmed : Replay::refuted;
        }

        auto replay_irregular(const Graph & g, const json & ce) -> Replay
        {
            auto low = ce.at("low").get<VertexId>(), high = ce.at("high").get<VertexId>();
            if (low >= g.vertex_count() || high >= g.vertex_count())
                return Replay::refuted;
            return g.degree(low) != g.degree(high) ? Replay::confirmed : Replay::refuted;
        }

        auto replay_regular(const Graph & g) -> Replay
        {
            return degree_stats(g).regular ? Replay::confirmed : Replay::refuted;
        }

        // The refuted pair lives in square(B(n,m)); labels decide both adjacencies directly.
        auto replay_iso_pair(const json & ce) -> Replay
        {
            if (ce.at("u").is_null())
                return Replay::refuted;
            auto n = ce.at("layer_n").get<int>(), m = ce.at("layer_m").get<int>();
            auto u = ce.at("u").get<VertexId>(), v = ce.at("v").get<VertexId>();
            auto layer = build_layer_graph(n, m);
            if (u >= layer.vertex_count() || v >= layer.vertex_count() || u == v)
                return Replay::refuted;
            auto image = [&](VertexId x) {
                const auto & label = layer.label(x);
                auto bits = label.size() == m + 1 ? label.bits() : label.bits() | (std::uint64_t{1} << n);
                return SubsetWord{bits, n + 1};
            };
            // Within B(n,m), distinct labels are at distance <= 2 exactly when they differ in at most two elements.
            bool adjacent_in_square = symm_diff_size(layer.label(u), layer.label(v)) <= 2;
            bool adjacent_in_johnson = symm_diff_size(image(u), image(v)) == 2;
            return adjacent_in_square != adjacent_in_johnson ? Replay::confirmed : Replay::refuted;
        }
    }

    auto cmd_replay(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        auto g = load_edge_list(*config.graph_file);
        std::ifstream in(*config.report_file, std::ios::binary);
        if (! in)
            throw UsageError("cannot open report " + config.report_file->string());
        json report;
        try {
            report = json::parse(in);
        }
        catch (const json::exception & e) {
            throw UsageError(string{"report is not valid JSON: "} + e.what());
        }
        if (report.value("schema", "") != report_schema)
            throw UsageError("report schema is not " + string{report_schema});
        const auto & meta = report.at("graph");
        if (meta.at("vertices").get<std::size_t>() != g.vertex_count() || meta.at("edges").get<std::size_t>() != g.edge_count() ||
            meta.at("family").get<string>() != family_name(g.meta().family))
            throw UsageError("report describes a different graph than " + config.graph_file->string());

        std::size_t replayed = 0;
        bool all_confirmed = true;
        for (const auto & check : report.at("checks")) {
            const auto & ce = check.at("counterexample");
            if (ce.is_null())
                continue;
            ++replayed;
            auto kind = ce.at("kind").get<string>();
            Replay outcome = Replay::refuted;
            try {
                if (kind == "missing-path")
                    outcome = replay_missing_path(g, ce, config.budget);
                else if (kind == "missing-cycle")
                    outcome = replay_missing_cycle(g, ce, config.budget);
                else if (kind == "vertex-cut")
                    outcome = replay_vertex_cut(g, ce);
                else if (kind == "irregular-degrees")
                    outcome = replay_irregular(g, ce);
                else if (kind == "unexpected-regularity")
                    outcome = replay_regular(g);
                else if (kind == "non-isomorphic-pair")
                    outcome = replay_iso_pair(ce);
                else
                    throw UsageError("unknown counterexample kind '" + kind + "'");
            }
            catch (const json::exception & e) {
                throw UsageError("malformed counterexample in check " + check.at("name").get<string>() + ": " + e.what());
            }
            out << check.at("name").get<string>() << ": " << kind << ' ' << replay_name(outcome) << '\n';
            all_confirmed = all_confirmed && outcome == Replay::confirmed;
        }
        if (replayed == 0)
            out << "no counterexamples to replay\n";
        if (! all_confirmed)
            err << "some counterexamples did not replay\n";
        return all_confirmed ? exit_pass : exit_fail;
    }
}
