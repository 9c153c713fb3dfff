#include <panconnect/cli/report.hpp>
#include <panconnect/connectivity.hpp>
#include <panconnect/edgelist.hpp>
#include <panconnect/errors.hpp>
#include <panconnect/morphism.hpp>
#include <panconnect/symmetry.hpp>

#include <chrono>
#include <sstream>

using nlohmann::json;
using std::string;
using std::string_view;
using std::vector;

namespace panconnect::cli
{
    namespace
    {
        constexpr std::size_t deletion_trials = 100;

        auto outcome_char(SearchOutcome o) -> char
        {
            switch (o) {
            case SearchOutcome::found: return '1';
            case SearchOutcome::not_found: return '0';
            case SearchOutcome::budget_exhausted: return '?';
            }
            return '?';
        }

        auto ids_to_json(const vector<VertexId> & ids) -> json
        {
            return json(ids);
        }

        auto missing_path_json(const Graph & g, const MissingPath & missing) -> json
        {
            return json{{"kind", "missing-path"}, {"u", missing.u}, {"v", missing.v},
                {"u_label", g.label(missing.u).to_string()}, {"v_label", g.label(missing.v).to_string()},
                {"length", missing.length}};
        }

        auto check_iso(const Graph & g, CheckResult & result) -> void
        {
            const auto & meta = g.meta();
            int n = meta.n, m = meta.m;
            if (meta.family == Family::johnson) {
                if (m < 2 || 2 * (m - 1) >= n - 1)
                    throw UsageError("iso35 realizes J(n,m) as square(B(n-1,m-1)) and needs 2 <= m <= n/2");
                n -= 1;
                m -= 1;
            }
            else if (meta.family != Family::layer)
                throw UsageError("iso35 applies to johnson and layer graphs only");

            auto b = certify_bijection(layer_square_to_johnson_candidate(n, m));
            result.details = json{{"layer_n", n}, {"layer_m", m}, {"source", meta_to_json(*b.source)},
                {"target", meta_to_json(*b.target)}, {"certified", b.certified()}};
            if (b.certified()) {
                result.verdict = Verdict::pass;
                return;
            }
            result.verdict = Verdict::fail;
            result.counterexample = json{{"kind", "non-isomorphic-pair"}, {"layer_n", n}, {"layer_m", m},
                {"u", b.refutation ? json(b.refutation->first) : json(nullptr)},
                {"v", b.refutation ? json(b.refutation->second) : json(nullptr)}};
        }

        auto check_connectivity(const Graph & g, const RunConfig & config, CheckResult & result) -> void
        {
            auto stats = degree_stats(g);
            auto kappa = vertex_connectivity(g, effective_jobs(config.jobs));
            result.kappa = kappa.kappa;
            result.delta = stats.min_degree;
            DeletionTrials trials;
            if (kappa.kappa >= 1)
                trials = random_deletion_trials(g, kappa.kappa - 1, deletion_trials, config.seed);
            result.details = json{{"kappa", kappa.kappa}, {"delta", stats.min_degree}, {"flow_calls", kappa.flow_calls},
                {"attaining_pair", kappa.pair ? json{kappa.pair->first, kappa.pair->second} : json(nullptr)},
                {"min_cut", ids_to_json(kappa.separator)}, {"deletion_trials", trials.trials},
                {"deletion_failures", trials.failures}, {"seed", config.seed}};

            if (trials.failures > 0) {
                result.verdict = Verdict::fail;
                result.counterexample = json{{"kind", "vertex-cut"}, {"cut", ids_to_json(trials.first_failing)},
                    {"size", trials.first_failing.size()}, {"delta", stats.min_degree}};
            }
            else if (kappa.kappa < stats.min_degree) {
                result.verdict = Verdict::fail;
                result.counterexample = json{{"kind", "vertex-cut"}, {"cut", ids_to_json(kappa.separator)},
                    {"size", kappa.separator.size()}, {"delta", stats.min_degree}};
            }
            else
                result.verdict = Verdict::pass;
        }

        auto vertex_transitivity_json(const VertexTransitivity & vt) -> json
        {
            return json{{"vertex_transitive", vt.transitive}, {"vertex_basis", basis_name(vt.basis)},
                {"vertex_orbits", vt.orbits.size()}};
        }

        auto irregular_json(const Graph & g, const VertexTransitivity & vt) -> json
        {
            return json{{"kind", "irregular-degrees"}, {"low", vt.degree_witness->first}, {"high", vt.degree_witness->second},
                {"low_degree", g.degree(vt.degree_witness->first)}, {"high_degree", g.degree(vt.degree_witness->second)}};
        }

        auto vertex_split_json(const VertexTransitivity & vt) -> json
        {
            return json{{"kind", "vertex-orbit-split"}, {"seed", 0}, {"orbit_size", vt.orbits.front().size()}};
        }

        auto edge_split_json(const Graph & g, const EdgeTransitivity & et) -> json
        {
            const auto & first = et.orbits.front().front();
            return json{{"kind", "edge-orbit-split"}, {"seed", json{first.first, first.second}},
                {"orbit_size", et.orbits.front().size()}, {"edges", g.edge_count()}};
        }

        auto check_transitivity(const Graph & g, string_view which, CheckResult & result) -> void
        {
            auto generators = default_generators(g);
            const auto & meta = g.meta();
            bool layer_swap = std::any_of(generators.begin(), generators.end(), [](const LabelAction & a) { return a.is_layer_swap(); });

            if (which == "vertex-transitive") {
                auto vt = check_vertex_transitive(g, generators);
                result.details = vertex_transitivity_json(vt);
                result.details["layer_swap"] = layer_swap;
                result.verdict = vt.transitive ? Verdict::pass
                    : vt.basis == TransitivityBasis::irregular_degrees ? Verdict::fail
                                                                       : Verdict::inconclusive;
                if (result.verdict == Verdict::fail)
                    result.counterexample = irregular_json(g, vt);
                else if (result.verdict == Verdict::inconclusive)
                    result.details["orbit_split"] = vertex_split_json(vt);
                return;
            }
            if (which == "edge-transitive") {
                auto et = check_edge_transitive(g, generators);
                result.details = json{{"edge_transitive", et.transitive}, {"edge_orbits", et.orbits.size()}};
                result.verdict = et.transitive ? Verdict::pass : Verdict::inconclusive;
                if (! et.transitive)
                    result.details["orbit_split"] = edge_split_json(g, et);
                return;
            }

            // Combined check: the symmetry statements made for the family.
            auto vt = check_vertex_transitive(g, generators);
            auto et = check_edge_transitive(g, generators);
            auto stats = degree_stats(g);
            result.details = vertex_transitivity_json(vt);
            result.details["edge_transitive"] = et.transitive;
            result.details["edge_orbits"] = et.orbits.size();
            result.details["regular"] = stats.regular;
            result.details["layer_swap"] = layer_swap;

            result.verdict = Verdict::pass;
            if (meta.family == Family::johnson) {
                result.details["expected"] = "vertex-transitive";
                if (! vt.transitive) {
                    result.verdict = vt.basis == TransitivityBasis::irregular_degrees ? Verdict::fail : Verdict::inconclusive;
                    if (result.verdict == Verdict::fail)
                        result.counterexample = irregular_json(g, vt);
                }
                return;
            }
            bool balanced = meta.n == 2 * meta.m + 1;
            result.details["expected"] = balanced ? "edge-transitive, vertex-transitive" : "edge-transitive, irregular";
            if (! et.transitive)
                result.verdict = Verdict::inconclusive;
            else if (balanced && ! vt.transitive)
                result.verdict = Verdict::inconclusive;
            else if (! balanced && stats.regular) {
                // B(n,m) with n != 2m+1 must have two degree classes; finding it regular contradicts the degree formulas.
                result.verdict = Verdict::fail;
                result.counterexample = json{{"kind", "unexpected-regularity"}, {"degree", stats.min_degree}};
            }
        }

        auto pan_json(const Graph & g, const PanReport & report, bool witnesses) -> json
        {
            json rows = json::array();
            for (const auto & row : report.pairs) {
                string achieved;
                for (auto o : row.outcomes)
                    achieved += outcome_char(o);
                json entry{{"u", row.u}, {"v", row.v}, {"distance", row.distance},
                    {"lengths", json{row.min_length, row.max_length}}, {"achieved", achieved},
                    {"nodes_expanded", row.nodes_expanded}};
                if (witnesses) {
                    json paths = json::array();
                    for (const auto & w : row.witnesses)
                        paths.push_back(w.vertices);
                    entry["witnesses"] = std::move(paths);
                }
                rows.push_back(std::move(entry));
            }
            json out{{"symmetry_reduced", report.symmetry_reduced}, {"pairs", std::move(rows)}};
            if (report.first_inconclusive)
                out["first_inconclusive"] = missing_path_json(g, *report.first_inconclusive);
            return out;
        }

        auto check_paths(const Graph & g, string_view which, const RunConfig & config, CheckResult & result) -> void
        {
            VerifyOptions options{config.budget, effective_jobs(config.jobs), config.witnesses};
            PanReport report;
            if (which == "panconnected")
                report = config.symmetry_reduced ? verify_panconnected_symmetry_reduced(g, options) : verify_panconnected(g, options);
            else
                report = verify_hamilton_connected(g, options);
            result.verdict = report.verdict;
            result.pairs = report.pairs.size();
            result.lengths_checked = report.lengths_checked;
            result.nodes_expanded = report.nodes_expanded;
            result.details = pan_json(g, report, config.witnesses);
            if (report.counterexample)
                result.counterexample = missing_path_json(g, *report.counterexample);
        }

        auto check_pancyclic(const Graph & g, const RunConfig & config, CheckResult & result) -> void
        {
            VerifyOptions options{config.budget, effective_jobs(config.jobs), config.witnesses};
            auto report = verify_pancyclic(g, options);
            result.verdict = report.verdict;
            result.lengths_checked = report.lengths.size();
            result.nodes_expanded = report.nodes_expanded;
            string achieved;
            json cycles = json::array();
            for (const auto & entry : report.lengths) {
                achieved += outcome_char(entry.outcome);
                if (config.witnesses && entry.witness)
                    cycles.push_back(entry.witness->vertices);
            }
            result.details = json{{"lengths", json{3, g.vertex_count()}}, {"achieved", achieved}};
            if (config.witnesses)
                result.details["witnesses"] = std::move(cycles);
            if (report.counterexample)
                result.counterexample = json{{"kind", "missing-cycle"}, {"length", *report.counterexample}};
        }
    }

    auto load_graph(const RunConfig & config) -> Graph
    {
        if (config.graph_file)
            return load_edge_list(*config.graph_file);
        switch (config.family) {
        case Family::johnson: return build_johnson(config.n, config.m);
        case Family::layer: return build_layer_graph(config.n, config.m);
        case Family::raw: break;
        }
        throw UsageError("raw graphs must be supplied with --graph");
    }

    auto run_check(const Graph & g, string_view check, const RunConfig & config) -> CheckResult
    {
        CheckResult result;
        result.name = string{check};
        auto start = std::chrono::steady_clock::now();
        if (check == "iso35")
            check_iso(g, result);
        else if (check == "connectivity")
            check_connectivity(g, config, result);
        else if (check == "transitivity" || check == "vertex-transitive" || check == "edge-transitive")
            check_transitivity(g, check, result);
        else if (check == "panconnected" || check == "hamilton-connected")
            check_paths(g, check, config, result);
        else if (check == "pancyclic")
            check_pancyclic(g, config, result);
        else
            throw UsageError("unknown check '" + string{check} + "'");
        if (config.timing)
            result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    auto overall_verdict(const vector<CheckResult> & results) -> Verdict
    {
        auto verdict = Verdict::pass;
        for (const auto & r : results) {
            if (r.verdict == Verdict::fail)
                return Verdict::fail;
            if (r.verdict == Verdict::inconclusive)
                verdict = Verdict::inconclusive;
        }
        return verdict;
    }

    auto build_report(const Graph & g, const RunConfig & config, const vector<CheckResult> & results,
        std::optional<double> wall_ms) -> json
    {
        json doc;
        doc["schema"] = report_schema;
        doc["tool_version"] = tool_version;
        doc["config"] = json{{"command", config.command}, {"family", family_name(g.meta().family)}, {"n", g.meta().n},
            {"m", g.meta().m}, {"graph_file", config.graph_file ? json(config.graph_file->filename().string()) : json(nullptr)},
            {"checks", config.checks}, {"budget", config.budget}, {"witnesses", config.witnesses},
            {"symmetry_reduced", config.symmetry_reduced}, {"seed", config.seed}};
        doc["graph"] = meta_to_json(g);
        json checks = json::array();
        for (const auto & r : results) {
            json entry{{"name", r.name}, {"verdict", verdict_name(r.verdict)}, {"counterexample", r.counterexample},
                {"details", r.details},
                {"statistics", json{{"pairs", r.pairs}, {"lengths_checked", r.lengths_checked},
                                   {"nodes_expanded", r.nodes_expanded}}}};
            if (config.timing)
                entry["statistics"]["ms"] = r.ms;
            checks.push_back(std::move(entry));
        }
        doc["checks"] = std::move(checks);
        doc["verdict"] = verdict_name(overall_verdict(results));
        if (wall_ms)
            doc["wall_ms"] = *wall_ms;
        return doc;
    }

    auto csv_header() -> string
    {
        return "family,n,m,check,verdict,kappa,delta,pairs,lengths_checked,nodes_expanded,ms\n";
    }

    auto csv_row(const Graph & g, const CheckResult & r) -> string
    {
        std::ostringstream out;
        out << family_name(g.meta().family) << ',' << g.meta().n << ',' << g.meta().m << ',' << r.name << ','
            << verdict_name(r.verdict) << ',';
        if (r.kappa)
            out << *r.kappa;
        out << ',';
        if (r.delta)
            out << *r.delta;
        out << ',' << r.pairs << ',' << r.lengths_checked << ',' << r.nodes_expanded << ',';
        out << static_cast<long long>(r.ms + 0.5) << '\n';
        return out.str();
    }

    auto dump(const json & doc) -> string
    {
        return doc.dump(2) + "\n";
    }
}
