#include <panconnect/cli/commands.hpp>
#include <panconnect/cli/report.hpp>
#include <panconnect/edgelist.hpp>
#include <panconnect/errors.hpp>
#include <panconnect/morphism.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using std::string;
using std::vector;

namespace panconnect::cli
{
    namespace
    {
        auto emit(const RunConfig & config, std::ostream & out, const string & text) -> void
        {
            if (! config.output) {
                out << text;
                return;
            }
            std::ofstream file(*config.output, std::ios::binary);
            if (! file)
                throw UsageError("cannot write " + config.output->string());
            file << text;
        }

        auto require_checks(const RunConfig & config) -> void
        {
            if (config.checks.empty())
                throw UsageError("at least one --check is required");
        }

        auto m_range(Family family, int n, const RunConfig & config) -> std::pair<int, int>
        {
            int low = 1;
            int high = family == Family::johnson ? n / 2 : (n + 1) / 2 - 1;
            if (config.m_min)
                low = std::max(low, *config.m_min);
            if (config.m_max)
                high = std::min(high, *config.m_max);
            return {low, high};
        }

        auto applicable(const Graph & g, const string & check) -> bool
        {
            if (check == "iso35" && g.meta().family == Family::johnson)
                return g.meta().m >= 2 && 2 * (g.meta().m - 1) < g.meta().n - 1;
            return true;
        }
    }

    auto cmd_generate(const RunConfig & config, std::ostream & out, std::ostream &) -> int
    {
        validate(config);
        auto g = load_graph(config);
        if (config.square)
            g = square(g);
        emit(config, out, to_edge_list(g));
        return exit_pass;
    }

    auto cmd_verify(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        validate(config);
        require_checks(config);
        auto start = std::chrono::steady_clock::now();
        auto g = load_graph(config);

        vector<CheckResult> results;
        for (const auto & check : known_checks())
            if (std::find(config.checks.begin(), config.checks.end(), check) != config.checks.end())
                results.push_back(run_check(g, check, config));

        std::optional<double> wall_ms;
        if (config.timing)
            wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        if (config.format == "csv") {
            string text = csv_header();
            for (const auto & r : results)
                text += csv_row(g, r);
            emit(config, out, text);
        }
        else
            emit(config, out, dump(build_report(g, config, results, wall_ms)));

        auto verdict = overall_verdict(results);
        if (verdict != Verdict::pass)
            err << g.describe() << ": " << verdict_name(verdict) << '\n';
        return verdict == Verdict::pass ? exit_pass : exit_fail;
    }

    auto cmd_iso(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        validate(config);
        auto b = certify_bijection(layer_square_to_johnson_candidate(config.n, config.m));
        emit(config, out, dump(bijection_to_json(b)));
        if (! b.certified()) {
            err << "square(B(" << config.n << "," << config.m << ")) -> J(" << config.n + 1 << "," << config.m + 1
                << ") failed certification\n";
            return exit_fail;
        }
        return exit_pass;
    }

    auto cmd_sweep(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        validate(config);
        require_checks(config);
        if (config.family == Family::raw)
            throw UsageError("sweep runs over the johnson or layer family");
        if (config.n_min < 2 || config.n_max < config.n_min)
            throw UsageError("sweep needs 2 <= --n-min <= --n-max");

        string text = csv_header();
        bool all_pass = true;
        for (int n = config.n_min; n <= config.n_max; ++n) {
            if (config.family == Family::layer && n < 3)
                continue;
            auto [m_low, m_high] = m_range(config.family, n, config);
            for (int m = m_low; m <= m_high; ++m) {
                RunConfig cell = config;
                cell.n = n;
                cell.m = m;
                cell.graph_file.reset();
                auto g = load_graph(cell);
                if (config.max_vertices && g.vertex_count() > *config.max_vertices)
                    continue;
                for (const auto & check : known_checks()) {
                    if (std::find(config.checks.begin(), config.checks.end(), check) == config.checks.end())
                        continue;
                    if (! applicable(g, check))
                        continue;
                    auto result = run_check(g, check, cell);
                    all_pass = all_pass && result.verdict == Verdict::pass;
                    text += csv_row(g, result);
                    if (result.verdict != Verdict::pass)
                        err << g.describe() << ' ' << check << ": " << verdict_name(result.verdict) << '\n';
                }
            }
        }
        emit(config, out, text);
        return all_pass ? exit_pass : exit_fail;
    }

    namespace
    {
        auto add_graph_options(CLI::App & app, RunConfig & config, string & family) -> void
        {
            app.add_option("--family", family, "johnson, layer or raw")->check(CLI::IsMember({"johnson", "layer", "raw"}));
            app.add_option("--n", config.n, "ground set size");
            app.add_option("--m", config.m, "subset size parameter");
            app.add_option("--graph", config.graph_file, "edge-list file to load instead of constructing");
        }

        auto add_search_options(CLI::App & app, RunConfig & config) -> void
        {
            app.add_option("--check", config.checks, "check to run (repeatable)");
            app.add_option("--budget", config.budget, "node budget per (pair, length) search");
            app.add_option("--jobs", config.jobs, "worker threads (PANCONNECT_JOBS overrides)");
            app.add_option("--seed", config.seed, "seed for random deletion spot checks");
            app.add_flag("--witnesses", config.witnesses, "include every witness in the report");
            app.add_flag("--symmetry-reduced", config.symmetry_reduced, "one representative pair per distance class (Johnson)");
            app.add_flag("--timing", config.timing, "include wall-clock fields");
        }
    }

    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Johnson graph construction, isomorphism certification and property verification"};
        app.require_subcommand(1);
        app.set_version_flag("--version", tool_version);

        RunConfig config;
        string family = "johnson";

        auto * generate = app.add_subcommand("generate", "write the edge list of J(n,m) or B(n,m)");
        add_graph_options(*generate, config, family);
        generate->add_flag("--square", config.square, "write the square of the graph");
        generate->add_option("--output", config.output, "output file (default stdout)");

        auto * verify = app.add_subcommand("verify", "run checks and print a JSON report");
        add_graph_options(*verify, config, family);
        add_search_options(*verify, config);
        verify->add_option("--format", config.format, "json or csv");
        verify->add_option("--output", config.output, "output file (default stdout)");

        auto * iso = app.add_subcommand("iso", "certify square(B(n,m)) = J(n+1,m+1) and print the bijection");
        iso->add_option("--n", config.n, "ground set size of B(n,m)")->required();
        iso->add_option("--m", config.m, "lower layer of B(n,m)")->required();
        iso->add_option("--output", config.output, "output file (default stdout)");

        auto * sweep = app.add_subcommand("sweep", "run checks over a parameter grid and print CSV");
        sweep->add_option("--family", family, "johnson or layer")->check(CLI::IsMember({"johnson", "layer"}));
        sweep->add_option("--n-min", config.n_min)->required();
        sweep->add_option("--n-max", config.n_max)->required();
        sweep->add_option("--m-min", config.m_min);
        sweep->add_option("--m-max", config.m_max);
        sweep->add_option("--max-vertices", config.max_vertices, "skip graphs larger than this");
        add_search_options(*sweep, config);
        sweep->add_option("--output", config.output, "output file (default stdout)");

        auto * replay = app.add_subcommand("replay", "re-check the counterexamples of a report against an edge list");
        replay->add_option("--graph", config.graph_file, "edge-list file")->required();
        replay->add_option("--report", config.report_file, "JSON report from verify")->required();
        replay->add_option("--budget", config.budget, "node limit for exhaustive path enumeration");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_pass;
        }
        catch (const CLI::CallForVersion &) {
            out << tool_version << '\n';
            return exit_pass;
        }
        catch (const CLI::ParseError & e) {
            err << e.what() << '\n';
            return exit_usage;
        }

        try {
            config.family = parse_family(family);
            auto * chosen = app.get_subcommands().front();
            config.command = chosen->get_name();
            if (chosen == generate)
                return cmd_generate(config, out, err);
            if (chosen == verify)
                return cmd_verify(config, out, err);
            if (chosen == iso)
                return cmd_iso(config, out, err);
            if (chosen == sweep)
                return cmd_sweep(config, out, err);
            return cmd_replay(config, out, err);
        }
        catch (const UsageError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const InternalError & e) {
            err << "internal error: " << e.what() << '\n';
            return exit_fail;
        }
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        vector<const char *> argv{"panconnect"};
        for (const auto & a : args)
            argv.push_back(a.c_str());
        return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
}
