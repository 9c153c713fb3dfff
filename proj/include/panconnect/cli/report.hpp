#pragma once

#include <panconnect/cli/config.hpp>
#include <panconnect/graph.hpp>
#include <panconnect/verify.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace panconnect::cli
{
    /// Outcome of one named check on one graph. `counterexample` is non-null iff the verdict is fail.
    struct CheckResult
    {
        std::string name;
        Verdict verdict = Verdict::pass;
        nlohmann::json details = nlohmann::json::object();
        nlohmann::json counterexample = nullptr;
        std::optional<std::size_t> kappa;
        std::optional<std::size_t> delta;
        std::size_t pairs = 0;
        std::size_t lengths_checked = 0;
        std::uint64_t nodes_expanded = 0;
        double ms = 0;
    };

    /// Builds the graph named by the config: loads --graph if given, else constructs the family.
    [[nodiscard]] auto load_graph(const RunConfig & config) -> Graph;

    /// Throws UsageError if the check does not apply to the graph (e.g. iso35 on a raw graph).
    [[nodiscard]] auto run_check(const Graph & g, std::string_view check, const RunConfig & config) -> CheckResult;

    [[nodiscard]] auto overall_verdict(const std::vector<CheckResult> & results) -> Verdict;

    /// The verification report document; `wall_ms` is included only when timing was requested.
    [[nodiscard]] auto build_report(const Graph & g, const RunConfig & config, const std::vector<CheckResult> & results,
        std::optional<double> wall_ms) -> nlohmann::json;

    [[nodiscard]] auto csv_header() -> std::string;
    [[nodiscard]] auto csv_row(const Graph & g, const CheckResult & result) -> std::string;

    /// Pretty-printed JSON with a trailing newline.
    [[nodiscard]] auto dump(const nlohmann::json & doc) -> std::string;
}
