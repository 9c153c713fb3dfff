#include <panconnect/cli/config.hpp>
#include <panconnect/errors.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace panconnect::cli
{
    auto known_checks() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> checks{"iso35", "connectivity", "transitivity", "vertex-transitive",
            "edge-transitive", "panconnected", "pancyclic", "hamilton-connected"};
        return checks;
    }

    auto validate(const RunConfig & config) -> void
    {
        for (const auto & check : config.checks)
            if (std::find(known_checks().begin(), known_checks().end(), check) == known_checks().end())
                throw UsageError("unknown check '" + check + "'");
        if (config.budget == 0)
            throw UsageError("--budget must be positive");
        if (config.format != "json" && config.format != "csv")
            throw UsageError("--format must be json or csv");
        if (config.family == Family::raw && ! config.graph_file && config.command != "sweep")
            throw UsageError("raw graphs must be supplied with --graph");
    }

    auto effective_jobs(unsigned flag_value) -> unsigned
    {
        if (const char * env = std::getenv("PANCONNECT_JOBS"); env != nullptr && *env != '\0') {
            unsigned value = 0;
            auto end = env + std::strlen(env);
            auto [ptr, ec] = std::from_chars(env, end, value);
            if (ec != std::errc{} || ptr != end || value == 0)
                throw UsageError("PANCONNECT_JOBS must be a positive integer");
            return value;
        }
        return std::max(1U, flag_value);
    }
}
