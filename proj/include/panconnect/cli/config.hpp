#pragma once

#include <panconnect/graph.hpp>
#include <panconnect/paths.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace panconnect::cli
{
    inline constexpr const char * tool_version = "1.0.0";
    inline constexpr const char * report_schema = "panconnect-report/1";

    /// Check names accepted by --check, in canonical execution order.
    [[nodiscard]] auto known_checks() -> const std::vector<std::string> &;

    struct RunConfig
    {
        std::string command;
        Family family = Family::johnson;
        int n = 0;
        int m = 0;
        /// Edge-list input; required for raw graphs, optional otherwise.
        std::optional<std::filesystem::path> graph_file;
        std::vector<std::string> checks;
        std::uint64_t budget = default_budget;
        std::optional<std::filesystem::path> output;
        std::string format = "json";
        bool witnesses = false;
        bool symmetry_reduced = false;
        /// Emit wall-clock fields. Off by default so reports are byte-reproducible.
        bool timing = false;
        /// generate: emit the square of the constructed graph.
        bool square = false;
        std::uint64_t seed = 0;
        unsigned jobs = 1;

        // sweep grid
        int n_min = 0;
        int n_max = 0;
        std::optional<int> m_min;
        std::optional<int> m_max;
        std::optional<std::size_t> max_vertices;

        // replay
        std::optional<std::filesystem::path> report_file;
    };

    /// Throws UsageError on invalid parameter combinations (unknown check, budget 0, ...).
    auto validate(const RunConfig & config) -> void;

    /// --jobs unless PANCONNECT_JOBS is set, in which case the environment wins.
    [[nodiscard]] auto effective_jobs(unsigned flag_value) -> unsigned;
}
