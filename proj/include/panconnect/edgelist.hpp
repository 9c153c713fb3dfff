#pragma once

#include <panconnect/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace panconnect
{
    // Text format, ASCII with LF endings:
    //   # family=<johnson|layer|raw> n=<n> m=<m> vertices=<V> edges=<E>
    //   v <id> <label>        one per vertex, ids ascending
    //   e <id1> <id2>         one per edge, id1 < id2, lexicographic order

    auto write_edge_list(std::ostream & out, const Graph & g) -> void;
    [[nodiscard]] auto to_edge_list(const Graph & g) -> std::string;

    /// Parses and revalidates: header counts must match the body, and johnson/layer files
    /// must reproduce their constructor's output exactly. Throws UsageError otherwise.
    [[nodiscard]] auto read_edge_list(std::istream & in) -> Graph;
    [[nodiscard]] auto load_edge_list(const std::filesystem::path & path) -> Graph;
    auto save_edge_list(const std::filesystem::path & path, const Graph & g) -> void;
}
