#include <panconnect/edgelist.hpp>
#include <panconnect/errors.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

using std::string;
using std::string_view;
using std::vector;

namespace panconnect
{
    namespace
    {
        auto split_spaces(string_view line) -> vector<string_view>
        {
            vector<string_view> tokens;
            while (! line.empty()) {
                auto space = line.find(' ');
                auto token = line.substr(0, space);
                if (token.empty())
                    throw UsageError("edge list: repeated space in line");
                tokens.push_back(token);
                if (space == string_view::npos)
                    break;
                line.remove_prefix(space + 1);
                if (line.empty())
                    throw UsageError("edge list: trailing space in line");
            }
            return tokens;
        }

        template <typename Int>
        auto parse_int(string_view text, string_view what) -> Int
        {
            Int value{};
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw UsageError("edge list: bad " + string{what} + " '" + string{text} + "'");
            return value;
        }

        auto next_line(std::istream & in, string & line, std::size_t & line_no) -> bool
        {
            if (! std::getline(in, line))
                return false;
            ++line_no;
            if (! line.empty() && line.back() == '\r')
                throw UsageError("edge list: CRLF line ending at line " + std::to_string(line_no));
            return true;
        }
    }

    auto write_edge_list(std::ostream & out, const Graph & g) -> void
    {
        const auto & meta = g.meta();
        out << "# family=" << family_name(meta.family) << " n=" << meta.n << " m=" << meta.m
            << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << "v " << v << ' ' << g.label(v).to_string() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u << ' ' << v << '\n';
    }

    auto to_edge_list(const Graph & g) -> string
    {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        string line;
        std::size_t line_no = 0;
        if (! next_line(in, line, line_no))
            throw UsageError("edge list: empty input");

        auto header = split_spaces(line);
        if (header.size() != 6 || header[0] != "#")
            throw UsageError("edge list: malformed header");
        std::map<string, string, std::less<>> fields;
        for (std::size_t i = 1; i < header.size(); ++i) {
            auto eq = header[i].find('=');
            if (eq == string_view::npos)
                throw UsageError("edge list: malformed header field '" + string{header[i]} + "'");
            fields.emplace(string{header[i].substr(0, eq)}, string{header[i].substr(eq + 1)});
        }
        for (auto key : {"family", "n", "m", "vertices", "edges"})
            if (! fields.contains(key))
                throw UsageError(string{"edge list: header lacks "} + key);

        GraphMeta meta{parse_family(fields["family"]), parse_int<int>(fields["n"], "n"), parse_int<int>(fields["m"], "m")};
        auto vertex_count = parse_int<std::size_t>(fields["vertices"], "vertex count");
        auto edge_count = parse_int<std::size_t>(fields["edges"], "edge count");

        int ground = meta.n;
        vector<SubsetWord> labels;
        vector<Edge> edges;
        while (next_line(in, line, line_no)) {
            auto tokens = split_spaces(line);
            if (tokens.size() != 3)
                throw UsageError("edge list: line " + std::to_string(line_no) + " is not a vertex or edge record");
            if (tokens[0] == "v") {
                if (! edges.empty())
                    throw UsageError("edge list: vertex record after edge records at line " + std::to_string(line_no));
                auto id = parse_int<std::size_t>(tokens[1], "vertex id");
                if (id != labels.size())
                    throw UsageError("edge list: vertex ids must be consecutive from 0 (line " + std::to_string(line_no) + ")");
                labels.push_back(SubsetWord::parse(tokens[2], ground));
            }
            else if (tokens[0] == "e") {
                auto u = parse_int<VertexId>(tokens[1], "edge endpoint");
                auto v = parse_int<VertexId>(tokens[2], "edge endpoint");
                if (u >= v)
                    throw UsageError("edge list: edge endpoints must satisfy id1 < id2 (line " + std::to_string(line_no) + ")");
                if (! edges.empty() && Edge{u, v} <= edges.back())
                    throw UsageError("edge list: edges not in sorted order at line " + std::to_string(line_no));
                edges.emplace_back(u, v);
            }
            else
                throw UsageError("edge list: unknown record '" + string{tokens[0]} + "'");
        }

        if (labels.size() != vertex_count)
            throw UsageError("edge list: header says " + std::to_string(vertex_count) + " vertices, body has " +
                std::to_string(labels.size()));
        if (edges.size() != edge_count)
            throw UsageError("edge list: header says " + std::to_string(edge_count) + " edges, body has " +
                std::to_string(edges.size()));

        auto g = Graph::from_edges(std::move(labels), edges, meta);
        if (meta.family != Family::raw) {
            auto expected = meta.family == Family::johnson ? build_johnson(meta.n, meta.m) : build_layer_graph(meta.n, meta.m);
            if (to_edge_list(expected) != to_edge_list(g))
                throw UsageError("edge list: contents do not match " + expected.describe());
        }
        return g;
    }

    auto load_edge_list(const std::filesystem::path & path) -> Graph
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw UsageError("cannot open edge list " + path.string());
        return read_edge_list(in);
    }

    auto save_edge_list(const std::filesystem::path & path, const Graph & g) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw UsageError("cannot write edge list " + path.string());
        write_edge_list(out, g);
    }
}
