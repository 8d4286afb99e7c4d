#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kk/graph.hpp"

namespace kk {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    std::size_t line_no;
};

/// Read the edge-list format: first line "n m", then m lines "u v" with
/// 1-based labels. Blank lines are skipped.
inline Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "expected header 'n m'");
    std::size_t n = 0, m = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            throw ParseError(line_no, "malformed header, expected 'n m'");
    }
    if (n < 1) throw ParseError(line_no, "vertex count must be >= 1");
    Graph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError(line_no + 1, "expected edge line 'u v'");
        std::istringstream ss(line);
        std::size_t u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw ParseError(line_no, "malformed edge, expected 'u v'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line_no, "vertex label out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(line_no, "self-loop rejected");
        if (g.has_edge(u, v)) throw ParseError(line_no, "duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

inline void write_dot(std::ostream& out, const Graph& g, const std::string& name = "g") {
    out << "graph " << name << " {\n";
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

}  // namespace kk
