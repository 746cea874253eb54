#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "coronapd/graph.hpp"

namespace coronapd {

// Edge-list format: first non-comment line is the order n, every further
// non-comment line is "u v" with 0 <= u < v < n. Lines starting with '#'
// are ignored. A duplicate edge is a parse error.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    int lineno = 0;
    Graph g(1);
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("edge list parse error at line " +
                                    std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1) fail("expected positive order");
            std::string rest;
            if (fields >> rest) fail("trailing tokens after order");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(fields >> u >> v)) fail("expected edge 'u v'");
        std::string rest;
        if (fields >> rest) fail("trailing tokens after edge");
        if (u < 0 || v >= n || u >= v)
            fail("edge must satisfy 0 <= u < v < n: " + std::to_string(u) + " " +
                 std::to_string(v));
        if (g.adjacent(u, v)) fail("duplicate edge");
        g.add_edge(u, v);
    }
    if (n < 0) {
        lineno = 0;
        fail("missing order line");
    }
    return g;
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace coronapd
