#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "coronapd/graph.hpp"

namespace coronapd {

// Named graph families. Canonical labelings:
//   path:n      0-1-...-(n-1)
//   cycle:n     0-1-...-(n-1)-0
//   complete:n  all pairs adjacent
//   star:n      order n+1, center is vertex 0
//   empty:n     n vertices, no edges
struct FamilySpec {
    enum class Kind { Path, Cycle, Complete, Star, Empty };
    Kind kind;
    int param;
};

inline std::string to_string(const FamilySpec& spec) {
    const char* name = nullptr;
    switch (spec.kind) {
        case FamilySpec::Kind::Path: name = "path"; break;
        case FamilySpec::Kind::Cycle: name = "cycle"; break;
        case FamilySpec::Kind::Complete: name = "complete"; break;
        case FamilySpec::Kind::Star: name = "star"; break;
        case FamilySpec::Kind::Empty: name = "empty"; break;
    }
    return std::string(name) + ":" + std::to_string(spec.param);
}

inline FamilySpec parse_family_spec(std::string_view text) {
    const size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("malformed family spec (expected name:n): " +
                                    std::string(text));
    const std::string_view name = text.substr(0, colon);
    const std::string_view num = text.substr(colon + 1);
    if (num.empty())
        throw std::invalid_argument("malformed family spec (missing parameter): " +
                                    std::string(text));
    int value = 0;
    for (char ch : num) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("malformed family spec (bad parameter): " +
                                        std::string(text));
        value = value * 10 + (ch - '0');
        if (value > 1'000'000)
            throw std::invalid_argument("family parameter out of range: " +
                                        std::string(text));
    }
    FamilySpec spec{FamilySpec::Kind::Path, value};
    if (name == "path")
        spec.kind = FamilySpec::Kind::Path;
    else if (name == "cycle")
        spec.kind = FamilySpec::Kind::Cycle;
    else if (name == "complete")
        spec.kind = FamilySpec::Kind::Complete;
    else if (name == "star")
        spec.kind = FamilySpec::Kind::Star;
    else if (name == "empty")
        spec.kind = FamilySpec::Kind::Empty;
    else
        throw std::invalid_argument("unknown family name: " + std::string(text));

    const int lo = spec.kind == FamilySpec::Kind::Cycle ? 3 : 1;
    if (value < lo)
        throw std::invalid_argument("family parameter out of range: " +
                                    std::string(text));
    return spec;
}

inline Graph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Path: {
            Graph g(spec.param);
            for (int i = 0; i + 1 < spec.param; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case FamilySpec::Kind::Cycle: {
            Graph g(spec.param);
            for (int i = 0; i + 1 < spec.param; ++i) g.add_edge(i, i + 1);
            g.add_edge(0, spec.param - 1);
            return g;
        }
        case FamilySpec::Kind::Complete: {
            Graph g(spec.param);
            for (int i = 0; i < spec.param; ++i)
                for (int j = i + 1; j < spec.param; ++j) g.add_edge(i, j);
            return g;
        }
        case FamilySpec::Kind::Star: {
            Graph g(spec.param + 1);
            for (int i = 1; i <= spec.param; ++i) g.add_edge(0, i);
            return g;
        }
        case FamilySpec::Kind::Empty:
            return Graph(spec.param);
    }
    throw std::logic_error("unreachable family kind");
}

inline Graph build_family(std::string_view text) {
    return build_family(parse_family_spec(text));
}

// Structural recognizers (label-independent). Used by claim guards, so they
// must accept any isomorphic labeling, not only the canonical builders.

inline bool is_empty_graph(const Graph& g) { return g.edge_count() == 0; }

inline bool is_complete_graph(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

inline bool is_path_graph(const Graph& g) {
    const int n = g.order();
    if (n == 1) return true;
    if (g.edge_count() != n - 1 || !is_connected(g)) return false;
    int leaves = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++leaves;
    }
    return leaves == 2;
}

inline bool is_cycle_graph(const Graph& g) {
    const int n = g.order();
    if (n < 3 || g.edge_count() != n || !is_connected(g)) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// K_{1,k} with k >= 1; K2 counts as K_{1,1}.
inline bool is_star_graph(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.edge_count() != n - 1) return false;
    int hubs = 0, leaves = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1)
            ++hubs;
        else if (g.degree(v) == 1)
            ++leaves;
        else
            return false;
    }
    if (n == 2) return true;
    return hubs == 1 && leaves == n - 1;
}

// Unique max-degree vertex of a star of order >= 3 (either endpoint for K2).
inline Vertex star_hub(const Graph& g) {
    if (!is_star_graph(g))
        throw std::invalid_argument("star_hub: graph is not a star");
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return v;
    throw std::logic_error("star without hub");
}

}  // namespace coronapd
