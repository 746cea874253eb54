#pragma once

#include <random>

#include "coronapd/graph.hpp"

namespace coronapd::testsupport {

// Deterministic G(n, p)-style connected graphs. Raw engine draws only:
// std::mt19937 output is pinned by the standard, distributions are not.
inline Graph random_connected_graph(int n, int edge_percent, std::mt19937& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (static_cast<int>(rng() % 100) < edge_percent) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
    Graph g(n);  // fall back to a path; keeps the corpus deterministic
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

inline std::vector<Graph> random_corpus(int min_order, int max_order, int reps_per_cell,
                                        std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    for (int n = min_order; n <= max_order; ++n)
        for (int pct : {30, 45, 60, 80})
            for (int rep = 0; rep < reps_per_cell; ++rep)
                out.push_back(random_connected_graph(n, pct, rng));
    return out;
}

}  // namespace coronapd::testsupport
