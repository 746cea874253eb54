#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace coronapd {

using Vertex = int;

// Simple undirected graph over vertex ids 0..n-1. No self-loops, no
// multi-edges; adjacency is kept both as a matrix (O(1) queries) and as
// sorted neighbor lists (BFS).
class Graph {
public:
    explicit Graph(int order) : n_(order) {
        if (order < 1)
            throw std::invalid_argument("graph order must be >= 1");
        matrix_.assign(static_cast<size_t>(n_) * n_, 0);
        neighbors_.resize(n_);
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
        if (adjacent(u, v))
            throw std::invalid_argument("duplicate edge rejected: " + std::to_string(u) +
                                        " " + std::to_string(v));
        matrix_[static_cast<size_t>(u) * n_ + v] = 1;
        matrix_[static_cast<size_t>(v) * n_ + u] = 1;
        auto insert_sorted = [](std::vector<Vertex>& vec, Vertex x) {
            vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
        };
        insert_sorted(neighbors_[u], v);
        insert_sorted(neighbors_[v], u);
        ++m_;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return neighbors_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && matrix_ == other.matrix_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<char> matrix_;
    std::vector<std::vector<Vertex>> neighbors_;
};

// Exact BFS hop distances. Cross-component pairs hold kUnreachable, so a
// disconnected graph is a first-class input.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int order) : n_(order) {
        d_.assign(static_cast<size_t>(n_) * n_, kUnreachable);
    }

    int order() const { return n_; }

    int at(Vertex u, Vertex v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int& at(Vertex u, Vertex v) { return d_[static_cast<size_t>(u) * n_ + v]; }

    bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }

private:
    int n_;
    std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
    std::vector<int> dist(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == DistanceMatrix::kUnreachable) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        for (Vertex v = 0; v < n; ++v) dm.at(s, v) = dist[v];
    }
    return dm;
}

// Connected components, each a sorted vertex list; components ordered by
// their least vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return components(g).size() == 1;
}

inline int diameter(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("diameter undefined: graph is disconnected");
    DistanceMatrix dm = all_pairs_distances(g);
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) best = std::max(best, dm.at(u, v));
    return best;
}

// Structural features of a (possibly disconnected) graph H:
//   alpha_ge2       components of order >= 2
//   beta            isolated vertices
//   c               max order of a component that is a complete graph,
//                   0 when no component is complete (a K1 component counts
//                   as a complete component of order 1)
//   component_count total components; alpha_ge2 + beta == component_count
//   diameter        set only when the graph is connected
struct HFeatures {
    int alpha_ge2 = 0;
    int beta = 0;
    int c = 0;
    int component_count = 0;
    std::optional<int> diameter;
};

inline HFeatures h_features(const Graph& g) {
    HFeatures f;
    DistanceMatrix dm = all_pairs_distances(g);
    auto comps = components(g);
    f.component_count = static_cast<int>(comps.size());
    for (const auto& comp : comps) {
        const int k = static_cast<int>(comp.size());
        if (k >= 2)
            ++f.alpha_ge2;
        else
            ++f.beta;
        bool complete = true;
        for (size_t i = 0; i < comp.size() && complete; ++i)
            for (size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) {
                    complete = false;
                    break;
                }
        if (complete) f.c = std::max(f.c, k);
    }
    if (comps.size() == 1) {
        int best = 0;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) best = std::max(best, dm.at(u, v));
        f.diameter = best;
    }
    return f;
}

}  // namespace coronapd
