#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coronapd/corona.hpp"
#include "coronapd/graph.hpp"

namespace coronapd {

// Coordinates are hop distances; DistanceMatrix::kUnreachable coordinates
// compare equal to each other and unequal to any finite value, which plain
// integer equality already gives.
using RepresentationVector = std::vector<int>;

// Ordered candidate resolving set. Distinct, valid ids; the coordinate order
// of metric representations follows the stored member order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<Vertex> members, int graph_order = -1)
        : members_(std::move(members)) {
        std::vector<Vertex> sorted = members_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("vertex set contains duplicates");
        for (Vertex v : members_)
            if (v < 0 || (graph_order >= 0 && v >= graph_order))
                throw std::invalid_argument("vertex set id out of range: " +
                                            std::to_string(v));
    }

    const std::vector<Vertex>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    bool contains(Vertex v) const {
        return std::find(members_.begin(), members_.end(), v) != members_.end();
    }

    // Ascending-id copy; the canonical form used for witnesses.
    VertexSet canonical() const {
        std::vector<Vertex> sorted = members_;
        std::sort(sorted.begin(), sorted.end());
        return VertexSet(std::move(sorted));
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

// Ordered partition into disjoint nonempty blocks covering 0..n-1. Stored in
// canonical form: ids ascending within a block, blocks ordered by their
// minimum element (restricted-growth order). Resolvingness is invariant
// under block reordering, so canonicalizing loses nothing.
class Partition {
public:
    Partition(std::vector<std::vector<Vertex>> blocks, int graph_order)
        : n_(graph_order) {
        if (graph_order < 1) throw std::invalid_argument("partition needs a host graph");
        std::vector<char> seen(graph_order, 0);
        int covered = 0;
        for (auto& block : blocks) {
            if (block.empty()) throw std::invalid_argument("empty partition block");
            std::sort(block.begin(), block.end());
            for (Vertex v : block) {
                if (v < 0 || v >= graph_order)
                    throw std::invalid_argument("partition id out of range: " +
                                                std::to_string(v));
                if (seen[v])
                    throw std::invalid_argument("partition blocks overlap at " +
                                                std::to_string(v));
                seen[v] = 1;
                ++covered;
            }
        }
        if (covered != graph_order)
            throw std::invalid_argument("partition does not cover all vertices");
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        blocks_ = std::move(blocks);
        block_of_.assign(graph_order, -1);
        for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
            for (Vertex v : blocks_[b]) block_of_[v] = b;
    }

    int graph_order() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
    const std::vector<Vertex>& block(int b) const { return blocks_.at(b); }
    int block_of(Vertex v) const { return block_of_.at(v); }

    bool operator==(const Partition&) const = default;

private:
    int n_;
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<int> block_of_;
};

// --- text formats -----------------------------------------------------------
// Sets: ids joined by ','. Partitions: blocks joined by '|', ids by ','.
// Whitespace is ignored on parse.

inline std::string format_vertex_set(const VertexSet& s) {
    std::ostringstream out;
    for (int i = 0; i < s.size(); ++i) {
        if (i) out << ",";
        out << s.members()[i];
    }
    return out.str();
}

inline std::string format_partition(const Partition& p) {
    std::ostringstream out;
    for (int b = 0; b < p.size(); ++b) {
        if (b) out << "|";
        const auto& block = p.block(b);
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) out << ",";
            out << block[i];
        }
    }
    return out.str();
}

namespace detail {
inline std::vector<Vertex> parse_id_list(std::string_view text) {
    std::vector<Vertex> ids;
    int value = 0;
    bool in_number = false;
    auto flush = [&] {
        if (!in_number) throw std::invalid_argument("expected vertex id");
        ids.push_back(value);
        value = 0;
        in_number = false;
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            value = value * 10 + (ch - '0');
            if (value > 10'000'000) throw std::invalid_argument("vertex id too large");
            in_number = true;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + ch +
                                        "' in id list");
        }
    }
    flush();
    return ids;
}
}  // namespace detail

inline VertexSet parse_vertex_set(std::string_view text, int graph_order = -1) {
    return VertexSet(detail::parse_id_list(text), graph_order);
}

inline Partition parse_partition(std::string_view text, int graph_order) {
    std::vector<std::vector<Vertex>> blocks;
    size_t start = 0;
    while (true) {
        const size_t bar = text.find('|', start);
        const std::string_view piece =
            bar == std::string_view::npos ? text.substr(start) : text.substr(start, bar - start);
        blocks.push_back(detail::parse_id_list(piece));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return Partition(std::move(blocks), graph_order);
}

// --- representations and checkers -------------------------------------------

inline RepresentationVector metric_representation(const DistanceMatrix& dm,
                                                  const VertexSet& s, Vertex v) {
    if (s.empty()) throw std::invalid_argument("metric representation of an empty set");
    RepresentationVector r(s.size());
    for (int j = 0; j < s.size(); ++j) r[j] = dm.at(v, s.members()[j]);
    return r;
}

// Min distance from v to each block; kUnreachable when no block member is
// reachable from v.
inline RepresentationVector partition_representation(const DistanceMatrix& dm,
                                                     const Partition& p, Vertex v) {
    RepresentationVector r(p.size());
    for (int b = 0; b < p.size(); ++b) {
        int best = DistanceMatrix::kUnreachable;
        for (Vertex u : p.block(b)) {
            const int d = dm.at(v, u);
            if (d == DistanceMatrix::kUnreachable) continue;
            if (best == DistanceMatrix::kUnreachable || d < best) best = d;
        }
        r[b] = best;
    }
    return r;
}

struct CheckResult {
    bool resolving;
    std::optional<std::pair<Vertex, Vertex>> conflict;  // lexicographically least
};

namespace detail {
// Least pair (u, v), u < v, with equal vectors; nullopt when all distinct.
inline std::optional<std::pair<Vertex, Vertex>> least_conflict(
    const std::vector<RepresentationVector>& vectors) {
    const int n = static_cast<int>(vectors.size());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (vectors[u] == vectors[v]) return std::make_pair(u, v);
    return std::nullopt;
}
}  // namespace detail

inline CheckResult is_resolving_set(const DistanceMatrix& dm, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("resolving check of an empty set");
    std::vector<RepresentationVector> vectors(dm.order());
    for (Vertex v = 0; v < dm.order(); ++v) vectors[v] = metric_representation(dm, s, v);
    auto conflict = detail::least_conflict(vectors);
    return CheckResult{!conflict.has_value(), conflict};
}

inline CheckResult is_resolving_partition(const DistanceMatrix& dm, const Partition& p) {
    if (p.graph_order() != dm.order())
        throw std::invalid_argument("partition and distance matrix order mismatch");
    // Conflicts can only pair vertices of the same block (any other pair
    // differs at its zero coordinate), but the lexicographic scan below is
    // already correct and cheap at this scale.
    std::vector<RepresentationVector> vectors(dm.order());
    for (Vertex v = 0; v < dm.order(); ++v) vectors[v] = partition_representation(dm, p, v);
    auto conflict = detail::least_conflict(vectors);
    return CheckResult{!conflict.has_value(), conflict};
}

// Twin classes: u and v are twins iff d(u,x) = d(v,x) for every x outside
// {u,v}. Twinness is an equivalence relation; classes come out sorted, ordered
// by least member.
inline std::vector<std::vector<Vertex>> twin_classes(const DistanceMatrix& dm) {
    const int n = dm.order();
    auto twins = [&](Vertex u, Vertex v) {
        for (Vertex x = 0; x < n; ++x) {
            if (x == u || x == v) continue;
            if (dm.at(u, x) != dm.at(v, x)) return false;
        }
        return true;
    };
    std::vector<int> cls(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex u = 0; u < n; ++u) {
        if (cls[u] >= 0) continue;
        cls[u] = static_cast<int>(out.size());
        out.push_back({u});
        for (Vertex v = u + 1; v < n; ++v) {
            if (cls[v] < 0 && twins(u, v)) {
                cls[v] = cls[u];
                out[cls[u]].push_back(v);
            }
        }
    }
    return out;
}

// The partition {S n V_i : S in p, nonempty} relabeled to H's vertex ids.
inline Partition induce_copy_partition(const CoronaGraph& cg, const Partition& p, int i) {
    if (p.graph_order() != cg.order())
        throw std::invalid_argument("partition is not over the corona's vertex set");
    if (i < 0 || i >= cg.n1()) throw std::invalid_argument("copy index out of range");
    std::vector<std::vector<Vertex>> blocks;
    for (int b = 0; b < p.size(); ++b) {
        std::vector<Vertex> piece;
        for (Vertex v : p.block(b)) {
            const VertexLocus where = cg.locate(v);
            if (!where.is_center && where.copy == i) piece.push_back(where.index);
        }
        if (!piece.empty()) blocks.push_back(std::move(piece));
    }
    return Partition(std::move(blocks), cg.n2());
}

}  // namespace coronapd
