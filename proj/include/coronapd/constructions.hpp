#pragma once

#include <numeric>
#include <sstream>
#include <string>

#include "coronapd/corona.hpp"
#include "coronapd/family.hpp"
#include "coronapd/resolvability.hpp"

namespace coronapd {

// A construction whose output fails its own resolvingness check is a bug in
// the construction, never a value to hand back.
struct ConstructionError : std::logic_error {
    explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

struct ConstructionOutput {
    Partition partition;
    int size;
    std::string provenance;
};

namespace detail {
inline Partition verified(std::vector<std::vector<Vertex>> blocks, const Graph& host,
                          const std::string& who) {
    Partition p(std::move(blocks), host.order());
    const auto check = is_resolving_partition(all_pairs_distances(host), p);
    if (!check.resolving) {
        std::ostringstream msg;
        msg << who << ": constructed partition is not resolving (conflict "
            << check.conflict->first << "," << check.conflict->second << ")";
        throw ConstructionError(msg.str());
    }
    return p;
}
}  // namespace detail

// Turns a resolving set S of the corona that avoids centers and hits every
// copy, plus a resolving partition of G, into a resolving partition
// {A, B_1..B_t, W_1..W_pd(G)} of the corona:
//   S_i = S n V_i, padded with least-id copy vertices up to t = max_i |S_i|;
//   B_j collects the j-th padded pick of every copy;
//   A is everything unpicked (omitted when empty);
//   W_k are the blocks of the partition of G, lifted to center ids.
// Padding keeps the construction total when the picks are unevenly spread.
inline ConstructionOutput construct_from_resolving_set(const CoronaGraph& cg,
                                                       const VertexSet& s,
                                                       const Partition& pg) {
    if (pg.graph_order() != cg.n1())
        throw std::invalid_argument("construct_from_resolving_set: pg must partition G");
    if (!is_resolving_partition(all_pairs_distances(cg.g()), pg).resolving)
        throw std::invalid_argument("construct_from_resolving_set: pg does not resolve G");

    const DistanceMatrix dm = all_pairs_distances(cg.graph());
    if (!is_resolving_set(dm, s).resolving)
        throw std::invalid_argument("construct_from_resolving_set: s does not resolve the corona");

    std::vector<std::vector<Vertex>> picks(cg.n1());
    for (Vertex v : s.members()) {
        const VertexLocus where = cg.locate(v);
        if (where.is_center)
            throw std::invalid_argument("construct_from_resolving_set: s contains a center");
        picks[where.copy].push_back(v);
    }
    int t = 0;
    for (int i = 0; i < cg.n1(); ++i) {
        if (picks[i].empty())
            throw std::invalid_argument("construct_from_resolving_set: s misses copy " +
                                        std::to_string(i));
        std::sort(picks[i].begin(), picks[i].end());
        t = std::max(t, static_cast<int>(picks[i].size()));
    }
    for (int i = 0; i < cg.n1(); ++i) {
        for (int j = 0; j < cg.n2() && static_cast<int>(picks[i].size()) < t; ++j) {
            const Vertex v = cg.copy_vertex(i, j);
            if (std::find(picks[i].begin(), picks[i].end(), v) == picks[i].end())
                picks[i].push_back(v);
        }
    }

    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> rest;  // A
    for (int i = 0; i < cg.n1(); ++i)
        for (int j = 0; j < cg.n2(); ++j) {
            const Vertex v = cg.copy_vertex(i, j);
            if (std::find(picks[i].begin(), picks[i].end(), v) == picks[i].end())
                rest.push_back(v);
        }
    if (!rest.empty()) blocks.push_back(std::move(rest));
    for (int j = 0; j < t; ++j) {
        std::vector<Vertex> bj(cg.n1());
        for (int i = 0; i < cg.n1(); ++i) bj[i] = picks[i][j];
        blocks.push_back(std::move(bj));
    }
    for (int k = 0; k < pg.size(); ++k) blocks.push_back(pg.block(k));

    const int size = static_cast<int>(blocks.size());
    Partition result =
        detail::verified(std::move(blocks), cg.graph(), "construct_from_resolving_set");
    std::ostringstream prov;
    prov << "from-resolving-set |S|=" << s.size() << " t=" << t << " pdG=" << pg.size();
    return ConstructionOutput{std::move(result), size, prov.str()};
}

// {A_1..A_k, B_1..B_t}: the blocks of a resolving partition of G on the
// centers, plus each block of a resolving partition of H unioned across all
// copies. Needs D(H) <= 2 so that distances inside a copy survive the center
// shortcut.
inline ConstructionOutput construct_sum_partition(const CoronaGraph& cg, const Partition& pg,
                                                  const Partition& ph) {
    if (pg.graph_order() != cg.n1() || ph.graph_order() != cg.n2())
        throw std::invalid_argument("construct_sum_partition: partition order mismatch");
    if (!is_connected(cg.h()))
        throw std::invalid_argument("construct_sum_partition: H must be connected");
    if (diameter(cg.h()) > 2)
        throw std::invalid_argument("construct_sum_partition: requires D(H) <= 2");
    if (!is_resolving_partition(all_pairs_distances(cg.g()), pg).resolving)
        throw std::invalid_argument("construct_sum_partition: pg does not resolve G");
    if (!is_resolving_partition(all_pairs_distances(cg.h()), ph).resolving)
        throw std::invalid_argument("construct_sum_partition: ph does not resolve H");

    std::vector<std::vector<Vertex>> blocks;
    for (int k = 0; k < pg.size(); ++k) blocks.push_back(pg.block(k));
    for (int j = 0; j < ph.size(); ++j) {
        std::vector<Vertex> bj;
        for (int i = 0; i < cg.n1(); ++i)
            for (Vertex v : ph.block(j)) bj.push_back(cg.copy_vertex(i, v));
        blocks.push_back(std::move(bj));
    }
    const int size = pg.size() + ph.size();
    Partition result = detail::verified(std::move(blocks), cg.graph(), "construct_sum_partition");
    std::ostringstream prov;
    prov << "sum pdG=" << pg.size() << " pdH=" << ph.size();
    return ConstructionOutput{std::move(result), size, prov.str()};
}

// The n-block partition for H = K_{1,n}: odd blocks seed with a hub, even
// blocks with a center, and each remaining block collects one leaf per copy.
// Requires n >= 2*n1 >= 4, or n1 = 1 with n >= 3 (two-seed variant).
inline ConstructionOutput construct_star_partition(const CoronaGraph& cg) {
    if (!is_star_graph(cg.h()))
        throw std::invalid_argument("construct_star_partition: H is not a star");
    const int n1 = cg.n1();
    const int n = cg.n2() - 1;  // leaf count
    const bool big = n >= 2 * n1 && n1 >= 2;
    const bool single = n1 == 1 && n >= 3;
    if (!big && !single)
        throw std::invalid_argument(
            "construct_star_partition: requires n >= 2*n1 >= 4 or n1 = 1 with n >= 3");

    const Vertex hub = star_hub(cg.h());
    std::vector<int> leaf_pos;  // H-ids of the leaves, in id order
    for (int j = 0; j < cg.n2(); ++j)
        if (j != hub) leaf_pos.push_back(j);
    auto leaf = [&](int i, int l) { return cg.copy_vertex(i, leaf_pos[l]); };

    std::vector<std::vector<Vertex>> blocks(n);
    if (single) {
        blocks[0] = {cg.copy_vertex(0, hub), leaf(0, 0)};
        blocks[1] = {cg.center(0), leaf(0, 1)};
        for (int l = 2; l < n; ++l) blocks[l] = {leaf(0, l)};
    } else {
        for (int i = 0; i < n1; ++i) {
            blocks[2 * i].push_back(cg.copy_vertex(i, hub));
            blocks[2 * i + 1].push_back(cg.center(i));
        }
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n1; ++i) blocks[l].push_back(leaf(i, l));
    }
    Partition result =
        detail::verified(std::move(blocks), cg.graph(), "construct_star_partition");
    std::ostringstream prov;
    prov << "star n1=" << n1 << " n=" << n;
    return ConstructionOutput{std::move(result), n, prov.str()};
}

// The (n2+1)-block partition of P_{n1} (.) N_{n2} for n1 >= n2 >= 2:
//   A_1 = {first center, first vertex of copy 0},
//   A_2 = {every later center with the first vertex of its copy},
//   A_j = the (j-1)-th vertex of every copy, for j = 3..n2+1.
inline ConstructionOutput construct_path_empty_partition(int n1, int n2) {
    if (n2 < 2 || n1 < n2)
        throw std::invalid_argument(
            "construct_path_empty_partition: requires n1 >= n2 >= 2");
    const CoronaGraph cg = corona(build_family(FamilySpec{FamilySpec::Kind::Path, n1}),
                                  build_family(FamilySpec{FamilySpec::Kind::Empty, n2}));
    std::vector<std::vector<Vertex>> blocks;
    blocks.push_back({cg.center(0), cg.copy_vertex(0, 0)});
    std::vector<Vertex> a2;
    for (int i = 1; i < n1; ++i) {
        a2.push_back(cg.center(i));
        a2.push_back(cg.copy_vertex(i, 0));
    }
    blocks.push_back(std::move(a2));
    for (int j = 1; j < n2; ++j) {
        std::vector<Vertex> aj;
        for (int i = 0; i < n1; ++i) aj.push_back(cg.copy_vertex(i, j));
        blocks.push_back(std::move(aj));
    }
    Partition result =
        detail::verified(std::move(blocks), cg.graph(), "construct_path_empty_partition");
    std::ostringstream prov;
    prov << "path-empty n1=" << n1 << " n2=" << n2;
    return ConstructionOutput{std::move(result), n2 + 1, prov.str()};
}

}  // namespace coronapd
