#pragma once

#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "coronapd/resolvability.hpp"

namespace coronapd {

// Lexicographic k-subsets of {0..n-1}. The visitor returns false to stop;
// the function returns false iff stopped early.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& visit) {
    if (k < 0 || k > n) return true;
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        if (!visit(std::span<const int>(comb))) return false;
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) return true;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

// Set partitions of {0..n-1} into exactly t blocks, enumerated as restricted
// growth strings in lexicographic order: rgs[0] = 0 and rgs[i] never exceeds
// 1 + max(rgs[0..i-1]). Each unordered partition appears exactly once.
template <typename Fn>
bool for_each_rgs_partition(int n, int t, Fn&& visit) {
    if (t < 1 || t > n) return true;
    std::vector<int> rgs(n, 0);
    bool keep_going = true;
    auto recurse = [&](auto&& self, int i, int used) -> void {
        if (!keep_going) return;
        if (i == n) {
            if (used == t) keep_going = visit(std::span<const int>(rgs));
            return;
        }
        if (used + (n - i) < t) return;  // cannot open enough blocks
        const int limit = std::min(used, t - 1);
        for (int b = 0; b <= limit && keep_going; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    recurse(recurse, 0, 0);
    return keep_going;
}

inline Partition partition_from_rgs(std::span<const int> rgs, int t) {
    std::vector<std::vector<Vertex>> blocks(t);
    for (int v = 0; v < static_cast<int>(rgs.size()); ++v) blocks[rgs[v]].push_back(v);
    return Partition(std::move(blocks), static_cast<int>(rgs.size()));
}

}  // namespace coronapd
