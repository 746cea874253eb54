#pragma once

#include <atomic>
#include <climits>
#include <cstdint>
#include <exception>
#include <limits>
#include <memory>
#include <optional>
#include <thread>
#include <variant>

#include "coronapd/enumeration.hpp"
#include "coronapd/resolvability.hpp"

namespace coronapd {

// Raised when a search spends its node budget. Never a wrong answer: callers
// see an explicit error, and the harness maps it to an inconclusive outcome.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t nodes;
    explicit BudgetExceeded(std::uint64_t node_count)
        : std::runtime_error("solver node budget exceeded"), nodes(node_count) {}
};

struct SolveOptions {
    std::uint64_t node_budget = 1'000'000'000;  // search node expansions
    int threads = 1;
};

struct SolveResult {
    int value = 0;
    std::variant<VertexSet, Partition> witness{VertexSet{}};
    std::uint64_t nodes_explored = 0;
    bool used_oracle = false;

    const VertexSet& set_witness() const { return std::get<VertexSet>(witness); }
    const Partition& partition_witness() const { return std::get<Partition>(witness); }
};

namespace detail {

inline void require_solvable(const Graph& g, const char* who) {
    if (g.order() < 2)
        throw std::invalid_argument(std::string(who) + ": order-1 graphs are rejected");
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

// Partition representation vectors straight from a restricted growth string;
// distinctness only needs same-block comparisons (other pairs differ at a
// zero coordinate).
inline bool rgs_resolves(const DistanceMatrix& dm, std::span<const int> rgs, int t,
                         std::vector<int>& scratch) {
    const int n = dm.order();
    constexpr int kInf = INT_MAX / 4;
    scratch.assign(static_cast<size_t>(n) * t, kInf);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u) {
            int& slot = scratch[static_cast<size_t>(v) * t + rgs[u]];
            slot = std::min(slot, dm.at(v, u));
        }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (rgs[u] != rgs[v]) continue;
            bool equal = true;
            for (int b = 0; b < t; ++b)
                if (scratch[static_cast<size_t>(u) * t + b] !=
                    scratch[static_cast<size_t>(v) * t + b]) {
                    equal = false;
                    break;
                }
            if (equal) return false;
        }
    return true;
}

inline bool subset_resolves(const DistanceMatrix& dm, std::span<const int> subset) {
    const int n = dm.order();
    const int k = static_cast<int>(subset.size());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool equal = true;
            for (int j = 0; j < k; ++j)
                if (dm.at(u, subset[j]) != dm.at(v, subset[j])) {
                    equal = false;
                    break;
                }
            if (equal) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Deterministic branch runner.
//
// A search is decomposed into an ordered list of branches fixed by the
// instance alone, never by the worker count. Every branch runs with the full
// node budget; outcomes are then replayed in branch order with sequential
// budget accounting, so value, witness, node count and budget overruns are
// identical no matter how many threads executed the branches. Workers may
// skip a branch once a lower-indexed branch has already found a witness or
// died on budget, because aggregation never reads past that index.
// ---------------------------------------------------------------------------

template <typename Result>
struct BranchOutcome {
    std::optional<Result> found;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::exception_ptr error;
};

template <typename Result, typename Run>
std::pair<std::optional<Result>, std::uint64_t> run_branches(size_t count, int threads,
                                                             std::uint64_t budget,
                                                             Run&& run_branch) {
    std::vector<BranchOutcome<Result>> outcomes(count);
    std::vector<char> ran(count, 0);

    auto execute = [&](size_t i) {
        BranchOutcome<Result>& out = outcomes[i];
        try {
            out = run_branch(i, budget);
        } catch (const BudgetExceeded& e) {
            out.budget_hit = true;
            out.nodes = e.nodes;
        } catch (...) {
            out.error = std::current_exception();
        }
        ran[i] = 1;
    };

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) {
            execute(i);
            if (outcomes[i].found || outcomes[i].budget_hit || outcomes[i].error) break;
        }
    } else {
        std::atomic<size_t> next{0};
        std::atomic<size_t> stop_at{count};  // lowest index that settles the run
        auto worker = [&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                if (i > stop_at.load(std::memory_order_relaxed)) continue;
                execute(i);
                if (outcomes[i].found || outcomes[i].budget_hit || outcomes[i].error) {
                    size_t cur = stop_at.load(std::memory_order_relaxed);
                    while (i < cur &&
                           !stop_at.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Sequential replay of the outcomes.
    std::uint64_t spent = 0;
    for (size_t i = 0; i < count; ++i) {
        if (!ran[i]) throw std::logic_error("branch runner skipped a required branch");
        BranchOutcome<Result>& out = outcomes[i];
        if (out.error) std::rethrow_exception(out.error);
        const std::uint64_t allowance = budget - spent;
        if (out.budget_hit || out.nodes > allowance) throw BudgetExceeded(budget);
        if (out.found) return {std::move(out.found), spent + out.nodes};
        spent += out.nodes;
    }
    return {std::nullopt, spent};
}

// ---------------------------------------------------------------------------
// Partition-dimension search: canonical restricted-growth assignments with
// three prunes.
//  - block-count reachability: a prefix that can no longer open t blocks dies;
//  - twins never share a block, and a twin class occupies increasing block
//    indices in id order: swapping two twins is a graph automorphism, so one
//    orbit representative per class ordering suffices;
//  - dead pairs: two same-block vertices with equal current min-distance
//    vectors can never be separated once no unassigned vertex can move the
//    vectors apart. Coordinates only shrink as vertices join blocks, so an
//    unassigned x separates the pair only when d(u,x) != d(v,x) and
//    min(d(u,x), d(v,x)) undercuts some current coordinate; with unopened
//    blocks counting as infinite, the row maximum m makes that test
//    "min(d(u,x), d(v,x)) < m".
// Vertices are assigned in id order, so for a corona each copy's internal
// pairs settle as soon as the copy's id block is complete.
// ---------------------------------------------------------------------------

struct PdTables {
    int n = 0;
    std::vector<int> dist;                           // n*n
    std::vector<std::vector<Vertex>> twin_partners;  // partners with smaller id

    explicit PdTables(const DistanceMatrix& dm) : n(dm.order()) {
        dist.resize(static_cast<size_t>(n) * n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) dist[static_cast<size_t>(u) * n + v] = dm.at(u, v);
        twin_partners.assign(n, {});
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                bool twins = true;
                for (Vertex x = 0; x < n && twins; ++x) {
                    if (x == u || x == v) continue;
                    if (dm.at(u, x) != dm.at(v, x)) twins = false;
                }
                if (twins) twin_partners[v].push_back(u);
            }
    }

    int d(Vertex u, Vertex v) const { return dist[static_cast<size_t>(u) * n + v]; }
};

class PdSearch {
public:
    static constexpr int kInf = INT_MAX / 4;

    PdSearch(const PdTables& tables, int t)
        : tab_(tables), n_(tables.n), t_(t), block_of_(tables.n, -1),
          cur_(static_cast<size_t>(tables.n) * t, kInf), members_(t), journal_(tables.n) {}

    // Runs the subtree below `prefix` (block values for vertices 0..p-1).
    // Returns the first resolving partition in canonical order, if any.
    std::optional<Partition> run(std::span<const int> prefix, std::uint64_t allowance,
                                 std::uint64_t& nodes_used) {
        allowance_ = allowance;
        nodes_ = 0;
        for (int i = 0; i < static_cast<int>(prefix.size()); ++i) {
            apply(i, prefix[i]);
            used_ = std::max(used_, prefix[i] + 1);
        }
        std::optional<Partition> found;
        dfs(static_cast<int>(prefix.size()), found);
        nodes_used = nodes_;
        return found;
    }

    // Enumerates all live prefixes of the given depth in canonical order.
    std::vector<std::vector<int>> collect_prefixes(int depth, std::uint64_t allowance,
                                                   std::uint64_t& nodes_used) {
        allowance_ = allowance;
        nodes_ = 0;
        collect_depth_ = depth;
        prefixes_.clear();
        std::optional<Partition> unused;
        dfs(0, unused);
        collect_depth_ = -1;
        nodes_used = nodes_;
        return std::move(prefixes_);
    }

private:
    bool dfs(int i, std::optional<Partition>& found) {
        if (i == n_) {
            found = snapshot();
            return true;
        }
        if (i == collect_depth_) {
            prefixes_.emplace_back(block_of_.begin(), block_of_.begin() + i);
            return false;
        }
        const int limit = std::min(used_, t_ - 1);
        int first = 0;
        for (Vertex u : tab_.twin_partners[i]) first = std::max(first, block_of_[u] + 1);
        for (int b = first; b <= limit; ++b) {
            const int opened = std::max(used_, b + 1);
            if (opened + (n_ - i - 1) < t_) continue;  // cannot reach t blocks
            if (nodes_ >= allowance_) throw BudgetExceeded(nodes_);
            ++nodes_;
            const int prev_used = used_;
            apply(i, b);
            used_ = opened;
            if (!dead_after(i) && dfs(i + 1, found)) return true;
            undo(i, b);
            used_ = prev_used;
        }
        return false;
    }

    void apply(Vertex i, int b) {
        auto& journal = journal_[i];
        journal.clear();
        for (Vertex u = 0; u < i; ++u) {
            const int d = tab_.d(u, i);
            int& slot = cur_[static_cast<size_t>(u) * t_ + b];
            if (d < slot) {
                journal.push_back({u, slot});
                slot = d;
            }
        }
        int* row = &cur_[static_cast<size_t>(i) * t_];
        std::fill(row, row + t_, kInf);
        for (Vertex u = 0; u < i; ++u) {
            int& slot = row[block_of_[u]];
            slot = std::min(slot, tab_.d(u, i));
        }
        row[b] = 0;  // own block
        block_of_[i] = b;
        members_[b].push_back(i);
    }

    void undo(Vertex i, int b) {
        members_[b].pop_back();
        block_of_[i] = -1;
        for (auto it = journal_[i].rbegin(); it != journal_[i].rend(); ++it)
            cur_[static_cast<size_t>(it->first) * t_ + b] = it->second;
    }

    bool rows_equal(Vertex u, Vertex v) const {
        const int* a = &cur_[static_cast<size_t>(u) * t_];
        const int* b = &cur_[static_cast<size_t>(v) * t_];
        for (int k = 0; k < t_; ++k)
            if (a[k] != b[k]) return false;
        return true;
    }

    // True when some same-block pair can no longer be separated. Every pair
    // is re-tested each step: assignments elsewhere can pull two rows into
    // equality, and each assignment also shrinks the pool of separators.
    bool dead_after(Vertex i) {
        for (int c = 0; c < t_; ++c) {
            const auto& block = members_[c];
            for (size_t a = 0; a + 1 < block.size(); ++a)
                for (size_t b2 = a + 1; b2 < block.size(); ++b2) {
                    const Vertex u = block[a];
                    const Vertex v = block[b2];
                    if (!rows_equal(u, v)) continue;
                    if (pair_is_dead(u, v, i)) return true;
                }
        }
        return false;
    }

    bool pair_is_dead(Vertex u, Vertex v, Vertex last_assigned) const {
        const int* row = &cur_[static_cast<size_t>(u) * t_];
        int m = 0;
        for (int k = 0; k < t_; ++k) m = std::max(m, row[k]);
        for (Vertex x = last_assigned + 1; x < n_; ++x) {
            const int du = tab_.d(u, x);
            const int dv = tab_.d(v, x);
            if (du != dv && std::min(du, dv) < m) return false;
        }
        return true;
    }

    Partition snapshot() const {
        std::vector<std::vector<Vertex>> blocks(t_);
        for (Vertex v = 0; v < n_; ++v) blocks[block_of_[v]].push_back(v);
        return Partition(std::move(blocks), n_);
    }

    const PdTables& tab_;
    int n_;
    int t_;
    int used_ = 0;
    int collect_depth_ = -1;
    std::vector<int> block_of_;
    std::vector<int> cur_;
    std::vector<std::vector<Vertex>> members_;
    std::vector<std::vector<std::pair<Vertex, int>>> journal_;
    std::vector<std::vector<int>> prefixes_;
    std::uint64_t nodes_ = 0;
    std::uint64_t allowance_ = 0;
};

// Search decomposition depth: fixed per instance so that results and node
// accounting never depend on the worker count.
inline int pd_prefix_depth(int n) { return n >= 10 ? 6 : 0; }

inline std::optional<Partition> find_partition_with_t_blocks(const PdTables& tables, int t,
                                                             const SolveOptions& opts,
                                                             std::uint64_t& nodes_accum) {
    const int depth = pd_prefix_depth(tables.n);
    std::uint64_t prefix_nodes = 0;
    std::vector<std::vector<int>> prefixes;
    if (depth == 0) {
        prefixes.push_back({});
    } else {
        PdSearch gen(tables, t);
        prefixes = gen.collect_prefixes(depth, opts.node_budget, prefix_nodes);
    }
    nodes_accum += prefix_nodes;
    if (prefix_nodes >= opts.node_budget) throw BudgetExceeded(prefix_nodes);
    const std::uint64_t branch_budget = opts.node_budget - prefix_nodes;

    auto [found, spent] = run_branches<Partition>(
        prefixes.size(), opts.threads, branch_budget,
        [&](size_t idx, std::uint64_t allowance) {
            BranchOutcome<Partition> out;
            PdSearch search(tables, t);
            std::uint64_t used = 0;
            out.found = search.run(prefixes[idx], allowance, used);
            out.nodes = used;
            return out;
        });
    nodes_accum += spent;
    return std::move(found);
}

// ---------------------------------------------------------------------------
// Metric-dimension search: cover the unordered vertex pairs, where vertex w
// distinguishes {u,v} iff d(u,w) != d(v,w). Branches on the uncovered pair
// with the fewest remaining distinguishers; the i-th branch takes candidate i
// and forbids candidates 0..i-1 so subtrees never overlap.
// ---------------------------------------------------------------------------

struct DimTables {
    int n = 0;
    int pair_count = 0;
    int words = 0;
    std::vector<std::uint64_t> all;                 // every pair bit set
    std::vector<std::uint64_t> covers;              // n rows x words
    std::vector<std::vector<Vertex>> pair_cands;    // distinguishers per pair
    std::vector<std::pair<Vertex, Vertex>> pairs;   // pair index -> (u,v)

    explicit DimTables(const DistanceMatrix& dm) : n(dm.order()) {
        pair_count = n * (n - 1) / 2;
        words = (pair_count + 63) / 64;
        all.assign(words, 0);
        covers.assign(static_cast<size_t>(n) * words, 0);
        pair_cands.assign(pair_count, {});
        pairs.resize(pair_count);
        int p = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++p) {
                pairs[p] = {u, v};
                all[p / 64] |= std::uint64_t{1} << (p % 64);
                for (Vertex w = 0; w < n; ++w)
                    if (dm.at(u, w) != dm.at(v, w)) {
                        covers[static_cast<size_t>(w) * words + p / 64] |=
                            std::uint64_t{1} << (p % 64);
                        pair_cands[p].push_back(w);
                    }
            }
    }

    const std::uint64_t* row(Vertex w) const { return &covers[static_cast<size_t>(w) * words]; }
};

class DimSearch {
public:
    DimSearch(const DimTables& tables, int k)
        : tab_(tables), k_(k), forbidden_(tables.n, 0),
          covered_((k + 1) * tables.words, 0) {}

    std::optional<std::vector<Vertex>> run(Vertex first, std::span<const Vertex> forbid,
                                           std::uint64_t allowance, std::uint64_t& nodes_used) {
        allowance_ = allowance;
        nodes_ = 0;
        for (Vertex w : forbid) forbidden_[w] = 1;
        ++nodes_;
        chosen_.push_back(first);
        or_rows(0, first);
        std::optional<std::vector<Vertex>> found;
        dfs(1, found);
        nodes_used = nodes_;
        return found;
    }

    // Candidate distinguishers of the branching pair at the root.
    static std::vector<Vertex> root_candidates(const DimTables& tables) {
        int best = -1;
        size_t best_size = SIZE_MAX;
        for (int p = 0; p < tables.pair_count; ++p)
            if (tables.pair_cands[p].size() < best_size) {
                best = p;
                best_size = tables.pair_cands[p].size();
            }
        return best < 0 ? std::vector<Vertex>{} : tables.pair_cands[best];
    }

private:
    void or_rows(int depth, Vertex w) {
        const std::uint64_t* base = depth == 0 ? nullptr : &covered_[(depth - 1) * tab_.words];
        std::uint64_t* dst = &covered_[depth * tab_.words];
        const std::uint64_t* add = tab_.row(w);
        for (int i = 0; i < tab_.words; ++i) dst[i] = (base ? base[i] : 0) | add[i];
    }

    bool covered_all(int depth) const {
        const std::uint64_t* cov = &covered_[depth * tab_.words];
        for (int i = 0; i < tab_.words; ++i)
            if (cov[i] != tab_.all[i]) return false;
        return true;
    }

    bool dfs(int depth, std::optional<std::vector<Vertex>>& found) {
        if (covered_all(depth - 1)) {
            found = chosen_;
            return true;
        }
        if (static_cast<int>(chosen_.size()) == k_) return false;
        const std::uint64_t* cov = &covered_[(depth - 1) * tab_.words];

        // Coverage bound: the best remaining vertex caps progress per pick.
        int uncovered = 0;
        for (int i = 0; i < tab_.words; ++i)
            uncovered += __builtin_popcountll(tab_.all[i] & ~cov[i]);
        int max_cover = 0;
        for (Vertex w = 0; w < tab_.n; ++w) {
            if (forbidden_[w]) continue;
            int c = 0;
            const std::uint64_t* rw = tab_.row(w);
            for (int i = 0; i < tab_.words; ++i)
                c += __builtin_popcountll(rw[i] & ~cov[i]);
            max_cover = std::max(max_cover, c);
        }
        if (max_cover == 0) return false;
        const int picks_left = k_ - static_cast<int>(chosen_.size());
        if (static_cast<std::uint64_t>(picks_left) * max_cover <
            static_cast<std::uint64_t>(uncovered))
            return false;

        // Branch on the uncovered pair with the fewest allowed candidates.
        int best_pair = -1;
        int best_count = INT_MAX;
        for (int p = 0; p < tab_.pair_count; ++p) {
            if (cov[p / 64] & (std::uint64_t{1} << (p % 64))) continue;
            int count = 0;
            for (Vertex w : tab_.pair_cands[p])
                if (!forbidden_[w]) ++count;
            if (count < best_count) {
                best_count = count;
                best_pair = p;
                if (count <= 1) break;
            }
        }
        if (best_pair < 0 || best_count == 0) return false;

        std::vector<Vertex> frame_forbidden;
        bool ok = false;
        for (Vertex w : tab_.pair_cands[best_pair]) {
            if (forbidden_[w]) continue;
            if (nodes_ >= allowance_) {
                for (Vertex f : frame_forbidden) forbidden_[f] = 0;
                throw BudgetExceeded(nodes_);
            }
            ++nodes_;
            chosen_.push_back(w);
            or_rows(depth, w);
            if (dfs(depth + 1, found)) {
                ok = true;
                break;
            }
            chosen_.pop_back();
            forbidden_[w] = 1;
            frame_forbidden.push_back(w);
        }
        for (Vertex f : frame_forbidden) forbidden_[f] = 0;
        return ok;
    }

    const DimTables& tab_;
    int k_;
    std::vector<char> forbidden_;
    std::vector<std::uint64_t> covered_;  // per-depth masks
    std::vector<Vertex> chosen_;
    std::uint64_t nodes_ = 0;
    std::uint64_t allowance_ = 0;
};

inline std::optional<VertexSet> find_set_of_size(const DimTables& tables, int k,
                                                 const SolveOptions& opts,
                                                 std::uint64_t& nodes_accum) {
    const std::vector<Vertex> cands = DimSearch::root_candidates(tables);
    auto [found, spent] = run_branches<std::vector<Vertex>>(
        cands.size(), opts.threads, opts.node_budget,
        [&](size_t idx, std::uint64_t allowance) {
            BranchOutcome<std::vector<Vertex>> out;
            DimSearch search(tables, k);
            std::uint64_t used = 0;
            out.found = search.run(cands[idx],
                                   std::span<const Vertex>(cands.data(), idx), allowance, used);
            out.nodes = used;
            return out;
        });
    nodes_accum += spent;
    if (!found) return std::nullopt;
    std::sort(found->begin(), found->end());
    return VertexSet(std::move(*found));
}

}  // namespace detail

// --- lower bounds ------------------------------------------------------------

// Twin argument: a resolving set misses at most one vertex of each twin class.
inline int dim_lower_bound(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("dim_lower_bound: graph must be connected");
    const auto classes = twin_classes(all_pairs_distances(g));
    int sum = 0;
    for (const auto& cls : classes) sum += static_cast<int>(cls.size()) - 1;
    if (g.order() >= 2) sum = std::max(sum, 1);
    return sum;
}

// max(largest twin class, counting bound, 2). The counting bound: a partition
// vector has one zero at the own-block coordinate and every other coordinate
// in 1..D, so t blocks yield at most t*D^(t-1) distinct vectors.
inline int pd_lower_bound(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("pd_lower_bound: graph must be connected");
    const int n = g.order();
    if (n == 1) return 1;
    const int dia = diameter(g);
    int largest_class = 1;
    for (const auto& cls : twin_classes(all_pairs_distances(g)))
        largest_class = std::max(largest_class, static_cast<int>(cls.size()));
    int counting = n;  // t = n always suffices
    for (int t = 2; t <= n; ++t) {
        std::uint64_t vectors = t;
        for (int e = 0; e < t - 1 && vectors < static_cast<std::uint64_t>(n); ++e)
            vectors *= static_cast<std::uint64_t>(dia);
        if (vectors >= static_cast<std::uint64_t>(n)) {
            counting = t;
            break;
        }
    }
    return std::max({largest_class, counting, 2});
}

// --- oracles -----------------------------------------------------------------

// First resolving k-subset in lexicographic order, smallest k first.
inline SolveResult metric_dimension_oracle(const Graph& g) {
    detail::require_solvable(g, "metric_dimension_oracle");
    const DistanceMatrix dm = all_pairs_distances(g);
    const int n = g.order();
    SolveResult result;
    result.used_oracle = true;
    for (int k = 1; k <= n - 1; ++k) {
        std::optional<VertexSet> witness;
        for_each_combination(n, k, [&](std::span<const int> comb) {
            ++result.nodes_explored;
            if (detail::subset_resolves(dm, comb)) {
                witness = VertexSet(std::vector<Vertex>(comb.begin(), comb.end()));
                return false;
            }
            return true;
        });
        if (witness) {
            result.value = k;
            result.witness = std::move(*witness);
            return result;
        }
    }
    throw std::logic_error("metric_dimension_oracle: no resolving set found");
}

// First resolving partition in restricted-growth order, fewest blocks first.
inline SolveResult partition_dimension_oracle(const Graph& g) {
    detail::require_solvable(g, "partition_dimension_oracle");
    const DistanceMatrix dm = all_pairs_distances(g);
    const int n = g.order();
    SolveResult result;
    result.used_oracle = true;
    std::vector<int> scratch;
    for (int t = 2; t <= n; ++t) {
        std::optional<Partition> witness;
        for_each_rgs_partition(n, t, [&](std::span<const int> rgs) {
            ++result.nodes_explored;
            if (detail::rgs_resolves(dm, rgs, t, scratch)) {
                witness = partition_from_rgs(rgs, t);
                return false;
            }
            return true;
        });
        if (witness) {
            result.value = t;
            result.witness = std::move(*witness);
            return result;
        }
    }
    throw std::logic_error("partition_dimension_oracle: no resolving partition found");
}

// --- optimized solvers ---------------------------------------------------------

// Is there a resolving set of exactly this size? Budgeted and deterministic.
inline std::optional<VertexSet> find_resolving_set_of_size(const Graph& g, int k,
                                                           const SolveOptions& opts = {}) {
    detail::require_solvable(g, "find_resolving_set_of_size");
    if (k < 1 || k >= g.order()) throw std::invalid_argument("set size out of range");
    const DistanceMatrix dm = all_pairs_distances(g);
    detail::DimTables tables(dm);
    std::uint64_t nodes = 0;
    return detail::find_set_of_size(tables, k, opts, nodes);
}

// Is there a resolving partition with exactly t blocks? Budgeted and
// deterministic; nullopt is an exhaustive (pruned) refutation.
inline std::optional<Partition> find_resolving_partition_with_blocks(
    const Graph& g, int t, const SolveOptions& opts = {}) {
    detail::require_solvable(g, "find_resolving_partition_with_blocks");
    if (t < 1 || t > g.order()) throw std::invalid_argument("block count out of range");
    const DistanceMatrix dm = all_pairs_distances(g);
    detail::PdTables tables(dm);
    std::uint64_t nodes = 0;
    return detail::find_partition_with_t_blocks(tables, t, opts, nodes);
}

inline SolveResult metric_dimension(const Graph& g, const SolveOptions& opts = {}) {
    detail::require_solvable(g, "metric_dimension");
    const DistanceMatrix dm = all_pairs_distances(g);
    detail::DimTables tables(dm);
    SolveResult result;
    const int start = std::max(1, dim_lower_bound(g));
    for (int k = start; k <= g.order() - 1; ++k) {
        SolveOptions rest = opts;
        if (result.nodes_explored >= opts.node_budget)
            throw BudgetExceeded(result.nodes_explored);
        rest.node_budget = opts.node_budget - result.nodes_explored;
        auto witness = detail::find_set_of_size(tables, k, rest, result.nodes_explored);
        if (witness) {
            const auto check = is_resolving_set(dm, *witness);
            if (!check.resolving || witness->size() > k)
                throw std::logic_error("metric_dimension produced an invalid witness");
            result.value = witness->size();
            result.witness = std::move(*witness);
            return result;
        }
    }
    throw std::logic_error("metric_dimension: no resolving set found");
}

inline SolveResult partition_dimension(const Graph& g, const SolveOptions& opts = {}) {
    detail::require_solvable(g, "partition_dimension");
    const DistanceMatrix dm = all_pairs_distances(g);
    detail::PdTables tables(dm);
    SolveResult result;
    for (int t = pd_lower_bound(g); t <= g.order(); ++t) {
        SolveOptions rest = opts;
        if (result.nodes_explored >= opts.node_budget)
            throw BudgetExceeded(result.nodes_explored);
        rest.node_budget = opts.node_budget - result.nodes_explored;
        auto witness = detail::find_partition_with_t_blocks(tables, t, rest,
                                                            result.nodes_explored);
        if (witness) {
            const auto check = is_resolving_partition(dm, *witness);
            if (!check.resolving || witness->size() != t)
                throw std::logic_error("partition_dimension produced an invalid witness");
            result.value = t;
            result.witness = std::move(*witness);
            return result;
        }
    }
    throw std::logic_error("partition_dimension: no resolving partition found");
}

}  // namespace coronapd
