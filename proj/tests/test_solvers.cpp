#include <catch2/catch.hpp>

#include <random>

#include "coronapd/solvers.hpp"
#include "support/random_graphs.hpp"

using namespace coronapd;

TEST_CASE("oracle metric dimension on families") {
    CHECK(metric_dimension_oracle(build_family("path:5")).value == 1);
    CHECK(metric_dimension_oracle(build_family("cycle:4")).value == 2);
    CHECK(metric_dimension_oracle(build_family("complete:4")).value == 3);
    CHECK(metric_dimension_oracle(build_family("star:5")).value == 4);
}

TEST_CASE("oracle witnesses are lexicographically first") {
    const SolveResult r = metric_dimension_oracle(build_family("cycle:4"));
    CHECK(r.used_oracle);
    CHECK(r.set_witness().members() == std::vector<Vertex>{0, 1});
}

TEST_CASE("oracle partition dimension on families") {
    CHECK(partition_dimension_oracle(build_family("path:4")).value == 2);
    CHECK(partition_dimension_oracle(build_family("complete:4")).value == 4);
    CHECK(partition_dimension_oracle(build_family("star:3")).value == 3);
    CHECK(partition_dimension_oracle(build_family("cycle:5")).value == 3);
}

TEST_CASE("optimized solvers on families and coronas") {
    CHECK(metric_dimension(build_family("path:8")).value == 1);
    CHECK(metric_dimension(build_family("star:5")).value == 4);
    CHECK(metric_dimension(build_graph("corona(path:3,complete:3)")).value == 6);
    CHECK(partition_dimension(build_family("cycle:5")).value == 3);
    CHECK(partition_dimension(build_family("star:6")).value == 6);
    CHECK(partition_dimension(build_graph("corona(path:4,empty:2)")).value == 3);
}

TEST_CASE("solvers reject out-of-scope inputs") {
    CHECK_THROWS_AS(metric_dimension(build_family("empty:3")), std::invalid_argument);
    CHECK_THROWS_AS(metric_dimension_oracle(build_family("complete:1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(partition_dimension(build_family("empty:2")), std::invalid_argument);
    CHECK_THROWS_AS(partition_dimension_oracle(build_family("path:1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(pd_lower_bound(build_family("empty:2")), std::invalid_argument);
}

TEST_CASE("lower bounds") {
    CHECK(dim_lower_bound(build_family("star:4")) == 3);
    CHECK(dim_lower_bound(build_family("path:6")) == 1);
    CHECK(dim_lower_bound(build_family("complete:4")) == 3);
    CHECK(pd_lower_bound(build_family("star:4")) == 4);
    CHECK(pd_lower_bound(build_family("path:9")) == 2);
    CHECK(pd_lower_bound(build_family("complete:5")) == 5);
}

TEST_CASE("node budget is an explicit error, never a wrong answer") {
    SolveOptions tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(partition_dimension(build_graph("corona(path:3,complete:3)"), tiny),
                    BudgetExceeded);
    CHECK_THROWS_AS(metric_dimension(build_graph("corona(path:3,complete:3)"), tiny),
                    BudgetExceeded);
}

TEST_CASE("exists-queries expose SAT and refutation directly") {
    const Graph g = build_graph("corona(path:2,star:4)");
    CHECK_FALSE(find_resolving_partition_with_blocks(g, 3).has_value());
    const auto found = find_resolving_partition_with_blocks(g, 4);
    REQUIRE(found.has_value());
    CHECK(is_resolving_partition(all_pairs_distances(g), *found).resolving);

    CHECK_FALSE(find_resolving_set_of_size(build_family("cycle:4"), 1).has_value());
    CHECK(find_resolving_set_of_size(build_family("cycle:4"), 2).has_value());
}

TEST_CASE("oracle and optimized solvers agree on a mixed corpus") {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 8; ++n) corpus.push_back(build_family("path:" + std::to_string(n)));
    for (int n = 3; n <= 8; ++n) corpus.push_back(build_family("cycle:" + std::to_string(n)));
    for (int n = 2; n <= 7; ++n)
        corpus.push_back(build_family("complete:" + std::to_string(n)));
    for (int n = 1; n <= 6; ++n) corpus.push_back(build_family("star:" + std::to_string(n)));
    for (Graph& g : testsupport::random_corpus(4, 8, 2, 555)) corpus.push_back(std::move(g));

    for (const Graph& g : corpus) {
        const DistanceMatrix dm = all_pairs_distances(g);
        const SolveResult od = metric_dimension_oracle(g);
        const SolveResult xd = metric_dimension(g);
        const SolveResult op = partition_dimension_oracle(g);
        const SolveResult xp = partition_dimension(g);
        CHECK(od.value == xd.value);
        CHECK(op.value == xp.value);
        CHECK(is_resolving_set(dm, xd.set_witness()).resolving);
        CHECK(is_resolving_partition(dm, xp.partition_witness()).resolving);
        CHECK(xp.partition_witness().size() == xp.value);
        // lower bounds are sound, and pd <= dim + 1 throughout
        CHECK(dim_lower_bound(g) <= xd.value);
        CHECK(pd_lower_bound(g) <= xp.value);
        CHECK(xp.value <= xd.value + 1);
    }
}

TEST_CASE("solver results are independent of the worker count") {
    for (const char* spec :
         {"corona(path:3,complete:3)", "corona(path:2,star:4)", "cycle:6", "star:5"}) {
        const Graph g = build_graph(spec);
        SolveOptions one, four;
        one.threads = 1;
        four.threads = 4;
        const SolveResult p1 = partition_dimension(g, one);
        const SolveResult p4 = partition_dimension(g, four);
        CHECK(p1.value == p4.value);
        CHECK(p1.partition_witness() == p4.partition_witness());
        CHECK(p1.nodes_explored == p4.nodes_explored);
        const SolveResult d1 = metric_dimension(g, one);
        const SolveResult d4 = metric_dimension(g, four);
        CHECK(d1.value == d4.value);
        CHECK(d1.set_witness() == d4.set_witness());
        CHECK(d1.nodes_explored == d4.nodes_explored);
    }
}

TEST_CASE("budget overruns are deterministic across worker counts") {
    const Graph g = build_graph("corona(path:6,complete:3)");
    SolveOptions one, four;
    one.threads = 1;
    one.node_budget = 1'000;
    four.threads = 4;
    four.node_budget = 1'000;
    std::uint64_t nodes1 = 0, nodes4 = 0;
    try {
        partition_dimension(g, one);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        nodes1 = e.nodes;
    }
    try {
        partition_dimension(g, four);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        nodes4 = e.nodes;
    }
    CHECK(nodes1 == nodes4);
}
