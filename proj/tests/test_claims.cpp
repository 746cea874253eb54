#include <catch2/catch.hpp>

#include "coronapd/claims.hpp"

using namespace coronapd;

TEST_CASE("registry holds C1..C18") {
    const auto ids = all_claim_ids();
    REQUIRE(ids.size() == 18);
    CHECK(ids.front() == "C1");
    CHECK(ids.back() == "C18");
    CHECK_THROWS_AS(find_claim("C19"), std::invalid_argument);
}

TEST_CASE("C4 equality instance") {
    const ClaimResult r =
        evaluate_claim("C4", build_family("path:3"), build_family("complete:3"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.lhs == 6);
    CHECK(r.rhs == 6);
    CHECK(r.pass == true);
}

TEST_CASE("C16 passes on a strict instance") {
    const ClaimResult r =
        evaluate_claim("C16", build_family("path:4"), build_family("empty:2"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 3);
    CHECK(r.pass == true);
}

// The equal-orders corner of the bound is a genuine counterexample: the
// diagonal partition (block j = j-th center plus the j-th vertex of every
// copy) resolves P_n (.) N_n with only n blocks. The harness must surface
// the failure with its witness rather than hide it.
TEST_CASE("C16 reports the boundary counterexample with a witness") {
    const ClaimResult r =
        evaluate_claim("C16", build_family("path:3"), build_family("empty:3"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 4);
    CHECK(r.pass == false);
    CHECK(r.failed());
    CHECK(r.witness.find("0,3,6,9|1,4,7,10|2,5,8,11") != std::string::npos);
}

TEST_CASE("C3 skips the excluded instances but records data") {
    const ClaimResult r =
        evaluate_claim("C3", build_family("complete:2"), build_family("path:2"));
    CHECK_FALSE(r.guard_satisfied);
    CHECK(!r.pass.has_value());
    CHECK(r.witness.find("excluded instance") != std::string::npos);
}

TEST_CASE("C15 on the remark instance") {
    const ClaimResult r =
        evaluate_claim("C15", build_family("path:6"), build_family("complete:2"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.lhs == 4);
    CHECK(r.rhs == 4);
    CHECK(r.pass == true);
}

TEST_CASE("C17 and C18 on stars") {
    const ClaimResult r17 =
        evaluate_claim("C17", build_family("path:2"), build_family("star:4"));
    REQUIRE(r17.guard_satisfied);
    CHECK(r17.pass == true);
    CHECK(r17.lhs == 4);

    const ClaimResult skip =
        evaluate_claim("C17", build_family("path:2"), build_family("star:3"));
    CHECK_FALSE(skip.guard_satisfied);

    const ClaimResult r18 =
        evaluate_claim("C18", build_family("path:2"), build_family("star:5"));
    REQUIRE(r18.guard_satisfied);
    CHECK(r18.lhs == 5);
    CHECK(r18.pass == true);
}

TEST_CASE("C10 validates induced copy partitions") {
    const ClaimResult r =
        evaluate_claim("C10", build_family("path:3"), build_family("path:3"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 3);
    CHECK(r.pass == true);
}

TEST_CASE("C11 records copy splits") {
    const ClaimResult r =
        evaluate_claim("C11", build_family("path:3"), build_family("complete:3"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.pass == true);
    CHECK(r.witness.find("splits=[2,2,2]") != std::string::npos);
}

TEST_CASE("C12 checks every resolving partition exhaustively") {
    const ClaimResult r =
        evaluate_claim("C12", build_family("path:2"), build_family("complete:2"));
    REQUIRE(r.guard_satisfied);
    CHECK(r.rhs == 3);
    CHECK(r.pass == true);

    // too large for the exhaustive guard
    const ClaimResult skip =
        evaluate_claim("C12", build_family("path:6"), build_family("complete:2"));
    CHECK_FALSE(skip.guard_satisfied);
}

TEST_CASE("C5 reports the second alpha reading when it differs") {
    // H = K2 plus an isolated vertex: alpha_ge2 = 1, total components = 2
    Graph h(3);
    h.add_edge(0, 1);
    const ClaimResult r = evaluate_claim("C5", build_family("path:2"), h);
    REQUIRE(r.guard_satisfied);
    CHECK(r.pass == true);
    CHECK(r.witness.find("alpha-as-all-components") != std::string::npos);
    CHECK(r.witness.find("readings disagree") != std::string::npos);
}

TEST_CASE("C7 guard requires small diameter") {
    const ClaimResult r =
        evaluate_claim("C7", build_family("path:2"), build_family("path:4"));
    CHECK_FALSE(r.guard_satisfied);
}

TEST_CASE("budget exhaustion yields inconclusive, not pass or fail") {
    ClaimOptions opts;
    opts.solve.node_budget = 2;
    const ClaimResult r = evaluate_claim("C1", build_family("path:3"),
                                         build_family("complete:3"), opts);
    REQUIRE(r.guard_satisfied);
    CHECK(r.inconclusive());
    CHECK(!r.pass.has_value());
    CHECK(r.witness.find("inconclusive") != std::string::npos);
}

TEST_CASE("record serialization") {
    ClaimResult r;
    r.claim_id = "C1";
    r.g_spec = "path:2";
    r.h_spec = "empty:1";
    r.guard_satisfied = true;
    r.lhs = 2;
    r.rhs = 3;
    r.pass = true;
    r.witness = "say \"hi\"";
    r.millis = 17;
    CHECK(to_record(r) ==
          "{\"claim_id\":\"C1\",\"g_spec\":\"path:2\",\"h_spec\":\"empty:1\","
          "\"guard\":true,\"lhs\":2,\"rhs\":3,\"pass\":true,"
          "\"witness\":\"say \\\"hi\\\"\",\"millis\":0}");
    CHECK(to_record(r, true).find("\"millis\":17") != std::string::npos);

    ClaimResult skipped;
    skipped.claim_id = "C15";
    CHECK(to_record(skipped).find("\"guard\":false") != std::string::npos);
    CHECK(to_record(skipped).find("\"lhs\":null") != std::string::npos);
    CHECK(to_record(skipped).find("\"pass\":null") != std::string::npos);
}

TEST_CASE("run_sweep orders rows by claim then instance") {
    const std::vector<std::pair<std::string, std::string>> grid = {
        {"path:6", "complete:2"}, {"path:4", "empty:2"}};
    const auto rows = run_sweep(grid, {"C15", "C16"});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].claim_id == "C15");
    CHECK(rows[0].g_spec == "path:6");
    CHECK(rows[1].claim_id == "C15");
    CHECK(rows[1].g_spec == "path:4");
    CHECK(rows[2].claim_id == "C16");
    // guarded C15 row passes with 4 = 4
    CHECK(rows[0].pass == true);
    CHECK(rows[0].lhs == 4);
    // C16 on the strict instance passes
    CHECK(rows[3].pass == true);

    const auto summary = summarize(rows);
    CHECK(summary.passed == 2);
    CHECK(summary.skipped == 2);
}

TEST_CASE("sweep rows are identical across worker counts") {
    const std::vector<std::pair<std::string, std::string>> grid = {
        {"path:2", "complete:2"}, {"path:3", "empty:2"}, {"path:2", "star:4"},
        {"cycle:3", "complete:1"}};
    SweepOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = run_sweep(grid, all_claim_ids(), one);
    const auto b = run_sweep(grid, all_claim_ids(), four);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(to_record(a[i]) == to_record(b[i]));
}

TEST_CASE("default grid respects the corona order cap") {
    const auto grid = default_grid();
    CHECK(grid.size() == 180);
    for (const auto& [gspec, hspec] : grid) {
        const Graph g = build_family(gspec);
        const Graph h = build_family(hspec);
        CHECK(g.order() * (1 + h.order()) <= 24);
    }
}
