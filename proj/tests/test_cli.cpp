#include <catch2/catch.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coronapd/cli.hpp"

using namespace coronapd;

namespace {
struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli pd and dim") {
    const CliRun pd = run_cli({"pd", "star:5"});
    CHECK(pd.code == 0);
    CHECK(pd.out.find("pd = 5") != std::string::npos);
    CHECK(pd.out.find("partition = ") != std::string::npos);

    const CliRun dim = run_cli({"dim", "path:8"});
    CHECK(dim.code == 0);
    CHECK(dim.out.find("dim = 1") != std::string::npos);

    const CliRun oracle = run_cli({"pd", "cycle:5", "--oracle"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out.find("pd = 3") != std::string::npos);

    const CliRun spec = run_cli({"pd", "corona(path:4,empty:2)"});
    CHECK(spec.code == 0);
    CHECK(spec.out.find("pd = 3") != std::string::npos);
}

TEST_CASE("cli witness lines round trip through the parsers") {
    const CliRun pd = run_cli({"pd", "corona(path:3,complete:2)"});
    REQUIRE(pd.code == 0);
    std::istringstream lines(pd.out);
    std::string line, partition_text;
    while (std::getline(lines, line))
        if (line.rfind("partition = ", 0) == 0) partition_text = line.substr(12);
    REQUIRE_FALSE(partition_text.empty());
    const Graph g = build_graph("corona(path:3,complete:2)");
    const Partition p = parse_partition(partition_text, g.order());
    CHECK(is_resolving_partition(all_pairs_distances(g), p).resolving);
    CHECK(format_partition(p) == partition_text);
}

TEST_CASE("cli verify commands") {
    const CliRun yes = run_cli({"verify-partition", "path:3", "--partition", "0|1,2"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "resolving\n");

    const CliRun no = run_cli({"verify-set", "cycle:4", "--set", "0"});
    CHECK(no.code == 0);
    CHECK(no.out == "not resolving: conflict (1,3)\n");

    const CliRun bad = run_cli({"verify-partition", "path:3", "--partition", "0|1"});
    CHECK(bad.code == cli::kUsage);
}

TEST_CASE("cli corona emits a parseable edge list with labeling comments") {
    const CliRun r = run_cli({"corona", "path:2", "complete:2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# centers: 0 1") != std::string::npos);
    CHECK(r.out.find("# copy 0: 2 3") != std::string::npos);
    std::istringstream in(r.out);
    const Graph g = read_edge_list(in);
    CHECK(g == build_graph("corona(path:2,complete:2)"));
}

TEST_CASE("cli construct") {
    const CliRun star = run_cli({"construct", "star", "--g", "path:2", "--h", "star:4"});
    CHECK(star.code == 0);
    CHECK(star.out.find("# construct star n1=2 n=4") != std::string::npos);
    CHECK(star.out.find("resolving\n") != std::string::npos);

    const CliRun pe = run_cli({"construct", "path-empty", "--n1", "4", "--n2", "2"});
    CHECK(pe.code == 0);
    CHECK(pe.out.find("# blocks=3") != std::string::npos);

    const CliRun sum = run_cli({"construct", "sum", "--g", "path:3", "--h", "cycle:5"});
    CHECK(sum.code == 0);
    CHECK(sum.out.find("# blocks=5") != std::string::npos);

    const CliRun thm2 = run_cli({"construct", "thm2", "--g", "path:3", "--h", "complete:3"});
    CHECK(thm2.code == 0);
    CHECK(thm2.out.find("resolving\n") != std::string::npos);

    const CliRun guard = run_cli({"construct", "star", "--g", "path:2", "--h", "star:3"});
    CHECK(guard.code == cli::kUsage);

    const CliRun reject = run_cli({"construct", "path-empty", "--n1", "2", "--n2", "3"});
    CHECK(reject.code == cli::kUsage);
}

TEST_CASE("cli check") {
    const CliRun r = run_cli({"check", "C15", "--g", "path:6", "--h", "complete:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"claim_id\":\"C15\"") != std::string::npos);
    CHECK(r.out.find("\"lhs\":4,\"rhs\":4,\"pass\":true") != std::string::npos);

    // the known boundary counterexample surfaces as exit code 1
    const CliRun fail = run_cli({"check", "C16", "--g", "path:3", "--h", "empty:3"});
    CHECK(fail.code == cli::kClaimFailure);
    CHECK(fail.out.find("\"pass\":false") != std::string::npos);

    const CliRun skip = run_cli({"check", "C15", "--g", "path:2", "--h", "complete:2"});
    CHECK(skip.code == 0);
    CHECK(skip.out.find("\"guard\":false") != std::string::npos);

    const CliRun all = run_cli({"check", "all", "--g", "path:2", "--h", "complete:2"});
    CHECK(all.code == 0);
    std::istringstream lines(all.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 18);
}

TEST_CASE("cli check honors the budget and reports inconclusive") {
    const CliRun r = run_cli({"check", "C1", "--g", "path:3", "--h", "complete:3",
                              "--budget", "2"});
    CHECK(r.code == cli::kInconclusive);
    CHECK(r.out.find("\"pass\":null") != std::string::npos);
}

TEST_CASE("cli sweep output is byte-identical across thread counts") {
    std::ostringstream grid_file;
    const std::vector<std::string> base = {"sweep", "--claims", "C1,C11,C15,C18",
                                           "--grid", "default"};
    std::vector<std::string> one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const CliRun a = run_cli(one);
    const CliRun b = run_cli(four);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# sweep summary:") != std::string::npos);
}

TEST_CASE("cli accepts edge-list files wherever specs go") {
    const auto path = std::filesystem::temp_directory_path() / "coronapd_cli_test.graph";
    {
        std::ofstream out(path);
        out << "# C4 as a file\n4\n0 1\n1 2\n2 3\n0 3\n";
    }
    const CliRun dim = run_cli({"dim", path.string()});
    CHECK(dim.code == 0);
    CHECK(dim.out.find("dim = 2") != std::string::npos);
    const CliRun ver = run_cli({"verify-set", path.string(), "--set", "0,1"});
    CHECK(ver.out == "resolving\n");
    std::filesystem::remove(path);
}

TEST_CASE("cli construct output round trips and env budget applies") {
    const CliRun star = run_cli({"construct", "star", "--g", "path:2", "--h", "star:4"});
    REQUIRE(star.code == 0);
    std::istringstream lines(star.out);
    std::string line, partition_text;
    while (std::getline(lines, line))
        if (!line.empty() && line[0] != '#' && line != "resolving") partition_text = line;
    const Graph g = build_graph("corona(path:2,star:4)");
    CHECK(is_resolving_partition(all_pairs_distances(g),
                                 parse_partition(partition_text, g.order()))
              .resolving);

    setenv("CORONAPD_BUDGET", "3", 1);
    const CliRun starved = run_cli({"pd", "corona(path:3,complete:3)"});
    unsetenv("CORONAPD_BUDGET");
    CHECK(starved.code == cli::kInconclusive);

    setenv("CORONAPD_BUDGET", "3", 1);
    const CliRun overridden =
        run_cli({"pd", "corona(path:3,complete:3)", "--budget", "100000000"});
    unsetenv("CORONAPD_BUDGET");
    CHECK(overridden.code == 0);
}

TEST_CASE("cli sweep writes a report file") {
    const auto path = std::filesystem::temp_directory_path() / "coronapd_sweep.jsonl";
    std::ofstream grid_file(std::filesystem::temp_directory_path() / "coronapd_grid.txt");
    grid_file << "# two instances\npath:6 complete:2\npath:4 empty:2\n";
    grid_file.close();
    const CliRun r = run_cli({"sweep", "--grid",
                              (std::filesystem::temp_directory_path() / "coronapd_grid.txt").string(),
                              "--claims", "C15,C16", "--out", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::string line;
    int records = 0, summaries = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# sweep summary:", 0) == 0)
            ++summaries;
        else if (!line.empty())
            ++records;
    }
    CHECK(records == 4);
    CHECK(summaries == 1);
    std::filesystem::remove(path);
    std::filesystem::remove(std::filesystem::temp_directory_path() / "coronapd_grid.txt");
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
    CHECK(run_cli({"dim"}).code == cli::kUsage);
    CHECK(run_cli({"dim", "path:0"}).code == cli::kUsage);
    CHECK(run_cli({"dim", "no-such-file"}).code == cli::kUsage);
    CHECK(run_cli({"pd", "path:5", "--bogus"}).code == cli::kUsage);
    CHECK(run_cli({"pd", "path:5", "--budget", "zero"}).code == cli::kUsage);
    CHECK(run_cli({"check", "C99", "--g", "path:2", "--h", "path:2"}).code == cli::kUsage);
    CHECK(run_cli({"pd", "empty:4"}).code == cli::kUsage);  // disconnected
    CHECK(run_cli({}).code == cli::kUsage);
    CHECK(run_cli({"help"}).code == 0);
}

TEST_CASE("cli solver budget exhaustion exits with 3") {
    const CliRun r = run_cli({"pd", "corona(path:3,complete:3)", "--budget", "5"});
    CHECK(r.code == cli::kInconclusive);
    CHECK(r.err.find("inconclusive") != std::string::npos);
}
