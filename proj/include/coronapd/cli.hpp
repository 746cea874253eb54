#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coronapd/claims.hpp"
#include "coronapd/constructions.hpp"
#include "coronapd/graph_io.hpp"
#include "coronapd/solvers.hpp"

namespace coronapd::cli {

// Exit codes: 0 computed / all pass, 1 guarded claim failure, 2 usage or
// input error, 3 inconclusive result present (solver budget exhausted).
enum ExitCode : int { kOk = 0, kClaimFailure = 1, kUsage = 2, kInconclusive = 3 };

namespace detail {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> flags;

    bool flag(const std::string& name) const { return flags.count(name) > 0; }
    std::string value_or(const std::string& name, const std::string& fallback) const {
        auto it = values.find(name);
        return it == values.end() ? fallback : it->second;
    }
};

inline Options parse_options(const std::vector<std::string>& args,
                             const std::set<std::string>& value_keys,
                             const std::set<std::string>& flag_keys) {
    Options opts;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& tok = args[i];
        if (tok.rfind("--", 0) != 0) {
            opts.positional.push_back(tok);
            continue;
        }
        const std::string name = tok.substr(2);
        if (flag_keys.count(name)) {
            opts.flags.insert(name);
        } else if (value_keys.count(name)) {
            if (i + 1 >= args.size())
                throw UsageError("option --" + name + " needs a value");
            opts.values[name] = args[++i];
        } else {
            throw UsageError("unknown option --" + name);
        }
    }
    return opts;
}

inline std::uint64_t parse_budget(const std::string& text) {
    std::istringstream in(text);
    std::uint64_t value = 0;
    if (!(in >> value) || value == 0 || !in.eof())
        throw UsageError("bad budget value: " + text);
    return value;
}

inline SolveOptions solve_options(const Options& opts) {
    SolveOptions solve;
    if (const char* env = std::getenv("CORONAPD_BUDGET"))
        solve.node_budget = parse_budget(env);
    auto it = opts.values.find("budget");
    if (it != opts.values.end()) solve.node_budget = parse_budget(it->second);
    it = opts.values.find("threads");
    if (it != opts.values.end()) {
        std::istringstream in(it->second);
        int t = 0;
        if (!(in >> t) || t < 1 || t > 256 || !in.eof())
            throw UsageError("bad thread count: " + it->second);
        solve.threads = t;
    }
    return solve;
}

struct LoadedGraph {
    Graph graph;
    std::string text;
};

// A family/corona spec, or a path to an edge-list file.
inline LoadedGraph load_graph_arg(const std::string& arg) {
    std::string spec_error;
    try {
        const GraphSpec spec = parse_graph_spec(arg);
        return {build_graph(spec), to_string(spec)};
    } catch (const std::invalid_argument& e) {
        spec_error = e.what();
    }
    if (std::filesystem::exists(arg)) return {read_edge_list_file(arg), arg};
    throw UsageError("cannot interpret '" + arg + "' (" + spec_error +
                     "; and no such file exists)");
}

inline Graph load_factor_arg(const std::string& arg, const char* which) {
    const LoadedGraph loaded = load_graph_arg(arg);
    if (arg.find("corona(") != std::string::npos)
        throw UsageError(std::string(which) + " must not itself be a corona spec");
    return loaded.graph;
}

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

inline int claim_exit_code(const std::vector<ClaimResult>& rows) {
    const SweepSummary s = summarize(rows);
    if (s.failed > 0) return kClaimFailure;
    if (s.inconclusive > 0) return kInconclusive;
    return kOk;
}

}  // namespace detail

inline const char* usage_text() {
    return
        "usage: coronapd <command> [options]\n"
        "\n"
        "commands:\n"
        "  dim <spec|file> [--oracle] [--budget N] [--threads N]\n"
        "      metric dimension with a minimum resolving set\n"
        "  pd <spec|file> [--oracle] [--budget N] [--threads N]\n"
        "      partition dimension with a minimum resolving partition\n"
        "  corona <specG> <specH> [--emit edgelist]\n"
        "      corona product edge list with labeling header comments\n"
        "  verify-set <spec|file> --set \"v1,v2,...\"\n"
        "  verify-partition <spec|file> --partition \"a,b|c|d\"\n"
        "  construct thm2 --g <spec> --h <spec> [--set S] [--g-partition P]\n"
        "  construct sum --g <spec> --h <spec> [--g-partition P] [--h-partition P]\n"
        "  construct star --g <spec> --h <spec>\n"
        "  construct path-empty --n1 N --n2 M\n"
        "  check <claim-id|all> --g <spec> --h <spec> [--budget N] [--threads N] [--timing]\n"
        "  sweep [--grid default|file] [--claims all|list] [--out file]\n"
        "        [--budget N] [--threads N] [--timing]\n"
        "\n"
        "specs: path:n cycle:n complete:n star:n empty:n corona(SPEC,SPEC)\n"
        "       or a '#'-commented edge-list file (first line n, then 'u v' lines)\n"
        "env:   CORONAPD_BUDGET overrides the default node budget (10^9)\n";
}

namespace detail {

inline int cmd_dim_or_pd(bool metric, const std::vector<std::string>& args, std::ostream& out,
                         std::ostream& err) {
    const Options opts = parse_options(args, {"budget", "threads"}, {"oracle"});
    if (opts.positional.size() != 1)
        throw UsageError(std::string(metric ? "dim" : "pd") + " expects one graph argument");
    const LoadedGraph loaded = load_graph_arg(opts.positional[0]);
    const SolveOptions solve = solve_options(opts);
    try {
        SolveResult result;
        if (metric)
            result = opts.flag("oracle") ? metric_dimension_oracle(loaded.graph)
                                         : metric_dimension(loaded.graph, solve);
        else
            result = opts.flag("oracle") ? partition_dimension_oracle(loaded.graph)
                                         : partition_dimension(loaded.graph, solve);
        if (metric) {
            out << "dim = " << result.value << "\n";
            out << "set = " << format_vertex_set(result.set_witness().canonical()) << "\n";
        } else {
            out << "pd = " << result.value << "\n";
            out << "partition = " << format_partition(result.partition_witness()) << "\n";
        }
        return kOk;
    } catch (const BudgetExceeded& e) {
        err << "inconclusive: node budget exceeded after " << e.nodes << " nodes\n";
        return kInconclusive;
    }
}

inline int cmd_corona(const std::vector<std::string>& args, std::ostream& out, std::ostream&) {
    const Options opts = parse_options(args, {"emit"}, {});
    if (opts.positional.size() != 2) throw UsageError("corona expects two graph arguments");
    const std::string emit = opts.value_or("emit", "edgelist");
    if (emit != "edgelist") throw UsageError("unknown emit format: " + emit);
    const LoadedGraph g = load_graph_arg(opts.positional[0]);
    const LoadedGraph h = load_graph_arg(opts.positional[1]);
    const CoronaGraph cg = corona(g.graph, h.graph);
    out << "# corona(" << g.text << "," << h.text << ") order " << cg.order() << " = "
        << cg.n1() << "*(1+" << cg.n2() << ")\n";
    out << "# centers:";
    for (int i = 0; i < cg.n1(); ++i) out << " " << cg.center(i);
    out << "\n";
    for (int i = 0; i < cg.n1(); ++i) {
        out << "# copy " << i << ":";
        for (Vertex v : cg.copy(i)) out << " " << v;
        out << "\n";
    }
    write_edge_list(out, cg.graph());
    return kOk;
}

inline int cmd_verify_set(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream&) {
    const Options opts = parse_options(args, {"set"}, {});
    if (opts.positional.size() != 1 || !opts.values.count("set"))
        throw UsageError("verify-set expects a graph argument and --set");
    const LoadedGraph loaded = load_graph_arg(opts.positional[0]);
    const VertexSet s = parse_vertex_set(opts.values.at("set"), loaded.graph.order());
    const CheckResult check = is_resolving_set(all_pairs_distances(loaded.graph), s);
    if (check.resolving)
        out << "resolving\n";
    else
        out << "not resolving: conflict (" << check.conflict->first << ","
            << check.conflict->second << ")\n";
    return kOk;
}

inline int cmd_verify_partition(const std::vector<std::string>& args, std::ostream& out,
                                std::ostream&) {
    const Options opts = parse_options(args, {"partition"}, {});
    if (opts.positional.size() != 1 || !opts.values.count("partition"))
        throw UsageError("verify-partition expects a graph argument and --partition");
    const LoadedGraph loaded = load_graph_arg(opts.positional[0]);
    const Partition p = parse_partition(opts.values.at("partition"), loaded.graph.order());
    const CheckResult check = is_resolving_partition(all_pairs_distances(loaded.graph), p);
    if (check.resolving)
        out << "resolving\n";
    else
        out << "not resolving: conflict (" << check.conflict->first << ","
            << check.conflict->second << ")\n";
    return kOk;
}

inline int cmd_construct(const std::vector<std::string>& args, std::ostream& out,
                         std::ostream& err) {
    const Options opts = parse_options(
        args, {"g", "h", "set", "g-partition", "h-partition", "n1", "n2", "budget", "threads"},
        {});
    if (opts.positional.size() != 1)
        throw UsageError("construct expects one of: thm2, sum, star, path-empty");
    const std::string kind = opts.positional[0];
    const SolveOptions solve = solve_options(opts);

    auto need = [&](const char* key) {
        if (!opts.values.count(key))
            throw UsageError("construct " + kind + " needs --" + key);
        return opts.values.at(key);
    };
    auto emit = [&](const ConstructionOutput& built) {
        out << "# construct " << built.provenance << "\n";
        out << "# blocks=" << built.size << "\n";
        out << format_partition(built.partition) << "\n";
        out << "resolving\n";
        return kOk;
    };

    try {
        if (kind == "path-empty") {
            std::istringstream n1in(need("n1")), n2in(need("n2"));
            int n1 = 0, n2 = 0;
            if (!(n1in >> n1) || !(n2in >> n2))
                throw UsageError("construct path-empty needs integer --n1 and --n2");
            return emit(construct_path_empty_partition(n1, n2));
        }
        const Graph g = load_factor_arg(need("g"), "--g");
        const Graph h = load_factor_arg(need("h"), "--h");
        const CoronaGraph cg = corona(g, h);
        if (kind == "star") return emit(construct_star_partition(cg));
        if (kind == "thm2") {
            const VertexSet s = opts.values.count("set")
                                    ? parse_vertex_set(opts.values.at("set"), cg.order())
                                    : metric_dimension(cg.graph(), solve).set_witness();
            const Partition pg = opts.values.count("g-partition")
                                     ? parse_partition(opts.values.at("g-partition"), g.order())
                                     : partition_dimension(g, solve).partition_witness();
            return emit(construct_from_resolving_set(cg, s, pg));
        }
        if (kind == "sum") {
            const Partition pg = opts.values.count("g-partition")
                                     ? parse_partition(opts.values.at("g-partition"), g.order())
                                     : partition_dimension(g, solve).partition_witness();
            const Partition ph = opts.values.count("h-partition")
                                     ? parse_partition(opts.values.at("h-partition"), h.order())
                                     : partition_dimension(h, solve).partition_witness();
            return emit(construct_sum_partition(cg, pg, ph));
        }
        throw UsageError("unknown construction: " + kind);
    } catch (const BudgetExceeded& e) {
        err << "inconclusive: node budget exceeded after " << e.nodes << " nodes\n";
        return kInconclusive;
    }
}

inline std::vector<std::string> resolve_claim_ids(const std::string& text) {
    if (text == "all") return all_claim_ids();
    std::vector<std::string> ids = split_csv(text);
    if (ids.empty()) throw UsageError("no claim ids given");
    for (const auto& id : ids) find_claim(id);
    return ids;
}

inline int cmd_check(const std::vector<std::string>& args, std::ostream& out, std::ostream&) {
    const Options opts =
        parse_options(args, {"g", "h", "budget", "threads"}, {"timing"});
    if (opts.positional.size() != 1)
        throw UsageError("check expects a claim id (or 'all') plus --g and --h");
    const std::vector<std::string> ids = resolve_claim_ids(opts.positional[0]);
    if (!opts.values.count("g") || !opts.values.count("h"))
        throw UsageError("check needs --g and --h");
    const Graph g = load_factor_arg(opts.values.at("g"), "--g");
    const Graph h = load_factor_arg(opts.values.at("h"), "--h");
    ClaimOptions claim_opts;
    claim_opts.solve = solve_options(opts);
    std::vector<ClaimResult> rows;
    for (const auto& id : ids)
        rows.push_back(evaluate_claim(id, g, h, claim_opts, opts.value_or("g", ""),
                                      opts.value_or("h", "")));
    for (const auto& row : rows) out << to_record(row, opts.flag("timing")) << "\n";
    return claim_exit_code(rows);
}

inline std::vector<std::pair<std::string, std::string>> load_grid(const std::string& arg) {
    if (arg == "default") return default_grid();
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open grid file: " + arg);
    std::vector<std::pair<std::string, std::string>> grid;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string gtext, htext, rest;
        if (!(fields >> gtext >> htext) || (fields >> rest))
            throw UsageError("grid file line " + std::to_string(lineno) +
                             ": expected 'gspec hspec'");
        parse_family_spec(gtext);
        parse_family_spec(htext);
        grid.emplace_back(gtext, htext);
    }
    return grid;
}

inline int cmd_sweep(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const Options opts = parse_options(
        args, {"grid", "claims", "out", "budget", "threads"}, {"timing"});
    if (!opts.positional.empty()) throw UsageError("sweep takes only options");
    const auto grid = load_grid(opts.value_or("grid", "default"));
    const auto ids = resolve_claim_ids(opts.value_or("claims", "all"));

    SweepOptions sweep_opts;
    SolveOptions solve = solve_options(opts);
    sweep_opts.threads = solve.threads;
    solve.threads = 1;  // instances are the unit of parallelism here
    sweep_opts.claim.solve = solve;

    const std::vector<ClaimResult> rows = run_sweep(grid, ids, sweep_opts);
    const SweepSummary summary = summarize(rows);

    std::ofstream file;
    std::ostream* sink = &out;
    if (opts.values.count("out")) {
        file.open(opts.values.at("out"));
        if (!file) throw UsageError("cannot open output file: " + opts.values.at("out"));
        sink = &file;
    }
    for (const auto& row : rows) *sink << to_record(row, opts.flag("timing")) << "\n";
    *sink << "# sweep summary: pass=" << summary.passed << " fail=" << summary.failed
          << " skipped=" << summary.skipped << " inconclusive=" << summary.inconclusive
          << " instances=" << grid.size() << " claims=" << ids.size() << "\n";
    if (summary.failed > 0) {
        err << "guarded failures present\n";
        return kClaimFailure;
    }
    if (summary.inconclusive > 0) {
        err << "inconclusive rows present\n";
        return kInconclusive;
    }
    return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        out << usage_text();
        return args.empty() ? kUsage : kOk;
    }
    const std::string verb = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (verb == "dim") return detail::cmd_dim_or_pd(true, rest, out, err);
        if (verb == "pd") return detail::cmd_dim_or_pd(false, rest, out, err);
        if (verb == "corona") return detail::cmd_corona(rest, out, err);
        if (verb == "verify-set") return detail::cmd_verify_set(rest, out, err);
        if (verb == "verify-partition") return detail::cmd_verify_partition(rest, out, err);
        if (verb == "construct") return detail::cmd_construct(rest, out, err);
        if (verb == "check") return detail::cmd_check(rest, out, err);
        if (verb == "sweep") return detail::cmd_sweep(rest, out, err);
        err << "unknown command: " << verb << "\n" << usage_text();
        return kUsage;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConstructionError& e) {
        err << "construction failure: " << e.what() << "\n";
        return kClaimFailure;
    }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace coronapd::cli
