// graphrefute: search for and check counter-examples to spectral graph
// conjectures.
//
//   graphrefute refute --conjecture 4 --algorithm nmcs --level 2 --seed 7
//   graphrefute score  --conjecture 1 graph.txt
//   graphrefute verify --conjecture 2 graph.txt
//   graphrefute export graph.txt --dot
//
// Exit status: 0 success (certified counter-example for refute/verify),
// 1 no certified counter-example, 2 usage, parse or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include "graphrefute/edge_list.hpp"
#include "graphrefute/runner.hpp"

namespace {

using namespace graphrefute;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

struct RefuteArgs {
    int conjecture = 0;
    std::string algorithm;
    std::optional<int> level;
    std::optional<int> iterations;
    std::optional<std::size_t> target;
    std::string terminal;
    std::string graph_class;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> max_vertices;
    std::optional<std::uint64_t> seed;
    std::optional<double> timeout;
    std::size_t restarts = 1;
    std::size_t workers = 1;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::size_t> beam_cap;
    std::string output;
    std::string edge_list;
};

RunConfig to_config(const RefuteArgs& a) {
    RunConfig c;
    c.conjecture = a.conjecture;
    c.algorithm = parse_algorithm(a.algorithm);
    c.level = a.level;
    c.iterations = a.iterations;
    c.overrides.target = a.target;
    if (!a.terminal.empty()) {
        c.overrides.terminal_kind = a.terminal == "edges" ? TerminalKind::edge_count : TerminalKind::vertex_count;
    }
    if (!a.graph_class.empty()) {
        c.overrides.graph_class = a.graph_class == "general" ? GraphClass::connected_general : GraphClass::tree;
    }
    c.overrides.max_degree = a.max_degree;
    c.overrides.max_vertices = a.max_vertices;
    c.seed = a.seed ? *a.seed : std::random_device{}() * 0x100000001ULL + std::random_device{}();
    c.timeout_s = a.timeout;
    c.restarts = a.restarts;
    c.workers = a.workers;
    c.node_budget = a.node_budget;
    c.beam_cap = a.beam_cap;
    return c;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

int cmd_refute(const RefuteArgs& args) {
    const RunConfig config = to_config(args);
    config.validate();
    const RefutationResult result = run_refutation(config);
    const std::string json = run_report_json(result.report).dump(2) + "\n";
    if (args.output.empty()) {
        std::cout << json;
    } else {
        write_file(args.output, json);
    }
    const std::string edges_path = !args.edge_list.empty() ? args.edge_list
                                   : !args.output.empty()  ? args.output + ".edges"
                                                           : std::string();
    if (!edges_path.empty() && result.report.graph.vertex_count() > 0) {
        write_file(edges_path, to_edge_list(result.report.graph));
    }
    return result.report.certified ? kExitFound : kExitNotFound;
}

int cmd_score(int conjecture, const std::string& path) {
    const Graph g = read_edge_list_file(path);
    const ScoreBreakdown b = explain_score(conjecture, g);
    std::cout << std::setprecision(17);
    std::cout << "conjecture " << conjecture << "\n";
    for (const auto& i : b.ingredients) {
        std::cout << i.name << " = " << i.value;
        if (!i.exact.empty()) {
            std::cout << " (" << i.exact << ")";
        }
        std::cout << "\n";
    }
    std::cout << "score = " << b.score << "\n";
    return kExitFound;
}

int cmd_verify(int conjecture, const std::string& path) {
    const Graph g = read_edge_list_file(path);
    const Certificate c = verify(conjecture, g);
    std::cout << certificate_json(c).dump(2) << "\n";
    return c.certified ? kExitFound : kExitNotFound;
}

int cmd_export(const std::string& path, bool dot) {
    const Graph g = read_edge_list_file(path);
    std::cout << (dot ? to_dot(g) : to_edge_list(g));
    return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo search for counter-examples to spectral graph conjectures"};
    app.require_subcommand(1);

    RefuteArgs ra;
    auto* refute = app.add_subcommand("refute", "search for a certified counter-example");
    refute->add_option("--conjecture", ra.conjecture, "conjecture id (1-4)")->required();
    refute->add_option("--algorithm", ra.algorithm, "playout, nmcs, nrpa or gbfs")->required();
    refute->add_option("--level", ra.level, "nesting level (nmcs, nrpa)");
    refute->add_option("--iterations", ra.iterations, "NRPA iterations per level (default 100)");
    refute->add_option("--target", ra.target, "terminal vertex or edge count");
    refute->add_option("--terminal", ra.terminal, "vertices or edges")->check(CLI::IsMember({"vertices", "edges"}));
    refute->add_option("--graph-class", ra.graph_class, "tree or general")->check(CLI::IsMember({"tree", "general"}));
    refute->add_option("--max-degree", ra.max_degree, "degree cap");
    refute->add_option("--max-vertices", ra.max_vertices, "vertex cap");
    refute->add_option("--seed", ra.seed, "64-bit seed (random when omitted; always reported)");
    refute->add_option("--timeout", ra.timeout, "wall-clock seconds per attempt");
    refute->add_option("--restarts", ra.restarts, "maximum number of attempts");
    refute->add_option("--workers", ra.workers, "concurrent attempts");
    refute->add_option("--node-budget", ra.node_budget, "maximum expansions (gbfs)");
    refute->add_option("--beam-cap", ra.beam_cap, "maximum open-list size (gbfs)");
    refute->add_option("--output", ra.output, "JSON report path (default stdout)");
    refute->add_option("--edge-list", ra.edge_list, "edge-list path (default <output>.edges)");

    int score_conj = 0;
    std::string score_path;
    auto* score = app.add_subcommand("score", "print a graph's score and its ingredients");
    score->add_option("--conjecture", score_conj, "conjecture id (1-4)")->required();
    score->add_option("graph", score_path, "edge-list file")->required();

    int verify_conj = 0;
    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "certify a counter-example, printing JSON");
    verify_cmd->add_option("--conjecture", verify_conj, "conjecture id (1-4)")->required();
    verify_cmd->add_option("graph", verify_path, "edge-list file")->required();

    std::string export_path;
    bool export_dot = false;
    auto* export_cmd = app.add_subcommand("export", "print a graph as canonical edge list or DOT");
    export_cmd->add_option("graph", export_path, "edge-list file")->required();
    export_cmd->add_flag("--dot", export_dot, "emit Graphviz DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*refute) {
            return cmd_refute(ra);
        }
        if (*score) {
            return cmd_score(score_conj, score_path);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_conj, verify_path);
        }
        return cmd_export(export_path, export_dot);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
