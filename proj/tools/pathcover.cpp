// pathcover: path sequences, censuses, bound sweeps and constructions.
//
// Exit codes: 0 success / no violations, 1 violations or failed check,
// 2 usage or parse error, 3 input exceeds a resource cap.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pathcover/census.hpp"
#include "pathcover/constructions.hpp"
#include "pathcover/error.hpp"
#include "pathcover/graph6.hpp"
#include "pathcover/solver.hpp"

using namespace pathcover;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceFlags {
    int n = 0;
    std::string file;
    bool trusted = false;
    int jobs = 0;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("n", n, "vertex count for the built-in enumerator (2..7)");
        cmd->add_option("--file", file, "graph6 file, one graph per line");
        cmd->add_flag("--trusted", trusted, "skip isomorphism dedupe of file input");
        cmd->add_option("--jobs", jobs, "worker threads (default: available parallelism)")->check(CLI::PositiveNumber);
    }

    GraphSource source() const
    {
        if (!file.empty()) return GraphSource::file(file, trusted);
        if (n == 0) throw UsageError("give a vertex count or --file");
        if (n < 2 || n > 7)
            throw UsageError("the built-in enumerator covers n = 2..7; for n = " + std::to_string(n) +
                             " pass a graph6 file with --file");
        return GraphSource::builtin(n);
    }
};

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void print_warnings(const std::vector<std::string>& warnings)
{
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

Graph load_single_graph(const std::string& graph6, const std::string& edges_path)
{
    if (!graph6.empty() == !edges_path.empty()) throw UsageError("give exactly one of GRAPH6 or --edges FILE");
    if (!graph6.empty()) return decode_graph6(graph6);
    if (edges_path == "-") return read_edge_list(std::cin);
    std::ifstream in(edges_path);
    if (!in) throw ParseError("cannot open edge list " + edges_path);
    return read_edge_list(in);
}

std::string render_graph(const Graph& g, bool as_edges)
{
    return as_edges ? write_edge_list(g) : encode_graph6(g) + "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact k-path vertex cover numbers and path-sequence censuses"};
    app.require_subcommand(1);
    int max_n = 0;
    app.add_option("--max-n", max_n, "lower the exact solver's vertex cap (at most 24)")->check(CLI::Range(1, 24));

    // sequence
    auto* seq_cmd = app.add_subcommand("sequence", "print the path sequence of one graph");
    std::string seq_graph6;
    std::string seq_edges;
    seq_cmd->add_option("graph6", seq_graph6, "graph in graph6 format");
    seq_cmd->add_option("--edges", seq_edges, "edge-list file (\"n m\" then m lines \"u v\"; - for stdin)");

    // census
    auto* census_cmd = app.add_subcommand("census", "path-sequence multiplicities over a graph population");
    SourceFlags census_src;
    census_src.attach(census_cmd);
    std::string census_format = "markdown";
    std::string census_output;
    bool census_all = false;
    census_cmd->add_option("--format", census_format, "markdown, csv or json");
    census_cmd->add_option("-o,--output", census_output, "output file (default: stdout)");
    census_cmd->add_flag("--include-disconnected", census_all, "keep disconnected graphs from file input");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "sweep a population for rule violations");
    SourceFlags verify_src;
    verify_src.attach(verify_cmd);
    std::string verify_rules = "conjecture,bounds,suffix";
    bool verify_all = false;
    verify_cmd->add_option("--rules", verify_rules, "comma list of conjecture, bounds, suffix");
    verify_cmd->add_flag("--include-disconnected", verify_all, "keep disconnected graphs from file input");

    // find
    auto* find_cmd = app.add_subcommand("find", "list graphs realising a sequence");
    std::string find_sequence;
    bool find_tree = false;
    std::string find_file;
    bool find_trusted = false;
    find_cmd->add_option("sequence", find_sequence, "e.g. 5,1,1,0,0")->required();
    find_cmd->add_flag("--tree", find_tree, "only trees");
    find_cmd->add_option("--file", find_file, "graph6 file (default: built-in enumeration)");
    find_cmd->add_flag("--trusted", find_trusted, "skip isomorphism dedupe of file input");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "build one of the extremal constructions");
    std::string kind;
    int c_m = 0, c_k = 0, c_pk = 0, c_pm = -1, c_n = 0, c_s = 0, c_v = 0, c_t = 0;
    std::string c_graph;
    bool c_edges = false;
    construct_cmd->add_option("kind", kind, "two-value, core, twins, twin-trees, paths, anchor, pendants")
        ->required()
        ->check(CLI::IsMember({"two-value", "core", "twins", "twin-trees", "paths", "anchor", "pendants"}));
    construct_cmd->add_option("--m", c_m, "smaller path order (two-value, core, paths)");
    construct_cmd->add_option("--k", c_k, "larger path order (two-value, core, anchor)");
    construct_cmd->add_option("--pk", c_pk, "target psi_k (two-value, core)");
    construct_cmd->add_option("--pm", c_pm, "target psi_m (two-value; default p_k + floor(k/m) - 1)");
    construct_cmd->add_option("--n", c_n, "order (twins, twin-trees)");
    construct_cmd->add_option("--s", c_s, "number of copies (paths)");
    construct_cmd->add_option("--graph", c_graph, "base graph in graph6 (anchor, pendants)");
    construct_cmd->add_option("--v", c_v, "attachment vertex (pendants)");
    construct_cmd->add_option("--t", c_t, "pendant count (pendants)");
    construct_cmd->add_flag("--edges", c_edges, "print edge lists instead of graph6");

    // feasible
    auto* feasible_cmd = app.add_subcommand("feasible", "check necessary conditions on a candidate sequence");
    std::string feasible_sequence;
    feasible_cmd->add_option("sequence", feasible_sequence, "e.g. 5,4,3,2,1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (max_n > 0) lower_solver_vertex_cap(max_n);

        if (*seq_cmd) {
            const Graph g = load_single_graph(seq_graph6, seq_edges);
            const auto seq = path_sequence(g);
            std::cout << seq.str() << ", hamilton_path=" << (has_hamilton_path(g) ? "true" : "false") << '\n';
            return 0;
        }

        if (*census_cmd) {
            const auto format = parse_table_format(census_format);
            const auto report = run_census(census_src.source(), {!census_all, census_src.jobs});
            print_warnings(report.warnings);
            write_output(census_output, emit_table(report, format));
            return 0;
        }

        if (*verify_cmd) {
            const auto rules = parse_rules(verify_rules);
            const auto found = verify(verify_src.source(), rules, {!verify_all, verify_src.jobs});
            for (const auto& v : found.items) std::cout << v.graph6 << ' ' << v.rule << ' ' << v.details << '\n';
            std::cout << found.items.size() << " violations (" << found.graphs_checked << " graphs checked)\n";
            return found.empty() ? 0 : kExitViolations;
        }

        if (*find_cmd) {
            const auto seq = parse_sequence(find_sequence);
            const GraphSource source = find_file.empty() ? SourceFlags{seq.order(), {}, false, 0}.source()
                                                         : GraphSource::file(find_file, find_trusted);
            const auto hits = find_realisations(
                seq, find_tree ? RealisationClass::tree : RealisationClass::any, source);
            for (const auto& h : hits) std::cout << h << '\n';
            std::cout << hits.size() << " graphs\n";
            return 0;
        }

        if (*construct_cmd) {
            auto print_labeled = [&](const LabeledConstruction& c) {
                std::cout << render_graph(c.graph, c_edges);
                for (const auto& [name, set] : c.annotations) std::cout << name << " = " << to_string(set) << '\n';
                std::cout << c.summary() << '\n';
            };
            auto print_twins = [&](const TwinPair& p) {
                std::cout << render_graph(p.first, c_edges) << render_graph(p.second, c_edges);
                if (p.sequence)
                    std::cout << "checked: both " << p.sequence->str() << '\n';
                else
                    std::cout << "unchecked: " << p.first.order() << " vertices exceeds solver cap "
                              << solver_vertex_cap() << '\n';
            };
            if (kind == "two-value" || kind == "core") {
                ConstructionSpec spec{c_m, c_k, c_pk, c_pm};
                if (c_m < 1) throw UsageError("--m must be positive");
                if (c_pm < 0) spec.p_m = spec.core_paths();
                print_labeled(kind == "core" ? two_value_core(spec) : two_value_graph(spec));
            } else if (kind == "twins") {
                print_twins(twin_pair(c_n));
            } else if (kind == "twin-trees") {
                print_twins(twin_trees(c_n));
            } else if (kind == "paths") {
                print_labeled(disjoint_paths(c_s, c_m));
            } else if (kind == "anchor") {
                print_labeled(anchor_supergraph(decode_graph6(c_graph), c_k));
            } else if (kind == "pendants") {
                const Graph g = attach_pendants(decode_graph6(c_graph), c_v, c_t);
                std::cout << render_graph(g, c_edges);
                if (g.order() <= solver_vertex_cap()) std::cout << "sequence: " << path_sequence(g).str() << '\n';
            }
            return 0;
        }

        if (*feasible_cmd) {
            const auto verdict = sequence_feasibility(parse_sequence(feasible_sequence));
            std::cout << (verdict.passed ? "pass" : "fail") << '\n';
            for (const auto& r : verdict.reasons) std::cout << "  " << r << '\n';
            return verdict.passed ? 0 : kExitViolations;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const ConstructionError& e) {
        std::cerr << "construction check failed: " << e.what() << '\n';
        return kExitViolations;
    }
    return 0;
}
