// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//
//   acceptance --n8 tests/data/connected8.g6 [--n9 connected9.g6]

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "graph6_reference.hpp"
#include "reference_census.hpp"
#include "pathcover/census.hpp"
#include "pathcover/constructions.hpp"
#include "pathcover/enumerate.hpp"
#include "pathcover/error.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph6.hpp"
#include "pathcover/oracle.hpp"
#include "pathcover/solver.hpp"
#include "properties.hpp"

using namespace pathcover;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void fail(const std::string& why)
    {
        if (ok) note << why;
        ok = false;
    }
};

using Check = std::function<void(Outcome&)>;

bool run(int id, const std::string& title, double budget_s, const Check& check)
{
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        check(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > budget_s) {
        out.fail("over time budget");
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << "  [" << std::fixed
              << std::setprecision(2) << secs << " s / " << budget_s << " s]";
    const std::string note = out.note.str();
    if (!note.empty()) std::cout << "  " << note;
    std::cout << std::endl;
    return out.ok;
}

void census_matches(int n, const std::vector<testing::TableRow>& table, std::int64_t graphs, Outcome& out)
{
    const auto report = run_census(GraphSource::builtin(n));
    if (report.total_graphs != graphs) out.fail("graph total " + std::to_string(report.total_graphs));
    if (report.records.size() != table.size()) {
        out.fail("sequence total " + std::to_string(report.records.size()));
        return;
    }
    int starred = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& got = report.records[i];
        const PathSequence want(table[i].sequence);
        if (!(got.sequence == want) || got.multiplicity != table[i].multiplicity ||
            got.tree_realisable != table[i].tree)
            out.fail("row mismatch at " + want.str());
        starred += got.tree_realisable ? 1 : 0;
    }
    out.note << report.total_graphs << " graphs, " << report.total_sequences << " sequences, " << starred
             << " tree rows";
}

std::int64_t count_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw pathcover::ParseError("cannot open " + path);
    std::int64_t lines = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    return lines;
}

// Conjecture sweep over one file, with the line count, the loaded count and
// the known class count all required to agree.
void conjecture_on_file(int n, const std::string& path, Outcome& out)
{
    const auto expected = *known_connected_class_count(n);
    const auto lines = count_lines(path);
    if (lines != expected) out.fail("n=" + std::to_string(n) + " file has " + std::to_string(lines) + " lines");
    const auto population = load_population(GraphSource::file(path));
    if (population.n != n || static_cast<std::int64_t>(population.graphs.size()) != expected)
        out.fail("n=" + std::to_string(n) + " loaded " + std::to_string(population.graphs.size()) + " classes");
    const auto found = verify(population, RuleSet{true, false, false});
    if (!found.empty()) out.fail("n=" + std::to_string(n) + " violation " + found.items.front().graph6);
    out.note << "; n=" << n << ": " << found.graphs_checked << " classes, " << found.items.size() << " violations";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance checks"};
    std::string n8_file;
    std::string n9_file;
    app.add_option("--n8", n8_file, "graph6 file of the connected 8-vertex classes")->required();
    app.add_option("--n9", n9_file, "graph6 file of the connected 9-vertex classes (optional, slow)");
    CLI11_PARSE(app, argc, argv);

    bool all = true;

    all &= run(1, "census n=5 reproduces the published table", 5, [](Outcome& out) {
        census_matches(5, testing::kCensus5, 21, out);
    });

    all &= run(2, "census n=6 reproduces the published table", 30, [](Outcome& out) {
        census_matches(6, testing::kCensus6, 112, out);
    });

    all &= run(3, "census n=7 reproduces the published table", 300, [](Outcome& out) {
        census_matches(7, testing::kCensus7, 853, out);
    });

    all &= run(4, "solver agrees with brute force on all connected graphs n<=7", 300, [](Outcome& out) {
        std::int64_t graphs = 0, values = 0;
        for (int n = 1; n <= 7; ++n) {
            const auto check = [&](const Graph& g) {
                const auto s = path_sequence(g);
                for (int k = 1; k <= n; ++k, ++values)
                    if (s.psi(k) != brute_force_psi_k(g, k) || psi_k(g, k) != s.psi(k))
                        out.fail(encode_graph6(g) + " k=" + std::to_string(k));
                ++graphs;
            };
            if (n == 1)
                check(Graph(1));
            else
                for_each_connected(n, check);
        }
        out.note << graphs << " graphs, " << values << " values compared";
    });

    all &= run(5, "closed forms for paths, cycles, complete and complete bipartite graphs", 60, [](Outcome& out) {
        std::int64_t values = 0;
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k, values += 3) {
                if (psi_k(build_path(n), k) != psi_path(n, k)) out.fail("P_" + std::to_string(n));
                if (psi_k(build_complete(n), k) != psi_complete(n, k)) out.fail("K_" + std::to_string(n));
                if (n >= 3 && psi_k(build_cycle(n), k) != psi_cycle(n, k)) out.fail("C_" + std::to_string(n));
            }
        for (int a = 1; a <= 11; ++a)
            for (int b = 1; a + b <= 12; ++b)
                for (int k = 1; k <= a + b; ++k, ++values)
                    if (psi_k(build_complete_bipartite(a, b), k) != psi_complete_bipartite(a, b, k))
                        out.fail("K_" + std::to_string(a) + "," + std::to_string(b) + " k=" + std::to_string(k));
        out.note << values << " values compared";
    });

    all &= run(6, "two-value construction realises (psi_m, psi_k) for m<k<=8, p_k<=3", 300, [](Outcome& out) {
        int built = 0, path_checked = 0;
        for (int k = 2; k <= 8; ++k)
            for (int m = 1; m < k; ++m)
                for (int pk = 1; pk <= 3; ++pk) {
                    const int a = k / m;
                    for (int pm = pk + a - 1; pm <= pk + a + 1; ++pm) {
                        const ConstructionSpec spec{m, k, pk, pm};
                        if (spec.full_order() > kMaxSolverVertices) continue;
                        const auto g = two_value_graph(spec);
                        const auto s = path_sequence(g.graph);
                        const std::string tag = "(m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                                ",pk=" + std::to_string(pk) + ",pm=" + std::to_string(pm) + ")";
                        if (g.status != CheckStatus::checked) out.fail(tag + " unchecked");
                        if (s.psi(k) != pk || s.psi(m) != pm) out.fail(tag + " got " + s.str());
                        if (!is_connected(g.graph)) out.fail(tag + " disconnected");
                        ++built;
                        if (pm == pk + a - 1 && spec.core_order() <= 15) {
                            const auto h = two_value_core(spec);
                            const auto least = min_marked_on_paths(h.graph, h.annotations.at("M"), k);
                            if (!least || *least < a) out.fail(tag + " path misses M");
                            ++path_checked;
                        }
                    }
                }
        out.note << built << " instances confirmed, " << path_checked << " cores path-enumerated";
    });

    all &= run(7, "no counterexample to psi_{n-1}=2 => psi_n=1 for connected n<=8 (n=9 on request)", n9_file.empty() ? 600 : 1800,
               [&](Outcome& out) {
                   std::int64_t builtin = 0;
                   for (int n = 2; n <= 7; ++n) {
                       const auto found = verify_conjecture(GraphSource::builtin(n));
                       if (!found.empty()) out.fail("violation " + found.items.front().graph6);
                       builtin += found.graphs_checked;
                   }
                   out.note << "n<=7: " << builtin << " classes";
                   conjecture_on_file(8, n8_file, out);
                   if (n9_file.empty())
                       out.note << "; n=9 not requested";
                   else
                       conjecture_on_file(9, n9_file, out);
               });

    all &= run(8, "deletion, pair, connectivity and suffix properties", 600, [](Outcome& out) {
        std::vector<testing::PropertyFailure> failures;
        const auto random = testing::check_random_deletions(0xacce97, 10000, 10, failures);
        std::int64_t census = 0;
        for (int n = 1; n <= 7; ++n) {
            const auto check = [&](const Graph& g) {
                const auto s = path_sequence(g);
                testing::check_sequence_properties(g, s, failures);
                testing::check_suffix_completeness(g, s, failures);
                ++census;
            };
            if (n == 1)
                check(Graph(1));
            else
                for_each_connected(n, check);
        }
        if (!failures.empty()) out.fail(failures.front().graph6 + " " + failures.front().what);
        out.note << random << " random graphs, " << census << " census graphs, " << failures.size()
                 << " violations";
    });

    all &= run(9, "graph6 round trip and reference encodings", 120, [&](Outcome& out) {
        std::int64_t trips = 0;
        for (int n = 2; n <= 7; ++n)
            for_each_connected(n, [&](const Graph& g) {
                if (!(decode_graph6(encode_graph6(g)) == g)) out.fail("round trip " + encode_graph6(g));
                ++trips;
            });
        std::ifstream in(n8_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (encode_graph6(decode_graph6(line)) != line) out.fail("round trip " + line);
            ++trips;
        }
        for (const auto& ref : testing::kGraph6Reference) {
            const Graph g = from_edge_list(ref.n, ref.edges);
            if (encode_graph6(g) != ref.graph6 || !(decode_graph6(ref.graph6) == g))
                out.fail(std::string("reference ") + ref.name);
        }
        out.note << trips << " round trips, " << testing::kGraph6Reference.size() << " reference encodings";
    });

    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}
