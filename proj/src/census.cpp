#include "pathcover/census.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "pathcover/canonical.hpp"
#include "pathcover/enumerate.hpp"
#include "pathcover/error.hpp"
#include "pathcover/graph6.hpp"
#include "pathcover/solver.hpp"

namespace pathcover {

namespace {

int resolve_jobs(int jobs)
{
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, count) into contiguous chunks, one per worker, and runs
// fn(worker, begin, end) on each. Worker exceptions are rethrown here.
template <class Fn>
void for_each_chunk(std::size_t count, int jobs, Fn&& fn)
{
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(resolve_jobs(jobs), count));
    if (workers == 1) {
        fn(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] {
                try {
                    fn(w, begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<PathSequence> sequences_of(const std::vector<Graph>& graphs, int jobs)
{
    std::vector<PathSequence> out(graphs.size());
    for_each_chunk(graphs.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = path_sequence(graphs[i]);
    });
    return out;
}

void reject_duplicates(const std::vector<Graph>& graphs, int jobs)
{
    std::vector<CanonicalForm> forms(graphs.size());
    for_each_chunk(graphs.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) forms[i] = canonical_form(graphs[i]);
    });
    std::unordered_map<CanonicalForm, std::size_t> first_seen;
    first_seen.reserve(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto [it, inserted] = first_seen.emplace(forms[i], i);
        if (!inserted)
            throw InvalidArgument("graphs #" + std::to_string(it->second + 1) + " and #" + std::to_string(i + 1) +
                                  " are isomorphic (" + encode_graph6(graphs[i]) + ")");
    }
}

}  // namespace

std::string GraphSource::describe() const
{
    if (builtin_order) return "built-in enumeration n=" + std::to_string(*builtin_order);
    return "graph6 file " + path;
}

std::optional<std::int64_t> known_connected_class_count(int n)
{
    static constexpr std::int64_t counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    if (n < 1 || n > 9) return std::nullopt;
    return counts[n];
}

GraphPopulation load_population(const GraphSource& source, const CensusOptions& options)
{
    GraphPopulation pop;
    if (source.builtin_order) {
        pop.n = *source.builtin_order;
        pop.graphs = enumerate_connected(pop.n);
        return pop;
    }

    std::vector<Graph> raw = read_graph6_file(source.path);
    if (raw.empty()) throw InvalidArgument("graph6 file " + source.path + " contains no graphs");
    pop.n = raw.front().order();
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i].order() != pop.n)
            throw InvalidArgument("graph #" + std::to_string(i + 1) + " has " + std::to_string(raw[i].order()) +
                                  " vertices; expected " + std::to_string(pop.n));
    if (pop.n > solver_vertex_cap())
        throw CapacityError("graphs on " + std::to_string(pop.n) + " vertices exceed the solver cap " +
                            std::to_string(solver_vertex_cap()));

    const std::size_t lines = raw.size();
    if (options.connected_only) {
        std::size_t skipped = 0;
        for (auto& g : raw) {
            if (is_connected(g))
                pop.graphs.push_back(std::move(g));
            else
                ++skipped;
        }
        if (skipped > 0) pop.warnings.push_back("skipped " + std::to_string(skipped) + " disconnected graphs");
    } else {
        pop.graphs = std::move(raw);
    }

    if (!source.trusted) {
        if (pop.n > kMaxCanonicalVertices)
            throw CapacityError("isomorphism dedupe supports n <= " + std::to_string(kMaxCanonicalVertices) +
                                "; pass trusted input for n = " + std::to_string(pop.n));
        reject_duplicates(pop.graphs, options.jobs);
    }

    if (auto expected = known_connected_class_count(pop.n); expected && options.connected_only) {
        if (static_cast<std::int64_t>(lines) != *expected)
            pop.warnings.push_back("file has " + std::to_string(lines) + " graphs; there are " +
                                   std::to_string(*expected) + " connected classes on " + std::to_string(pop.n) +
                                   " vertices");
    }
    return pop;
}

const CensusRecord* CensusReport::find(const PathSequence& sequence) const
{
    auto it = std::lower_bound(records.begin(), records.end(), sequence,
                               [](const CensusRecord& r, const PathSequence& s) { return r.sequence < s; });
    if (it == records.end() || it->sequence != sequence) return nullptr;
    return &*it;
}

CensusReport run_census(const GraphPopulation& population, int jobs)
{
    struct Tally {
        std::int64_t count = 0;
        bool tree = false;
    };
    const auto& graphs = population.graphs;
    const int workers = std::max(1, std::min<int>(resolve_jobs(jobs), static_cast<int>(graphs.size())));
    std::vector<std::map<PathSequence, Tally>> partial(static_cast<std::size_t>(workers));

    for_each_chunk(graphs.size(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        auto& mine = partial[w];
        for (std::size_t i = begin; i < end; ++i) {
            auto& t = mine[path_sequence(graphs[i])];
            ++t.count;
            t.tree = t.tree || is_tree(graphs[i]);
        }
    });

    std::map<PathSequence, Tally> merged;
    for (auto& part : partial)
        for (auto& [seq, t] : part) {
            auto& m = merged[seq];
            m.count += t.count;
            m.tree = m.tree || t.tree;
        }

    CensusReport report;
    report.n = population.n;
    report.warnings = population.warnings;
    for (auto& [seq, t] : merged) {
        report.records.push_back({seq, t.count, t.tree});
        report.total_graphs += t.count;
    }
    report.total_sequences = static_cast<std::int64_t>(report.records.size());
    return report;
}

CensusReport run_census(const GraphSource& source, const CensusOptions& options)
{
    return run_census(load_population(source, options), options.jobs);
}

std::string_view rule_name(Rule rule)
{
    switch (rule) {
    case Rule::conjecture: return "conjecture";
    case Rule::bounds: return "bounds";
    case Rule::suffix: return "suffix";
    }
    return "?";
}

RuleSet parse_rules(std::string_view text)
{
    RuleSet rules;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view name = text.substr(pos, comma - pos);
        if (name == "conjecture")
            rules.conjecture = true;
        else if (name == "bounds")
            rules.bounds = true;
        else if (name == "suffix")
            rules.suffix = true;
        else if (name == "all")
            rules = RuleSet::all();
        else
            throw InvalidArgument("unknown rule '" + std::string(name) + "' (expected conjecture, bounds, suffix)");
        any = true;
        pos = comma + 1;
    }
    if (!any) throw InvalidArgument("no rules given");
    return rules;
}

std::vector<Violation> check_rules(const Graph& g, const PathSequence& seq, RuleSet rules)
{
    std::vector<Violation> out;
    const int n = g.order();
    auto flag = [&](Rule r, std::string details) {
        out.push_back({encode_graph6(g), std::string(rule_name(r)), std::move(details)});
    };
    if (seq.order() != n) {
        flag(Rule::bounds, "sequence length " + std::to_string(seq.order()) + " != n");
        return out;
    }

    if (rules.conjecture && n >= 2 && is_connected(g) && seq.psi(n - 1) == 2 && seq.psi(n) != 1)
        flag(Rule::conjecture, "psi_" + std::to_string(n - 1) + "=2 but psi_" + std::to_string(n) + "=" +
                                   std::to_string(seq.psi(n)));

    if (rules.bounds) {
        if (seq.psi(1) != n) flag(Rule::bounds, "psi_1 != n");
        for (int k = 1; k <= n; ++k) {
            if (seq.psi(k) < 0) flag(Rule::bounds, "psi_" + std::to_string(k) + " negative");
            if (seq.psi(k) > n - k + 1) flag(Rule::bounds, "psi_" + std::to_string(k) + " > n-k+1");
            if (k > 1 && seq.psi(k) > seq.psi(k - 1)) flag(Rule::bounds, "increase at k=" + std::to_string(k));
        }
        for (int k = 2; k <= n; ++k) {
            if (seq.psi(k) <= 0) continue;
            for (int m = 1; m < k; ++m) {
                const int need = seq.psi(k) + k / m - 1;
                if (seq.psi(m) < need)
                    flag(Rule::bounds, "pair (m=" + std::to_string(m) + ",k=" + std::to_string(k) + "): psi_m=" +
                                           std::to_string(seq.psi(m)) + " < " + std::to_string(need));
            }
        }
        bool saturated = false;
        for (int k = 2; k <= n; ++k) saturated = saturated || seq.psi(k) == n - k + 1;
        if (saturated && !is_connected(g)) flag(Rule::bounds, "psi_k = n-k+1 for some k >= 2 but G is disconnected");
    }

    if (rules.suffix) {
        for (int k = 2; k < n; ++k) {
            if (seq.psi(k) != n - k + 1) continue;
            for (int j = k + 1; j <= n; ++j)
                if (seq.psi(j) != n - j + 1)
                    flag(Rule::suffix, "psi_" + std::to_string(k) + "=n-k+1 but psi_" + std::to_string(j) + "=" +
                                           std::to_string(seq.psi(j)));
            break;
        }
    }
    return out;
}

ViolationList verify(const GraphPopulation& population, RuleSet rules, int jobs)
{
    const auto& graphs = population.graphs;
    const auto sequences = sequences_of(graphs, jobs);
    ViolationList out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto found = check_rules(graphs[i], sequences[i], rules);
        out.items.insert(out.items.end(), found.begin(), found.end());
    }
    out.graphs_checked = static_cast<std::int64_t>(graphs.size());
    return out;
}

ViolationList verify(const GraphSource& source, RuleSet rules, const CensusOptions& options)
{
    return verify(load_population(source, options), rules, options.jobs);
}

ViolationList verify_conjecture(const GraphSource& source, const CensusOptions& options)
{
    return verify(source, RuleSet{true, false, false}, options);
}

ViolationList verify_bounds(const GraphSource& source, const CensusOptions& options)
{
    return verify(source, RuleSet{false, true, true}, options);
}

std::vector<std::string> find_realisations(const PathSequence& sequence, RealisationClass cls,
                                           const GraphPopulation& population, int jobs)
{
    if (sequence.order() != population.n)
        throw InvalidArgument("sequence has length " + std::to_string(sequence.order()) + " but graphs have " +
                              std::to_string(population.n) + " vertices");
    const auto sequences = sequences_of(population.graphs, jobs);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        if (sequences[i] != sequence) continue;
        if (cls == RealisationClass::tree && !is_tree(population.graphs[i])) continue;
        out.push_back(encode_graph6(population.graphs[i]));
    }
    return out;
}

std::vector<std::string> find_realisations(const PathSequence& sequence, RealisationClass cls,
                                           const GraphSource& source, const CensusOptions& options)
{
    return find_realisations(sequence, cls, load_population(source, options), options.jobs);
}

FeasibilityVerdict sequence_feasibility(const PathSequence& sequence)
{
    FeasibilityVerdict v;
    const int n = sequence.order();
    auto fail = [&](std::string why) {
        v.passed = false;
        v.reasons.push_back(std::move(why));
    };
    if (sequence.psi(1) != n) fail("psi_1=" + std::to_string(sequence.psi(1)) + " but n=" + std::to_string(n));
    for (int k = 2; k <= n; ++k)
        if (sequence.psi(k) > sequence.psi(k - 1))
            fail("monotonicity: psi_" + std::to_string(k) + "=" + std::to_string(sequence.psi(k)) + " > psi_" +
                 std::to_string(k - 1) + "=" + std::to_string(sequence.psi(k - 1)));
    for (int k = 1; k <= n; ++k)
        if (sequence.psi(k) > n - k + 1)
            fail("upper bound: psi_" + std::to_string(k) + "=" + std::to_string(sequence.psi(k)) + " > n-k+1=" +
                 std::to_string(n - k + 1));
    for (int k = 2; k <= n; ++k) {
        if (sequence.psi(k) <= 0) continue;
        for (int m = 1; m < k; ++m) {
            const int need = sequence.psi(k) + k / m - 1;
            if (sequence.psi(m) < need)
                fail("pair (m=" + std::to_string(m) + ",k=" + std::to_string(k) + "): psi_" + std::to_string(m) +
                     "=" + std::to_string(sequence.psi(m)) + " < psi_" + std::to_string(k) + "+floor(k/m)-1=" +
                     std::to_string(need));
        }
    }
    return v;
}

TableFormat parse_table_format(std::string_view text)
{
    if (text == "markdown" || text == "md") return TableFormat::markdown;
    if (text == "csv") return TableFormat::csv;
    if (text == "json") return TableFormat::json;
    throw InvalidArgument("unknown table format '" + std::string(text) + "' (expected markdown, csv, json)");
}

std::string emit_table(const CensusReport& report, TableFormat format)
{
    std::ostringstream out;
    switch (format) {
    case TableFormat::markdown:
        out << "| Sequence | Multiplicity |\n|---:|:---:|\n";
        for (const auto& r : report.records)
            out << "| " << (r.tree_realisable ? "* " : "") << r.sequence.str() << " | " << r.multiplicity << " |\n";
        out << '\n' << report.total_graphs << " graphs, " << report.total_sequences << " sequences\n";
        break;
    case TableFormat::csv:
        out << "sequence,multiplicity,tree_realisable\n";
        for (const auto& r : report.records)
            out << '"' << r.sequence.str() << "\"," << r.multiplicity << ',' << (r.tree_realisable ? "true" : "false")
                << '\n';
        break;
    case TableFormat::json: {
        nlohmann::json records = nlohmann::json::array();
        for (const auto& r : report.records)
            records.push_back({{"sequence", r.sequence.values()}, {"multiplicity", r.multiplicity}, {"tree", r.tree_realisable}});
        nlohmann::json doc = {{"n", report.n},
                              {"total_graphs", report.total_graphs},
                              {"total_sequences", report.total_sequences},
                              {"records", records}};
        out << doc.dump(2) << '\n';
        break;
    }
    }
    return out.str();
}

}  // namespace pathcover
