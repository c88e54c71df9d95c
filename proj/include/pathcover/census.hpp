#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/sequence.hpp"

namespace pathcover {

// Where a census draws its graphs from: the built-in enumerator (n <= 7) or a
// graph6 file. File input is deduplicated by canonical form unless trusted.
struct GraphSource {
    std::optional<int> builtin_order;
    std::string path;
    bool trusted = false;

    static GraphSource builtin(int n) { return {n, {}, false}; }
    static GraphSource file(std::string path, bool trusted = false) { return {std::nullopt, std::move(path), trusted}; }

    std::string describe() const;
};

struct CensusOptions {
    bool connected_only = true;
    int jobs = 0;  // 0: hardware concurrency
};

struct GraphPopulation {
    int n = 0;
    std::vector<Graph> graphs;
    std::vector<std::string> warnings;
};

// Number of isomorphism classes of connected graphs on n vertices, for the
// orders where it is used as a sanity check on input files (n <= 9).
std::optional<std::int64_t> known_connected_class_count(int n);

GraphPopulation load_population(const GraphSource& source, const CensusOptions& options = {});

struct CensusRecord {
    PathSequence sequence;
    std::int64_t multiplicity = 0;
    bool tree_realisable = false;
};

struct CensusReport {
    int n = 0;
    std::vector<CensusRecord> records;  // ascending by sequence
    std::int64_t total_graphs = 0;
    std::int64_t total_sequences = 0;
    std::vector<std::string> warnings;

    const CensusRecord* find(const PathSequence& sequence) const;
};

CensusReport run_census(const GraphPopulation& population, int jobs = 0);
CensusReport run_census(const GraphSource& source, const CensusOptions& options = {});

enum class Rule { conjecture, bounds, suffix };

struct RuleSet {
    bool conjecture = false;
    bool bounds = false;
    bool suffix = false;

    static RuleSet all() { return {true, true, true}; }
};

// Comma-separated rule names: conjecture, bounds, suffix. Throws InvalidArgument.
RuleSet parse_rules(std::string_view text);
std::string_view rule_name(Rule rule);

struct Violation {
    std::string graph6;
    std::string rule;
    std::string details;
};

struct ViolationList {
    std::vector<Violation> items;
    std::int64_t graphs_checked = 0;

    bool empty() const { return items.empty(); }
};

// Rules on one graph with its already computed sequence. The conjecture rule
// only speaks about connected graphs; disconnected inputs pass it vacuously.
std::vector<Violation> check_rules(const Graph& g, const PathSequence& sequence, RuleSet rules);

ViolationList verify(const GraphPopulation& population, RuleSet rules, int jobs = 0);
ViolationList verify(const GraphSource& source, RuleSet rules, const CensusOptions& options = {});
ViolationList verify_conjecture(const GraphSource& source, const CensusOptions& options = {});
ViolationList verify_bounds(const GraphSource& source, const CensusOptions& options = {});

enum class RealisationClass { any, tree };

// graph6 strings of every graph in the population with this sequence, in
// population order.
std::vector<std::string> find_realisations(const PathSequence& sequence, RealisationClass cls,
                                           const GraphPopulation& population, int jobs = 0);
std::vector<std::string> find_realisations(const PathSequence& sequence, RealisationClass cls,
                                           const GraphSource& source, const CensusOptions& options = {});

// Necessary conditions only; passing says nothing about realisability.
struct FeasibilityVerdict {
    bool passed = true;
    std::vector<std::string> reasons;
};

FeasibilityVerdict sequence_feasibility(const PathSequence& sequence);

enum class TableFormat { markdown, csv, json };

TableFormat parse_table_format(std::string_view text);
std::string emit_table(const CensusReport& report, TableFormat format);

}  // namespace pathcover
