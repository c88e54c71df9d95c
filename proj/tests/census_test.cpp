#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include <gtest/gtest.h>

#include "json.hpp"

#include "reference_census.hpp"
#include "pathcover/canonical.hpp"
#include "pathcover/census.hpp"
#include "pathcover/enumerate.hpp"
#include "pathcover/error.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph6.hpp"
#include "pathcover/solver.hpp"

namespace pathcover {
namespace {

namespace fs = std::filesystem;

PathSequence seq(std::vector<int> v) { return PathSequence(std::move(v)); }

class TempFile {
public:
    explicit TempFile(const std::string& contents)
        : path_(fs::temp_directory_path() / ("pathcover_test_" + std::to_string(counter_++) + ".g6"))
    {
        std::ofstream(path_) << contents;
    }
    ~TempFile() { fs::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

void expect_matches_table(const CensusReport& report, const std::vector<testing::TableRow>& table)
{
    ASSERT_EQ(report.records.size(), table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        EXPECT_EQ(report.records[i].sequence, seq(table[i].sequence));
        EXPECT_EQ(report.records[i].multiplicity, table[i].multiplicity) << report.records[i].sequence.str();
        EXPECT_EQ(report.records[i].tree_realisable, table[i].tree) << report.records[i].sequence.str();
    }
}

TEST(CensusTest, FiveVertices)
{
    const auto r = run_census(GraphSource::builtin(5));
    EXPECT_EQ(r.total_graphs, 21);
    EXPECT_EQ(r.total_sequences, 9);
    ASSERT_NE(r.find(seq({5, 2, 2, 1, 1})), nullptr);
    EXPECT_EQ(r.find(seq({5, 2, 2, 1, 1}))->multiplicity, 5);
    EXPECT_FALSE(r.find(seq({5, 2, 2, 1, 1}))->tree_realisable);
    EXPECT_EQ(r.find(seq({5, 2, 1, 1, 0}))->multiplicity, 2);
    EXPECT_TRUE(r.find(seq({5, 2, 1, 1, 0}))->tree_realisable);
    expect_matches_table(r, testing::kCensus5);
}

TEST(CensusTest, SixVertices)
{
    const auto r = run_census(GraphSource::builtin(6));
    EXPECT_EQ(r.total_graphs, 112);
    EXPECT_EQ(r.find(seq({6, 3, 2, 2, 1, 1}))->multiplicity, 22);
    expect_matches_table(r, testing::kCensus6);
}

TEST(CensusTest, DeterministicAcrossJobCounts)
{
    const auto pop = load_population(GraphSource::builtin(6));
    const auto one = emit_table(run_census(pop, 1), TableFormat::json);
    EXPECT_EQ(one, emit_table(run_census(pop, 3), TableFormat::json));
    EXPECT_EQ(one, emit_table(run_census(pop, 8), TableFormat::json));
}

TEST(CensusTest, SmallTreesAreSeparatedBySequence)
{
    for (int n = 2; n <= 6; ++n) {
        std::map<PathSequence, int> trees;
        for (const Graph& g : enumerate_connected(n))
            if (is_tree(g)) ++trees[path_sequence(g)];
        for (const auto& [s, count] : trees) EXPECT_EQ(count, 1) << s.str();
    }
    std::map<PathSequence, int> trees7;
    for (const Graph& g : enumerate_connected(7))
        if (is_tree(g)) ++trees7[path_sequence(g)];
    EXPECT_EQ(trees7[seq({7, 2, 2, 1, 1, 0, 0})], 2);
}

TEST(CensusFileTest, ReadsAndDedupes)
{
    std::string text;
    for (const Graph& g : enumerate_connected(5)) text += encode_graph6(g) + "\n";
    TempFile file(text);
    const auto r = run_census(GraphSource::file(file.path()));
    EXPECT_EQ(r.total_graphs, 21);
    EXPECT_TRUE(r.warnings.empty());
    expect_matches_table(r, testing::kCensus5);
}

TEST(CensusFileTest, RejectsIsomorphicDuplicates)
{
    // P_4 twice under different labelings.
    TempFile file(encode_graph6(build_path(4)) + "\n" +
                  encode_graph6(from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}})) + "\n");
    EXPECT_THROW(run_census(GraphSource::file(file.path())), InvalidArgument);
    // Trusted input skips the check.
    EXPECT_EQ(run_census(GraphSource::file(file.path(), true)).total_graphs, 2);
}

TEST(CensusFileTest, SkipsDisconnectedAndWarnsOnCount)
{
    TempFile file(encode_graph6(build_path(4)) + "\n" + encode_graph6(Graph(4)) + "\n");
    const auto r = run_census(GraphSource::file(file.path()));
    EXPECT_EQ(r.total_graphs, 1);
    EXPECT_EQ(r.warnings.size(), 2u);

    const auto all = run_census(GraphSource::file(file.path()), {false, 1});
    EXPECT_EQ(all.total_graphs, 2);
}

TEST(CensusFileTest, Errors)
{
    TempFile mixed(encode_graph6(build_path(4)) + "\n" + encode_graph6(build_path(5)) + "\n");
    EXPECT_THROW(run_census(GraphSource::file(mixed.path())), InvalidArgument);
    TempFile broken("A_\nA\n");
    EXPECT_THROW(run_census(GraphSource::file(broken.path())), ParseError);
    EXPECT_THROW(run_census(GraphSource::file("/nonexistent/graphs.g6")), ParseError);
    TempFile big(encode_graph6(build_path(10)) + "\n");
    EXPECT_THROW(run_census(GraphSource::file(big.path())), CapacityError);
    EXPECT_EQ(run_census(GraphSource::file(big.path(), true)).total_graphs, 1);
    TempFile huge(encode_graph6(build_path(25)) + "\n");
    EXPECT_THROW(run_census(GraphSource::file(huge.path(), true)), CapacityError);
}

TEST(VerifyTest, ConjectureAndBoundsHoldForSmallCensus)
{
    for (int n = 2; n <= 7; ++n) {
        EXPECT_TRUE(verify_conjecture(GraphSource::builtin(n)).empty()) << n;
        EXPECT_TRUE(verify_bounds(GraphSource::builtin(n)).empty()) << n;
    }
}

TEST(VerifyTest, CycleIsNotAConjectureViolation)
{
    const Graph c5 = build_cycle(5);
    const auto s = path_sequence(c5);
    EXPECT_EQ(s.psi(4), 2);
    EXPECT_EQ(s.psi(5), 1);
    EXPECT_TRUE(check_rules(c5, s, RuleSet::all()).empty());
}

TEST(VerifyTest, StarWithoutLongPathsIsNotABoundViolation)
{
    const Graph star = build_complete_bipartite(1, 8);
    const auto s = path_sequence(star);
    EXPECT_EQ(s.psi(9), 0);
    EXPECT_TRUE(check_rules(star, s, RuleSet::all()).empty());
}

TEST(VerifyTest, CompleteGraphSuffix)
{
    const Graph k5 = build_complete(5);
    EXPECT_TRUE(check_rules(k5, path_sequence(k5), RuleSet{false, false, true}).empty());
}

TEST(VerifyTest, FlagsFabricatedSequences)
{
    const Graph c5 = build_cycle(5);
    // A fake sequence with psi_4 = 2 and psi_5 = 0 trips the conjecture rule.
    const auto v = check_rules(c5, seq({5, 3, 2, 2, 0}), RuleSet{true, false, false});
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].rule, "conjecture");
    EXPECT_EQ(v[0].graph6, encode_graph6(c5));

    // Saturated psi_2 on a disconnected graph contradicts connectivity.
    const Graph two = disjoint_union(build_path(2), build_path(2));
    EXPECT_FALSE(check_rules(two, seq({4, 3, 0, 0}), RuleSet{false, true, false}).empty());
    // psi_2 = n-1 without the rest of the suffix.
    EXPECT_FALSE(check_rules(build_complete(4), seq({4, 3, 1, 1}), RuleSet{false, false, true}).empty());
}

TEST(VerifyTest, RuleParsing)
{
    const auto r = parse_rules("conjecture,suffix");
    EXPECT_TRUE(r.conjecture);
    EXPECT_FALSE(r.bounds);
    EXPECT_TRUE(r.suffix);
    EXPECT_THROW(parse_rules("bounds,nope"), InvalidArgument);
    EXPECT_THROW(parse_rules(""), InvalidArgument);
}

TEST(RealisationTest, Examples)
{
    const auto star = find_realisations(seq({5, 1, 1, 0, 0}), RealisationClass::any, GraphSource::builtin(5));
    ASSERT_EQ(star.size(), 1u);
    EXPECT_TRUE(are_isomorphic(decode_graph6(star[0]), build_complete_bipartite(1, 4)));

    const auto k5 = find_realisations(seq({5, 4, 3, 2, 1}), RealisationClass::any, GraphSource::builtin(5));
    ASSERT_EQ(k5.size(), 1u);
    EXPECT_TRUE(are_isomorphic(decode_graph6(k5[0]), build_complete(5)));

    const auto trees = find_realisations(seq({7, 2, 2, 1, 1, 0, 0}), RealisationClass::tree, GraphSource::builtin(7));
    EXPECT_GE(trees.size(), 2u);
    for (const auto& t : trees) EXPECT_TRUE(is_tree(decode_graph6(t)));

    EXPECT_THROW(find_realisations(seq({5, 1, 1, 0}), RealisationClass::any, GraphSource::builtin(5)),
                 InvalidArgument);
}

TEST(FeasibilityTest, PairConditionRulesOutSequence)
{
    // psi_2 = 5 and psi_10 = 2 cannot coexist.
    const auto v = sequence_feasibility(seq({12, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1}));
    EXPECT_FALSE(v.passed);
    bool saw_pair = false;
    for (const auto& r : v.reasons) saw_pair = saw_pair || r.find("pair (m=2,k=10)") != std::string::npos;
    EXPECT_TRUE(saw_pair);
}

TEST(FeasibilityTest, Examples)
{
    EXPECT_TRUE(sequence_feasibility(seq({5, 4, 3, 2, 1})).passed);
    const auto v = sequence_feasibility(seq({5, 2, 3, 1, 1}));
    EXPECT_FALSE(v.passed);
    EXPECT_NE(v.reasons.front().find("monotonicity"), std::string::npos);
    EXPECT_FALSE(sequence_feasibility(seq({4, 2, 2, 2})).passed);
}

TEST(FeasibilityTest, EveryCensusSequencePasses)
{
    for (int n = 2; n <= 7; ++n)
        for (const auto& r : run_census(GraphSource::builtin(n)).records)
            EXPECT_TRUE(sequence_feasibility(r.sequence).passed) << r.sequence.str();
}

TEST(SequenceTest, Parsing)
{
    EXPECT_EQ(parse_sequence("(5,2,1,1,1)"), seq({5, 2, 1, 1, 1}));
    EXPECT_EQ(parse_sequence("5 2 1"), seq({5, 2, 1}));
    EXPECT_EQ(seq({5, 2, 1}).str(), "(5,2,1)");
    EXPECT_THROW(parse_sequence("5,-1"), ParseError);
    EXPECT_THROW(parse_sequence("()"), ParseError);
    EXPECT_THROW(parse_sequence("(5,2"), ParseError);
}

TEST(EmitTest, Markdown)
{
    const auto text = emit_table(run_census(GraphSource::builtin(5)), TableFormat::markdown);
    EXPECT_NE(text.find("| * (5,1,1,0,0) | 1 |"), std::string::npos);
    EXPECT_NE(text.find("| (5,2,2,1,1) | 5 |"), std::string::npos);
    EXPECT_LT(text.find("(5,1,1,0,0)"), text.find("(5,2,1,1,0)"));
    EXPECT_NE(text.find("21 graphs, 9 sequences"), std::string::npos);
}

TEST(EmitTest, Csv)
{
    const auto text = emit_table(run_census(GraphSource::builtin(6)), TableFormat::csv);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 21);
    EXPECT_EQ(text.substr(0, text.find('\n')), "sequence,multiplicity,tree_realisable");
    EXPECT_NE(text.find("\"(6,3,2,2,1,1)\",22,false"), std::string::npos);
}

TEST(EmitTest, Json)
{
    const auto doc = nlohmann::json::parse(emit_table(run_census(GraphSource::builtin(5)), TableFormat::json));
    EXPECT_EQ(doc["n"], 5);
    EXPECT_EQ(doc["total_graphs"], 21);
    EXPECT_EQ(doc["total_sequences"], 9);
    EXPECT_EQ(doc["records"][0]["sequence"], nlohmann::json::array({5, 1, 1, 0, 0}));
    EXPECT_EQ(doc["records"][0]["multiplicity"], 1);
    EXPECT_EQ(doc["records"][0]["tree"], true);
    EXPECT_THROW(parse_table_format("xml"), InvalidArgument);
}

}  // namespace
}  // namespace pathcover
