#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/sequence.hpp"

namespace pathcover {

// Parameters of the two-value realisation: a connected graph with
// psi_k = p_k and psi_m = p_m whenever p_k > 0 and p_m >= p_k + floor(k/m) - 1.
struct ConstructionSpec {
    int m = 0;
    int k = 0;
    int p_k = 0;
    int p_m = 0;

    int a() const { return k / m; }
    // Number of (2m-1)-vertex paths in the core.
    int core_paths() const { return p_k + a() - 1; }
    // Number of m-vertex paths hung off the first core path.
    int extra_paths() const { return p_m - core_paths(); }
    int core_order() const { return core_paths() * (2 * m - 1); }
    int full_order() const { return core_order() + extra_paths() * m; }

    // Throws InvalidArgument unless 1 <= m < k, p_k > 0 and p_m >= p_k + a - 1.
    void validate() const;
};

enum class CheckStatus { checked, unchecked };

// A built graph, its named vertex sets, and the psi values the solver
// confirmed (empty when the graph was too large to check).
struct LabeledConstruction {
    Graph graph;
    std::map<std::string, VertexSet> annotations;
    CheckStatus status = CheckStatus::unchecked;
    std::vector<std::pair<int, int>> confirmed;  // (k, psi_k)

    // "checked: ψ_3=4 ψ_6=2" or "unchecked: ..."
    std::string summary() const;
};

// Two non-isomorphic graphs with equal path sequences.
struct TwinPair {
    Graph first;
    Graph second;
    CheckStatus status = CheckStatus::unchecked;
    std::optional<PathSequence> sequence;
};

// G_{v,t}: t new degree-1 vertices n..n+t-1, all joined to v.
Graph attach_pendants(const Graph& g, int v, int t);

// ((C_4)_{u,n-4}, (K_4 - e)_{v,n-4}) with v of degree 3; n >= 4.
TwinPair twin_pair(int n);

// Core graph H: core_paths() disjoint paths on 2m-1 vertices, path i in block
// [i(2m-1), (i+1)(2m-1)) with its middle at offset m-1; every vertex of a path
// is joined to the middles of all other paths. Annotation "M" = middles.
LabeledConstruction two_value_core(const ConstructionSpec& spec);

// H plus extra_paths() disjoint m-vertex paths, each with its first vertex
// joined to the middle of path 0. Annotation "Q" = first vertices of those.
LabeledConstruction two_value_graph(const ConstructionSpec& spec);

// s disjoint copies of P_m.
LabeledConstruction disjoint_paths(int s, int m);

// Every vertex v of h becomes the first vertex of its own k-vertex path; h's
// edges stay. Original vertices keep indices 0..|h|-1 (annotation "W").
LabeledConstruction anchor_supergraph(const Graph& h, int k);

// Two non-isomorphic trees on n >= 7 vertices with sequence (n,2,2,1,1,0,...,0).
TwinPair twin_trees(int n);

// Fewest marked vertices on any simple path with exactly k vertices, or
// nullopt when g has no such path. Exhaustive DFS; meant for small graphs.
std::optional<int> min_marked_on_paths(const Graph& g, VertexSet marked, int k);

// Rooted-at-centre encoding; equal strings iff the trees are isomorphic.
std::string tree_code(const Graph& tree);

}  // namespace pathcover
