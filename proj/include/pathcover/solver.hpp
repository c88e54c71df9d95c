#pragma once

#include <cstdint>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/sequence.hpp"

namespace pathcover {

inline constexpr int kMaxSolverVertices = 24;
inline constexpr int kMaxCoverEnumerationVertices = 20;

// Current process-wide cap on solver input order. Starts at 24, or lower if
// PATHCOVER_MAX_N is set to a smaller positive value.
int solver_vertex_cap();

// Lowers the cap; requests to raise it are ignored. Returns the new cap.
int lower_solver_vertex_cap(int cap);

// reach(mask) holds the vertices v such that some simple path visits exactly
// the vertices of mask and ends at v.
class PathWitnessTable {
public:
    PathWitnessTable(int n, std::vector<Mask> reach) : n_(n), reach_(std::move(reach)) {}

    int order() const noexcept { return n_; }
    Mask endpoints(Mask subset) const { return reach_[subset]; }
    bool has_spanning_path(Mask subset) const { return reach_[subset] != 0; }

private:
    int n_;
    std::vector<Mask> reach_;
};

// longest_within(T) is the number of vertices of a longest simple path inside
// G[T]; monotone under inclusion, 0 for the empty set.
class LongestPathTable {
public:
    LongestPathTable(int n, std::vector<std::uint8_t> longest) : n_(n), longest_(std::move(longest)) {}

    int order() const noexcept { return n_; }
    int longest_within(Mask subset) const { return longest_[subset]; }
    int longest() const { return longest_[low_bits(n_)]; }

private:
    int n_;
    std::vector<std::uint8_t> longest_;
};

// A vertex set together with the path order it is meant to hit.
struct Cover {
    VertexSet set;
    int k = 0;
};

PathWitnessTable path_witness_table(const Graph& g);
LongestPathTable longest_path_table(const Graph& g);
LongestPathTable longest_path_table(const PathWitnessTable& witnesses);

// psi_k(G): the least |S| such that G - S has no path on k vertices. 1 <= k <= n.
int psi_k(const Graph& g, int k);

PathSequence path_sequence(const Graph& g);
PathSequence path_sequence(const LongestPathTable& table);

// All minimum k-path vertex covers in ascending mask order. 1 < k <= n <= 20.
std::vector<VertexSet> minimum_k_pvcs(const Graph& g, int k);
std::vector<VertexSet> minimum_k_pvcs(const LongestPathTable& table, int k);

// Union of all minimum k-path vertex covers.
VertexSet minimum_cover_support(const LongestPathTable& table, int k);

bool is_k_path_cover(const LongestPathTable& table, const Cover& cover);

bool has_hamilton_path(const Graph& g);

}  // namespace pathcover
