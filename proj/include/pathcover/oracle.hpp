#pragma once

#include "pathcover/graph.hpp"

namespace pathcover {

inline constexpr int kMaxOracleVertices = 12;

// Reference implementations that share nothing with the subset tables:
// plain depth-first search over simple paths on adjacency lists.

// Vertex count of a longest simple path in G - removed (0 if nothing remains).
int brute_force_longest_path(const Graph& g, VertexSet removed = {});

// Smallest removal set, by increasing size, that leaves no path on k vertices.
int brute_force_psi_k(const Graph& g, int k);

}  // namespace pathcover
