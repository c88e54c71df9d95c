#pragma once

#include "pathcover/graph.hpp"

namespace pathcover {

// Closed forms for psi_k on the standard families.
int psi_path(int n, int k);      // floor(n/k)
int psi_cycle(int n, int k);     // ceil(n/k), n >= 3
int psi_complete(int n, int k);  // n - k + 1

// a + b for k = 1; min(a,b) - floor(k/2) + 1 for 1 < k <= 2 min(a,b) + 1; else 0.
int psi_complete_bipartite(int a, int b, int k);

// Path and cycle follow vertex order; K_{a,b} puts the a-block first.
Graph build_path(int n);
Graph build_cycle(int n);
Graph build_complete(int n);
Graph build_complete_bipartite(int a, int b);

}  // namespace pathcover
