#pragma once

#include <functional>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

inline constexpr int kMaxEnumeratedVertices = 7;

// Calls `emit` once per isomorphism class of connected graphs on n vertices,
// 2 <= n <= 7. Each representative is canonically labeled; classes arrive in
// increasing canonical-code order.
void for_each_connected(int n, const std::function<void(const Graph&)>& emit);

std::vector<Graph> enumerate_connected(int n);

}  // namespace pathcover
