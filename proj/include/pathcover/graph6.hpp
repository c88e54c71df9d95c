#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// graph6, short form only: one size byte (n + 63), then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each + 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

// One graph per line; blank lines are skipped. Errors carry the 1-based line number.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace pathcover
