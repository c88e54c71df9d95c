#include "pathcover/enumerate.hpp"

#include <cstdint>

#include "pathcover/canonical.hpp"
#include "pathcover/error.hpp"

namespace pathcover {

void for_each_connected(int n, const std::function<void(const Graph&)>& emit)
{
    if (n < 2 || n > kMaxEnumeratedVertices)
        throw CapacityError("built-in enumeration covers 2.." + std::to_string(kMaxEnumeratedVertices) +
                            " vertices; supply a graph6 file for n = " + std::to_string(n));

    // Every labeled graph is visited once; it is emitted iff connected and its
    // own labeling is the minimal code, which picks exactly one per class.
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        Graph g = graph_from_code({n, code});
        if (!is_connected(g)) continue;
        if (is_canonically_labeled(g)) emit(g);
    }
}

std::vector<Graph> enumerate_connected(int n)
{
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace pathcover
