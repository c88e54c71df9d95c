#include "pathcover/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "pathcover/error.hpp"

namespace pathcover {

namespace {

int initial_cap()
{
    int cap = kMaxSolverVertices;
    if (const char* env = std::getenv("PATHCOVER_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < cap) cap = static_cast<int>(v);
    }
    return cap;
}

std::atomic<int>& cap_storage()
{
    static std::atomic<int> cap{initial_cap()};
    return cap;
}

void check_solver_order(int n)
{
    const int cap = solver_vertex_cap();
    if (n > cap)
        throw CapacityError("exact solver is capped at " + std::to_string(cap) + " vertices, got " +
                            std::to_string(n));
}

void check_k(int n, int k)
{
    if (k < 1 || k > n)
        throw InvalidArgument("path order k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
}

}  // namespace

int solver_vertex_cap() { return cap_storage().load(std::memory_order_relaxed); }

int lower_solver_vertex_cap(int cap)
{
    auto& stored = cap_storage();
    int current = stored.load();
    while (cap >= 1 && cap < current && !stored.compare_exchange_weak(current, cap)) {
    }
    return stored.load();
}

PathWitnessTable path_witness_table(const Graph& g)
{
    const int n = g.order();
    check_solver_order(n);
    const Mask full = g.all();
    std::vector<Mask> reach(std::size_t{full} + 1, 0);
    const auto adj = g.adjacency();

    for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
        if ((mask & (mask - 1)) == 0) {
            reach[mask] = mask;
            continue;
        }
        Mask ends = 0;
        for (Mask m = mask; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (reach[mask & ~(Mask{1} << v)] & adj[v]) ends |= Mask{1} << v;
        }
        reach[mask] = ends;
    }
    return PathWitnessTable(n, std::move(reach));
}

LongestPathTable longest_path_table(const PathWitnessTable& witnesses)
{
    const int n = witnesses.order();
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> longest(size, 0);
    for (std::size_t mask = 1; mask < size; ++mask)
        if (witnesses.has_spanning_path(static_cast<Mask>(mask)))
            longest[mask] = static_cast<std::uint8_t>(std::popcount(static_cast<Mask>(mask)));

    // Subset-max sweep: after processing bit i, longest[T] covers every subset
    // of T that differs from T only in bits <= i.
    for (int i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t mask = 0; mask < size; ++mask)
            if (mask & bit) longest[mask] = std::max(longest[mask], longest[mask ^ bit]);
    }
    return LongestPathTable(n, std::move(longest));
}

LongestPathTable longest_path_table(const Graph& g) { return longest_path_table(path_witness_table(g)); }

PathSequence path_sequence(const LongestPathTable& table)
{
    const int n = table.order();
    // largest[j] = max |T| with longest_within(T) == j
    std::vector<int> largest(static_cast<std::size_t>(n) + 1, 0);
    const Mask full = low_bits(n);
    for (Mask t = 0;; ++t) {
        const int j = table.longest_within(t);
        largest[j] = std::max(largest[j], std::popcount(t));
        if (t == full) break;
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    int keep = 0;
    for (int k = 1; k <= n; ++k) {
        keep = std::max(keep, largest[k - 1]);
        values[k - 1] = n - keep;
    }
    return PathSequence(std::move(values));
}

PathSequence path_sequence(const Graph& g) { return path_sequence(longest_path_table(g)); }

int psi_k(const Graph& g, int k)
{
    check_k(g.order(), k);
    return path_sequence(g).psi(k);
}

std::vector<VertexSet> minimum_k_pvcs(const LongestPathTable& table, int k)
{
    const int n = table.order();
    if (k < 2 || k > n)
        throw InvalidArgument("minimum covers need 1 < k <= n, got k=" + std::to_string(k));
    if (n > kMaxCoverEnumerationVertices)
        throw CapacityError("cover enumeration is capped at " + std::to_string(kMaxCoverEnumerationVertices) +
                            " vertices");
    const int size = path_sequence(table).psi(k);
    const Mask full = low_bits(n);
    std::vector<VertexSet> out;
    for (Mask s = 0;; ++s) {
        if (std::popcount(s) == size && table.longest_within(full & ~s) < k) out.push_back({s});
        if (s == full) break;
    }
    return out;
}

std::vector<VertexSet> minimum_k_pvcs(const Graph& g, int k)
{
    check_k(g.order(), k);
    if (g.order() > kMaxCoverEnumerationVertices)
        throw CapacityError("cover enumeration is capped at " + std::to_string(kMaxCoverEnumerationVertices) +
                            " vertices");
    return minimum_k_pvcs(longest_path_table(g), k);
}

VertexSet minimum_cover_support(const LongestPathTable& table, int k)
{
    VertexSet support;
    for (VertexSet s : minimum_k_pvcs(table, k)) support.mask |= s.mask;
    return support;
}

bool is_k_path_cover(const LongestPathTable& table, const Cover& cover)
{
    const Mask full = low_bits(table.order());
    if ((cover.set.mask & ~full) != 0) throw InvalidArgument("cover is not a subset of V");
    return table.longest_within(full & ~cover.set.mask) < cover.k;
}

bool has_hamilton_path(const Graph& g)
{
    return path_witness_table(g).has_spanning_path(g.all());
}

}  // namespace pathcover
