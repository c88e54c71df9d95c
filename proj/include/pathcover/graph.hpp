#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathcover {

inline constexpr int kMaxVertices = 32;

using Mask = std::uint32_t;

// Mask with bits 0..n-1 set.
constexpr Mask low_bits(int n) noexcept
{
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

// A subset of vertices, one bit per vertex.
struct VertexSet {
    Mask mask = 0;

    constexpr bool contains(int v) const noexcept { return (mask >> v) & 1U; }
    constexpr int size() const noexcept { return std::popcount(mask); }
    constexpr bool empty() const noexcept { return mask == 0; }

    static constexpr VertexSet of(std::initializer_list<int> vs) noexcept
    {
        VertexSet s;
        for (int v : vs) s.mask |= Mask{1} << v;
        return s;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;
};

std::string to_string(VertexSet s);

using Edge = std::pair<int, int>;

// Simple undirected graph on at most 32 vertices stored as adjacency bitmasks.
// Mutators exist for builders; a const Graph is a plain immutable value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const noexcept { return n_; }
    Mask all() const noexcept { return low_bits(n_); }
    Mask neighbours(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return std::popcount(adj_[v]); }
    bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    int edge_count() const noexcept;
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::span<const Mask> adjacency() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

Graph from_edge_list(int n, std::span<const Edge> edges);
inline Graph from_edge_list(int n, std::initializer_list<Edge> edges)
{
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Induced subgraph on V \ s; surviving vertices keep their relative order.
Graph delete_vertices(const Graph& g, VertexSet s);
Graph delete_edge(const Graph& g, int u, int v);

// Vertex i of the result is perm[i] of g.
Graph relabel(const Graph& g, std::span<const int> perm);

// Vertices of b are shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

// Components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Edge-list text: "n m" then m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace pathcover
