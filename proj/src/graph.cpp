#include "pathcover/graph.hpp"

#include <istream>
#include <sstream>

#include "pathcover/error.hpp"

namespace pathcover {

std::string to_string(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (Mask m = s.mask; m != 0; m &= m - 1) {
        if (!first) out += ',';
        out += std::to_string(std::countr_zero(m));
        first = false;
    }
    out += '}';
    return out;
}

Graph::Graph(int n) : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " outside supported range 1.." +
                            std::to_string(kMaxVertices));
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= Mask{1} << v;
    adj_[v] |= Mask{1} << u;
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v))
        throw InvalidArgument("no edge " + std::to_string(u) + "-" + std::to_string(v) + " to delete");
    adj_[u] &= ~(Mask{1} << v);
    adj_[v] &= ~(Mask{1} << u);
}

bool operator==(const Graph& a, const Graph& b) noexcept
{
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
        if (a.adj_[v] != b.adj_[v]) return false;
    return true;
}

Graph from_edge_list(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

namespace {

Mask reachable_from(const Graph& g, int start)
{
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask m = frontier; m != 0; m &= m - 1) next |= g.neighbours(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g)
{
    return reachable_from(g, 0) == g.all();
}

bool is_tree(const Graph& g)
{
    return g.edge_count() == g.order() - 1 && is_connected(g);
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    Mask left = g.all();
    while (left != 0) {
        Mask c = reachable_from(g, std::countr_zero(left));
        out.push_back({c});
        left &= ~c;
    }
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet s)
{
    if ((s.mask & ~g.all()) != 0) throw InvalidArgument("vertex set " + to_string(s) + " not contained in V");
    const int remaining = g.order() - s.size();
    if (remaining < 1) throw InvalidArgument("cannot delete every vertex");

    std::array<int, kMaxVertices> index{};
    int next = 0;
    for (int v = 0; v < g.order(); ++v) index[v] = s.contains(v) ? -1 : next++;

    Graph out(remaining);
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) out.add_edge(index[u], index[v]);
    return out;
}

Graph delete_edge(const Graph& g, int u, int v)
{
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("permutation size mismatch");
    Mask used = 0;
    for (int p : perm) {
        if (p < 0 || p >= g.order() || ((used >> p) & 1U)) throw InvalidArgument("not a permutation");
        used |= Mask{1} << p;
    }
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const int shift = a.order();
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

Graph read_edge_list(std::istream& in)
{
    long n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"");
    if (n < 1 || n > kMaxVertices)
        throw CapacityError("edge list: order " + std::to_string(n) + " outside supported range 1.." +
                            std::to_string(kMaxVertices));
    if (m < 0) throw ParseError("edge list: negative edge count");
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        long u = 0;
        long v = 0;
        if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i));
        if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    const auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace pathcover
