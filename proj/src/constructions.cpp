#include "pathcover/constructions.hpp"

#include <algorithm>
#include <functional>

#include "pathcover/canonical.hpp"
#include "pathcover/enumerate.hpp"
#include "pathcover/error.hpp"
#include "pathcover/solver.hpp"

namespace pathcover {

namespace {

bool fits_solver(int n) { return n <= solver_vertex_cap(); }

void check_order(int n, const char* what)
{
    if (n > kMaxVertices)
        throw CapacityError(std::string(what) + " would have " + std::to_string(n) + " vertices; limit is " +
                            std::to_string(kMaxVertices));
}

void confirm(LabeledConstruction& c, const PathSequence& seq, int k, int expected, const char* what)
{
    const int got = seq.psi(k);
    if (got != expected)
        throw ConstructionError(std::string(what) + ": expected psi_" + std::to_string(k) + "=" +
                                std::to_string(expected) + ", solver found " + std::to_string(got));
    c.confirmed.emplace_back(k, got);
}

void add_path(Graph& g, int first, int length)
{
    for (int i = 0; i + 1 < length; ++i) g.add_edge(first + i, first + i + 1);
}

// Sequence (n,2,2,1,1,0,...,0), or (4,2,2,1) for n = 4.
PathSequence pendant_twin_sequence(int n)
{
    if (n == 4) return PathSequence({4, 2, 2, 1});
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[0] = n;
    v[1] = 2;
    v[2] = 2;
    v[3] = 1;
    v[4] = 1;
    return PathSequence(std::move(v));
}

}  // namespace

void ConstructionSpec::validate() const
{
    if (m < 1 || m >= k) throw InvalidArgument("need 1 <= m < k");
    if (p_k <= 0) throw InvalidArgument("need p_k > 0");
    if (p_m < p_k + a() - 1)
        throw InvalidArgument("need p_m >= p_k + floor(k/m) - 1 = " + std::to_string(p_k + a() - 1));
}

std::string LabeledConstruction::summary() const
{
    if (status == CheckStatus::unchecked)
        return "unchecked: " + std::to_string(graph.order()) + " vertices exceeds solver cap " +
               std::to_string(solver_vertex_cap());
    std::string out = "checked:";
    for (auto [k, value] : confirmed) out += " ψ_" + std::to_string(k) + "=" + std::to_string(value);
    return out;
}

Graph attach_pendants(const Graph& g, int v, int t)
{
    if (v < 0 || v >= g.order()) throw InvalidArgument("attachment vertex out of range");
    if (t < 0) throw InvalidArgument("pendant count must be non-negative");
    const int n = g.order();
    check_order(n + t, "pendant attachment");
    Graph out(n + t);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int i = 0; i < t; ++i) out.add_edge(v, n + i);
    return out;
}

TwinPair twin_pair(int n)
{
    if (n < 4) throw InvalidArgument("twin pair needs n >= 4");
    check_order(n, "twin pair");
    // K_4 minus the edge 2-3: vertices 0 and 1 have degree 3.
    const Graph c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph diamond = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

    TwinPair out{attach_pendants(c4, 0, n - 4), attach_pendants(diamond, 0, n - 4), CheckStatus::unchecked, {}};
    if (out.first.edge_count() == out.second.edge_count()) throw ConstructionError("twin pair: edge counts coincide");
    if (fits_solver(n)) {
        const auto a = path_sequence(out.first);
        const auto b = path_sequence(out.second);
        if (a != b || a != pendant_twin_sequence(n))
            throw ConstructionError("twin pair: sequences " + a.str() + " and " + b.str() + " do not match " +
                                    pendant_twin_sequence(n).str());
        out.status = CheckStatus::checked;
        out.sequence = a;
    }
    return out;
}

LabeledConstruction two_value_core(const ConstructionSpec& spec)
{
    spec.validate();
    const int paths = spec.core_paths();
    const int len = 2 * spec.m - 1;
    check_order(spec.core_order(), "core graph");

    LabeledConstruction c{Graph(spec.core_order()), {}, CheckStatus::unchecked, {}};
    VertexSet middles;
    for (int i = 0; i < paths; ++i) {
        add_path(c.graph, i * len, len);
        middles.mask |= Mask{1} << (i * len + spec.m - 1);
    }
    for (int i = 0; i < paths; ++i)
        for (int j = 0; j < paths; ++j) {
            if (i == j) continue;
            const int middle = j * len + spec.m - 1;
            for (int x = 0; x < len; ++x)
                if (!c.graph.has_edge(i * len + x, middle)) c.graph.add_edge(i * len + x, middle);
        }
    c.annotations["M"] = middles;

    if (fits_solver(c.graph.order())) {
        const auto seq = path_sequence(c.graph);
        confirm(c, seq, spec.m, paths, "core graph");
        confirm(c, seq, spec.k, spec.p_k, "core graph");
        c.status = CheckStatus::checked;
    }
    return c;
}

LabeledConstruction two_value_graph(const ConstructionSpec& spec)
{
    spec.validate();
    check_order(spec.full_order(), "realisation graph");

    LabeledConstruction core = two_value_core(spec);
    if (spec.extra_paths() == 0) return core;

    LabeledConstruction c{Graph(spec.full_order()), core.annotations, CheckStatus::unchecked, {}};
    for (auto [u, v] : core.graph.edges()) c.graph.add_edge(u, v);
    const int anchor = spec.m - 1;
    VertexSet firsts;
    for (int j = 0; j < spec.extra_paths(); ++j) {
        const int first = spec.core_order() + j * spec.m;
        add_path(c.graph, first, spec.m);
        c.graph.add_edge(first, anchor);
        firsts.mask |= Mask{1} << first;
    }
    c.annotations["Q"] = firsts;

    if (!is_connected(c.graph)) throw ConstructionError("realisation graph is disconnected");
    if (fits_solver(c.graph.order())) {
        const auto seq = path_sequence(c.graph);
        confirm(c, seq, spec.m, spec.p_m, "realisation graph");
        confirm(c, seq, spec.k, spec.p_k, "realisation graph");
        c.status = CheckStatus::checked;
    }
    return c;
}

LabeledConstruction disjoint_paths(int s, int m)
{
    if (s < 1 || m < 1) throw InvalidArgument("need s >= 1 and m >= 1");
    check_order(s * m, "disjoint paths");
    LabeledConstruction c{Graph(s * m), {}, CheckStatus::unchecked, {}};
    for (int i = 0; i < s; ++i) add_path(c.graph, i * m, m);

    if (fits_solver(s * m)) {
        const auto seq = path_sequence(c.graph);
        confirm(c, seq, m, s, "disjoint paths");
        // Sequences are non-increasing, so psi_{m+1} = 0 settles every k > m.
        if (m < s * m) confirm(c, seq, m + 1, 0, "disjoint paths");
        c.status = CheckStatus::checked;
    }
    return c;
}

LabeledConstruction anchor_supergraph(const Graph& h, int k)
{
    if (k < 1) throw InvalidArgument("anchor path order must be positive");
    const int base = h.order();
    check_order(base * k, "anchor supergraph");

    LabeledConstruction c{Graph(base * k), {}, CheckStatus::unchecked, {}};
    for (auto [u, v] : h.edges()) c.graph.add_edge(u, v);
    // Path for v: v, then base + v(k-1), ..., base + v(k-1) + k-2.
    for (int v = 0; v < base; ++v) {
        const int tail = base + v * (k - 1);
        if (k > 1) c.graph.add_edge(v, tail);
        add_path(c.graph, tail, k - 1);
    }
    const VertexSet originals{low_bits(base)};
    c.annotations["W"] = originals;

    if (k > 1 && delete_vertices(c.graph, {c.graph.all() & ~originals.mask}) != h)
        throw ConstructionError("anchor supergraph: G[W] differs from h");
    if (fits_solver(c.graph.order())) {
        const auto table = longest_path_table(c.graph);
        confirm(c, path_sequence(table), k, base, "anchor supergraph");
        if (!is_k_path_cover(table, {originals, k}))
            throw ConstructionError("anchor supergraph: W is not a k-path vertex cover");
        c.status = CheckStatus::checked;
    }
    return c;
}

TwinPair twin_trees(int n)
{
    if (n < 7) throw InvalidArgument("twin trees need n >= 7");
    check_order(n, "twin trees");

    const PathSequence base_sequence({7, 2, 2, 1, 1, 0, 0});
    // Enumeration order is increasing canonical code, so the first two hits
    // are the lexicographically smallest pair.
    std::vector<Graph> trees;
    for (const Graph& g : enumerate_connected(7))
        if (is_tree(g) && path_sequence(g) == base_sequence) trees.push_back(g);
    if (trees.size() < 2)
        throw ConstructionError("twin trees: fewer than two trees on 7 vertices share " + base_sequence.str());
    const Graph& t1 = trees[0];
    const Graph& t2 = trees[1];

    if (n == 7) return {t1, t2, CheckStatus::checked, base_sequence};

    // Pendants at w keep the sequence only for some w; search the pairs and
    // verify on the largest order the solver accepts.
    const int check_n = std::min(n, solver_vertex_cap());
    const PathSequence target = pendant_twin_sequence(check_n);
    std::vector<std::optional<bool>> good1(7);
    std::vector<std::optional<bool>> good2(7);
    auto keeps = [&](const Graph& t, int w, std::optional<bool>& memo) {
        if (!memo) memo = path_sequence(attach_pendants(t, w, check_n - 7)) == target;
        return *memo;
    };
    for (int w1 = 0; w1 < 7; ++w1) {
        if (!keeps(t1, w1, good1[w1])) continue;
        for (int w2 = 0; w2 < 7; ++w2) {
            if (!keeps(t2, w2, good2[w2])) continue;
            Graph a = attach_pendants(t1, w1, n - 7);
            Graph b = attach_pendants(t2, w2, n - 7);
            if (tree_code(a) == tree_code(b)) continue;
            const bool exact = check_n == n;
            return {std::move(a), std::move(b), exact ? CheckStatus::checked : CheckStatus::unchecked,
                    exact ? std::optional<PathSequence>(target) : std::nullopt};
        }
    }
    throw ConstructionError("twin trees: no attachment vertices keep (n,2,2,1,1,0,...,0) for n=" + std::to_string(n));
}

std::optional<int> min_marked_on_paths(const Graph& g, VertexSet marked, int k)
{
    if (k < 1 || k > g.order()) throw InvalidArgument("path order out of range");
    int best = k + 1;
    std::function<void(int, Mask, int, int)> walk = [&](int v, Mask used, int length, int hits) {
        if (length == k) {
            best = std::min(best, hits);
            return;
        }
        for (Mask m = g.neighbours(v) & ~used; m != 0; m &= m - 1) {
            const int w = std::countr_zero(m);
            walk(w, used | (Mask{1} << w), length + 1, hits + (marked.contains(w) ? 1 : 0));
        }
    };
    for (int v = 0; v < g.order(); ++v) walk(v, Mask{1} << v, 1, marked.contains(v) ? 1 : 0);
    if (best > k) return std::nullopt;
    return best;
}

std::string tree_code(const Graph& tree)
{
    if (!is_tree(tree)) throw InvalidArgument("tree_code needs a tree");
    const int n = tree.order();
    if (n == 1) return "()";

    // Peel leaves layer by layer; one or two centres remain.
    std::vector<int> degree(n);
    Mask alive = tree.all();
    for (int v = 0; v < n; ++v) degree[v] = tree.degree(v);
    while (std::popcount(alive) > 2) {
        Mask leaves = 0;
        for (Mask m = alive; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (degree[v] <= 1) leaves |= Mask{1} << v;
        }
        for (Mask m = leaves; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            for (Mask nb = tree.neighbours(v) & alive; nb != 0; nb &= nb - 1) --degree[std::countr_zero(nb)];
        }
        alive &= ~leaves;
    }

    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (Mask m = tree.neighbours(v); m != 0; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (w != parent) kids.push_back(encode(w, v));
        }
        std::sort(kids.begin(), kids.end());
        std::string out = "(";
        for (const auto& s : kids) out += s;
        return out + ")";
    };

    const int c1 = std::countr_zero(alive);
    if (std::popcount(alive) == 1) return "C" + encode(c1, -1);
    const int c2 = std::countr_zero(alive & ~(Mask{1} << c1));
    auto left = encode(c1, c2);
    auto right = encode(c2, c1);
    if (right < left) std::swap(left, right);
    return "E" + left + right;
}

}  // namespace pathcover
