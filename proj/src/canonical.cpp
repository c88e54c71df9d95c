#include "pathcover/canonical.hpp"

#include <array>

#include "pathcover/error.hpp"

namespace pathcover {

namespace {

constexpr int code_length(int n) { return n * (n - 1) / 2; }

void check_order(const Graph& g)
{
    if (g.order() > kMaxCanonicalVertices)
        throw CapacityError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) +
                            " vertices, got " + std::to_string(g.order()));
}

// Branch and bound over partial relabelings. Position p is filled with an
// unused vertex; that appends column p, i.e. the bits (q, p) for q < p, to the
// code prefix. A branch dies as soon as its prefix exceeds the bound's prefix.
class MinimalCodeSearch {
public:
    enum class Mode { minimise, refute };

    MinimalCodeSearch(const Graph& g, Mode mode)
        : g_(g), n_(g.order()), total_(code_length(g.order())), mode_(mode), best_(labeled_code(g).code)
    {
    }

    // minimise: returns the minimal code. refute: returns a code smaller than
    // the labeled one if one exists, otherwise the labeled code.
    std::uint64_t run()
    {
        extend(0, 0, 0, 0);
        return best_;
    }

    bool improved() const { return improved_; }

private:
    bool extend(int position, Mask used, std::uint64_t prefix, int length)
    {
        if (position == n_) {
            if (prefix < best_) {
                best_ = prefix;
                improved_ = true;
                if (mode_ == Mode::refute) return true;
            }
            return false;
        }
        for (int v = 0; v < n_; ++v) {
            if ((used >> v) & 1U) continue;
            std::uint64_t column = 0;
            const Mask nb = g_.neighbours(v);
            for (int q = 0; q < position; ++q) column = (column << 1) | ((nb >> order_[q]) & 1U);

            const std::uint64_t next = (prefix << position) | column;
            const int next_length = length + position;
            const std::uint64_t bound = best_ >> (total_ - next_length);
            if (next > bound) continue;
            if (mode_ == Mode::refute && next < bound) {
                improved_ = true;
                return true;
            }
            order_[position] = v;
            if (extend(position + 1, used | (Mask{1} << v), next, next_length)) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int total_;
    Mode mode_;
    std::uint64_t best_;
    bool improved_ = false;
    std::array<int, kMaxCanonicalVertices> order_{};
};

}  // namespace

CanonicalForm labeled_code(const Graph& g)
{
    check_order(g);
    std::uint64_t code = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
    return {g.order(), code};
}

CanonicalForm canonical_form(const Graph& g)
{
    check_order(g);
    MinimalCodeSearch search(g, MinimalCodeSearch::Mode::minimise);
    return {g.order(), search.run()};
}

bool is_canonically_labeled(const Graph& g)
{
    check_order(g);
    MinimalCodeSearch search(g, MinimalCodeSearch::Mode::refute);
    search.run();
    return !search.improved();
}

Graph graph_from_code(const CanonicalForm& form)
{
    if (form.n < 1 || form.n > kMaxCanonicalVertices) throw InvalidArgument("code order out of range");
    Graph g(form.n);
    int bit = code_length(form.n) - 1;
    for (int j = 1; j < form.n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((form.code >> bit) & 1U) g.add_edge(i, j);
    return g;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace pathcover
