#include "pathcover/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pathcover/error.hpp"

namespace pathcover {

namespace {

class PathSearch {
public:
    PathSearch(const Graph& g, const std::vector<bool>& removed) : removed_(removed), lists_(g.order())
    {
        for (auto [u, v] : g.edges()) {
            lists_[u].push_back(v);
            lists_[v].push_back(u);
        }
    }

    // Longest path order, stopping early once `target` vertices are reached.
    int longest(int target)
    {
        best_ = 0;
        target_ = target;
        std::vector<bool> on_path(lists_.size(), false);
        for (std::size_t v = 0; v < lists_.size() && best_ < target_; ++v) {
            if (removed_[v]) continue;
            on_path[v] = true;
            walk(static_cast<int>(v), 1, on_path);
            on_path[v] = false;
        }
        return best_;
    }

private:
    void walk(int v, int length, std::vector<bool>& on_path)
    {
        best_ = std::max(best_, length);
        if (best_ >= target_) return;
        for (int w : lists_[v]) {
            if (removed_[w] || on_path[w]) continue;
            on_path[w] = true;
            walk(w, length + 1, on_path);
            on_path[w] = false;
            if (best_ >= target_) return;
        }
    }

    const std::vector<bool>& removed_;
    std::vector<std::vector<int>> lists_;
    int best_ = 0;
    int target_ = 0;
};

void check_oracle_order(const Graph& g)
{
    if (g.order() > kMaxOracleVertices)
        throw CapacityError("brute-force oracle is capped at " + std::to_string(kMaxOracleVertices) + " vertices");
}

}  // namespace

int brute_force_longest_path(const Graph& g, VertexSet removed)
{
    check_oracle_order(g);
    std::vector<bool> gone(g.order());
    for (int v = 0; v < g.order(); ++v) gone[v] = removed.contains(v);
    PathSearch search(g, gone);
    return search.longest(g.order() + 1);
}

int brute_force_psi_k(const Graph& g, int k)
{
    check_oracle_order(g);
    const int n = g.order();
    if (k < 1 || k > n) throw InvalidArgument("path order k=" + std::to_string(k) + " outside 1.." + std::to_string(n));

    for (int size = 0; size <= n; ++size) {
        // Walk all size-subsets as sorted selection vectors.
        std::vector<bool> chosen(n, false);
        std::fill(chosen.end() - size, chosen.end(), true);
        do {
            PathSearch search(g, chosen);
            if (search.longest(k) < k) return size;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return n;
}

}  // namespace pathcover
