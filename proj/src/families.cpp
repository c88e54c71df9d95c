#include "pathcover/families.hpp"

#include <algorithm>
#include <string>

#include "pathcover/error.hpp"

namespace pathcover {

namespace {

void check_k(int n, int k)
{
    if (n < 1) throw InvalidArgument("family order must be positive, got " + std::to_string(n));
    if (k < 1 || k > n) throw InvalidArgument("k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
}

}  // namespace

int psi_path(int n, int k)
{
    check_k(n, k);
    return n / k;
}

int psi_cycle(int n, int k)
{
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    check_k(n, k);
    return (n + k - 1) / k;
}

int psi_complete(int n, int k)
{
    check_k(n, k);
    return n - k + 1;
}

int psi_complete_bipartite(int a, int b, int k)
{
    if (a < 1 || b < 1) throw InvalidArgument("K_{a,b} needs a, b >= 1");
    check_k(a + b, k);
    if (k == 1) return a + b;
    const int small = std::min(a, b);
    if (k <= 2 * small + 1) return small - k / 2 + 1;
    return 0;
}

Graph build_path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph build_cycle(int n)
{
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    Graph g = build_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph build_complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph build_complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1) throw InvalidArgument("K_{a,b} needs a, b >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace pathcover
