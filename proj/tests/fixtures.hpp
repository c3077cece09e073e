#pragma once

// Shared graph constructions for the test suites.

#include <stdexcept>
#include <vector>

#include "starfactor/graph.hpp"

namespace fixtures {

using starfactor::Edge;
using starfactor::Graph;

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

inline Graph path(int n) {  // n vertices, n-1 edges
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, e);
}

inline Graph star(int satellites) {  // K_{1,satellites}, center 0
    std::vector<Edge> e;
    for (int i = 1; i <= satellites; ++i) e.push_back({0, i});
    return Graph(satellites + 1, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});          // outer cycle
        e.push_back({i, i + 5});                // spokes
        e.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return Graph(10, e);
}

// Triangle 0,1,2 plus quadrangle 0-1-3-4 sharing the edge 0-1.
inline Graph house() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}, {0, 4}});
}

// Book over the spine edge 0-1 with one triangular page (vertex 2) and k-2
// quadrangular pages: for each i, x_i adjacent to 1 and y_i adjacent to 0
// and x_i. k = 3 is the house; vertices 0 and 1 have degree k, n = 2k - 1.
inline Graph mixed_book(int k) {
    if (k < 3) throw std::invalid_argument("mixed_book: need k >= 3");
    Graph g(3 + 2 * (k - 2));
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for (int i = 0; i < k - 2; ++i) {
        const int x = 3 + 2 * i;
        const int y = 4 + 2 * i;
        g.add_edge(1, x);
        g.add_edge(x, y);
        g.add_edge(0, y);
    }
    return g;
}

// Triangle 0,1,2 with deg(0)=deg(1)=2 and 2 adjacent to the leaf 3: the
// smallest configuration the stem-triangle detector must find.
inline Graph triangle_with_pendant() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

// Triangle 0,1,2; only vertex 2 has degree >= 3; its off-triangle neighbor 3
// is NOT a stem (3's other neighbor 4 has degree 2, not 1).
inline Graph triangle_branch_nonstem() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
}

// Triangle 0,1,2; vertex 2 branches to 3, and 3 IS a stem (leaf 4).
inline Graph triangle_branch_stem() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(a.vertex_count() + e.u, a.vertex_count() + e.v);
    return g;
}

}  // namespace fixtures
