#include "starfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace starfactor {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ: " + std::to_string(a));
    if (a < 0 || b < 0) throw std::invalid_argument("negative vertex label in edge");
}

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Girth Girth::finite(int k) {
    if (k < 3) throw std::invalid_argument("cycle length below 3");
    Girth g;
    g.length_ = k;
    return g;
}

int Girth::length() const {
    if (!length_) throw std::logic_error("infinite girth has no length");
    return *length_;
}

std::string to_string(const Girth& g) {
    return g.is_finite() ? std::to_string(g.length()) : std::string("infinity");
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
    std::uint64_t m = neighbor_mask(v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        int u = std::countr_zero(m);
        out.push_back(u);
        m &= m - 1;
    }
    return out;
}

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = adj_[u] >> (u + 1) << (u + 1);  // neighbors above u
        while (m) {
            int v = std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;  // already lexicographic
}

Graph Graph::with_vertex(std::uint64_t neighbor_mask) const {
    Graph h(n_ + 1);
    h.adj_ = adj_;
    h.adj_.push_back(0);
    if (neighbor_mask >> n_)
        throw std::invalid_argument("neighbor mask references missing vertices");
    std::uint64_t m = neighbor_mask;
    while (m) {
        int u = std::countr_zero(m);
        h.add_edge(u, n_);
        m &= m - 1;
    }
    return h;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("min_degree of the empty graph");
    int best = Graph::kMaxVertices + 1;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("max_degree of the empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Girth girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;  // -1: none found yet
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            // Cycles through `root` at depth d have length >= 2d+1; stop early.
            if (best != -1 && 2 * dist[x] + 1 >= best) break;
            std::uint64_t m = g.neighbor_mask(x);
            while (m) {
                int y = std::countr_zero(m);
                m &= m - 1;
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best == -1 ? Girth::infinite() : Girth::finite(best);
}

std::vector<int> component_ids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> id(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (id[s] != -1) continue;
        id[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            std::uint64_t m = g.neighbor_mask(x);
            while (m) {
                int y = std::countr_zero(m);
                m &= m - 1;
                if (id[y] == -1) {
                    id[y] = next;
                    q.push(y);
                }
            }
        }
        ++next;
    }
    return id;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> id = component_ids(g);
    int count = id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (int v = 0; v < g.vertex_count(); ++v) out[id[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;  // by convention
    std::vector<int> id = component_ids(g);
    return std::all_of(id.begin(), id.end(), [](int c) { return c == 0; });
}

std::pair<std::vector<int>, std::vector<int>> leaves_and_stems(const Graph& g) {
    std::vector<int> leaves, stems;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v)) {
            if (g.degree(u) == 1) {
                stems.push_back(v);
                break;
            }
        }
    }
    return {std::move(leaves), std::move(stems)};
}

EdgeDeletion delete_edges(const Graph& g, const EdgeSet& f) {
    std::vector<Edge> keep;
    for (const Edge& e : f)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("cannot delete absent edge " + to_string(e));
    for (const Edge& e : g.edges())
        if (!f.contains(e)) keep.push_back(e);
    EdgeDeletion out{Graph(g.vertex_count(), keep), {}};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (out.graph.degree(v) == 0) out.isolated.push_back(v);
    return out;
}

}  // namespace starfactor
