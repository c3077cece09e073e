#pragma once

// Small simple-graph type (undirected, no loops, no multi-edges) plus the
// structural queries the rest of the toolkit is built on: degrees, girth,
// connectivity, leaves/stems, edge deletion.
//
// Vertices are 0..n-1 and n is capped at 62 so a neighborhood always fits in
// one 64-bit mask (also the single-byte graph6 size range).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starfactor {

// Unordered vertex pair, normalized to u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b);

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "u-v"

// Sorted, duplicate-free set of edges.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);
    EdgeSet(std::initializer_list<Edge> edges);

    bool contains(const Edge& e) const;
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

  private:
    std::vector<Edge> edges_;
};

// Length of a shortest cycle; forests have infinite girth.
class Girth {
  public:
    static Girth finite(int k);
    static Girth infinite() { return Girth{}; }

    bool is_finite() const { return length_.has_value(); }
    int length() const;  // throws std::logic_error when infinite

    // Infinite girth compares above every finite bound.
    bool at_least(int k) const { return !length_ || *length_ >= k; }
    bool equals(int k) const { return length_ && *length_ == k; }

    friend bool operator==(const Girth&, const Girth&) = default;

  private:
    std::optional<int> length_;
};

std::string to_string(const Girth& g);  // "3", "infinity", ...

class Graph {
  public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;       // the empty graph (n = 0)
    explicit Graph(int n);   // n isolated vertices
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // throws on loops / out-of-range

    std::uint64_t neighbor_mask(int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    std::vector<Edge> edges() const;  // lexicographic order

    // Copy with one extra vertex (index n) adjacent to the mask's bits.
    Graph with_vertex(std::uint64_t neighbor_mask) const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Structural queries. min/max degree are undefined on the empty graph and
// throw std::invalid_argument there.
int min_degree(const Graph& g);
int max_degree(const Graph& g);

// Shortest-cycle length via BFS from every vertex, O(n*m).
Girth girth(const Graph& g);

// The empty graph counts as connected.
bool is_connected(const Graph& g);

// Component id per vertex, numbered 0.. in order of first appearance.
std::vector<int> component_ids(const Graph& g);

// Vertex lists for each component, in the same order as component_ids.
std::vector<std::vector<int>> components(const Graph& g);

// Leaves are degree-1 vertices; stems are vertices adjacent to a leaf.
// Both lists are sorted ascending.
std::pair<std::vector<int>, std::vector<int>> leaves_and_stems(const Graph& g);

struct EdgeDeletion {
    Graph graph;                // same vertex set, edges removed
    std::vector<int> isolated;  // vertices left with degree 0, ascending
};

// Throws std::invalid_argument if some requested edge is not in g.
EdgeDeletion delete_edges(const Graph& g, const EdgeSet& f);

}  // namespace starfactor
