#include "starfactor/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

#include "starfactor/graph6.hpp"

namespace starfactor {

namespace {

constexpr int kMaxN = Graph::kMaxVertices;
constexpr int kMaxGenerators = 64;

// Ordered partition of 0..n-1: perm holds the vertices position by position,
// cstart[pos] is the starting position of the cell containing that position.
struct Part {
    std::array<int, kMaxN> perm;
    std::array<int, kMaxN> cstart;
};

struct Searcher {
    int n = 0;
    std::array<std::uint64_t, kMaxN> adj{};
    int words = 0;  // packed words per bit string

    std::vector<std::uint64_t> best;       // best leaf bit string so far
    std::array<int, kMaxN> best_perm{};    // its labeling
    bool have_best = false;

    std::vector<std::array<int, kMaxN>> generators;  // discovered automorphisms
    std::array<int, kMaxN> path{};                   // individualized vertices
    int depth = 0;

    std::vector<std::uint64_t> scratch;

    explicit Searcher(const Graph& g) {
        n = g.vertex_count();
        for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
        int bits = n * (n - 1) / 2;
        words = (bits + 63) / 64;
        best.assign(static_cast<std::size_t>(words), 0);
        scratch.assign(static_cast<std::size_t>(words), 0);
    }

    // Bits of the relabeled upper triangle for the first k fixed positions,
    // packed big-endian (bit 0 at the top of word 0). Returns the bit count.
    int build_bits(const std::array<int, kMaxN>& perm, int k, std::vector<std::uint64_t>& out) const {
        std::fill(out.begin(), out.end(), 0);
        int bit = 0;
        for (int col = 1; col < k; ++col) {
            std::uint64_t colmask = adj[perm[col]];
            for (int row = 0; row < col; ++row, ++bit) {
                if ((colmask >> perm[row]) & 1u)
                    out[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
            }
        }
        return bit;
    }

    // Lexicographic comparison of the first `bits` bits against best.
    int compare_prefix(const std::vector<std::uint64_t>& cand, int bits) const {
        int full = bits >> 6, rem = bits & 63;
        for (int w = 0; w < full; ++w) {
            if (cand[w] != best[w]) return cand[w] < best[w] ? -1 : 1;
        }
        if (rem) {
            std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
            std::uint64_t a = cand[full] & mask, b = best[full] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    // Equitable refinement: split cells by neighbor counts into splitter
    // sets until stable. Subcells are ordered by ascending count, which is
    // isomorphism-invariant, so the resulting cell order is too.
    void refine(Part& p, std::vector<std::uint64_t>& worklist) const {
        std::array<int, kMaxN> count{};
        while (!worklist.empty()) {
            std::uint64_t splitter = worklist.back();
            worklist.pop_back();
            int pos = 0;
            while (pos < n) {
                int start = p.cstart[pos];
                int end = start + 1;
                while (end < n && p.cstart[end] == start) ++end;
                if (end - start > 1) {
                    int first = std::popcount(adj[p.perm[start]] & splitter);
                    bool uniform = true;
                    for (int i = start; i < end; ++i) {
                        count[p.perm[i]] = std::popcount(adj[p.perm[i]] & splitter);
                        if (count[p.perm[i]] != first) uniform = false;
                    }
                    if (!uniform) {
                        std::sort(p.perm.begin() + start, p.perm.begin() + end,
                                  [&](int a, int b) {
                                      return count[a] != count[b] ? count[a] < count[b] : a < b;
                                  });
                        int sub = start;
                        for (int i = start; i < end; ++i) {
                            if (i > start && count[p.perm[i]] != count[p.perm[i - 1]]) sub = i;
                            p.cstart[i] = sub;
                        }
                        // enqueue each new subcell as a splitter
                        int s = start;
                        while (s < end) {
                            int e = s + 1;
                            while (e < end && p.cstart[e] == s) ++e;
                            std::uint64_t m = 0;
                            for (int i = s; i < e; ++i) m |= std::uint64_t{1} << p.perm[i];
                            worklist.push_back(m);
                            s = e;
                        }
                    }
                }
                pos = end;
            }
        }
    }

    int leading_singletons(const Part& p) const {
        int k = 0;
        while (k < n && p.cstart[k] == k && (k + 1 >= n || p.cstart[k + 1] == k + 1)) ++k;
        return k;
    }

    int first_nonsingleton(const Part& p) const {
        int pos = 0;
        while (pos < n) {
            int end = pos + 1;
            while (end < n && p.cstart[end] == pos) ++end;
            if (end - pos > 1) return pos;
            pos = end;
        }
        return -1;
    }

    void record_leaf(const Part& p) {
        build_bits(p.perm, n, scratch);
        int cmp = have_best ? compare_prefix(scratch, n * (n - 1) / 2) : -1;
        if (cmp < 0) {
            best = scratch;
            std::copy(p.perm.begin(), p.perm.begin() + n, best_perm.begin());
            have_best = true;
        } else if (cmp == 0 && static_cast<int>(generators.size()) < kMaxGenerators) {
            // Two labelings with the same image compose to an automorphism.
            std::array<int, kMaxN> sigma{};
            bool identity = true;
            for (int i = 0; i < n; ++i) {
                sigma[best_perm[i]] = p.perm[i];
                if (best_perm[i] != p.perm[i]) identity = false;
            }
            if (!identity) generators.push_back(sigma);
        }
    }

    struct UnionFind {
        std::array<int, kMaxN> up;
        void init(int n) {
            for (int i = 0; i < n; ++i) up[i] = i;
        }
        int find(int x) {
            while (up[x] != x) x = up[x] = up[up[x]];
            return x;
        }
        void unite(int a, int b) { up[find(a)] = find(b); }
    };

    void descend(Part p, std::vector<std::uint64_t> worklist) {
        refine(p, worklist);

        if (have_best) {
            int k = leading_singletons(p);
            if (k >= 2) {
                int bits = build_bits(p.perm, k, scratch);
                if (compare_prefix(scratch, bits) > 0) return;  // subtree can't win
            }
        }

        int cell = first_nonsingleton(p);
        if (cell < 0) {
            record_leaf(p);
            return;
        }
        int end = cell + 1;
        while (end < n && p.cstart[end] == cell) ++end;

        // candidates ascending; skip vertices in the orbit of an earlier
        // candidate under generators fixing the individualized path
        std::array<int, kMaxN> cand{};
        int m = 0;
        for (int i = cell; i < end; ++i) cand[m++] = p.perm[i];
        std::sort(cand.begin(), cand.begin() + m);

        UnionFind uf;
        uf.init(n);

        for (int ci = 0; ci < m; ++ci) {
            int v = cand[ci];
            if (ci > 0) {
                // fold in any generators fixing the path (recomputed lazily:
                // new generators may appear while this node's children run)
                for (const auto& sigma : generators) {
                    bool fixes = true;
                    for (int d = 0; d < depth && fixes; ++d) fixes = sigma[path[d]] == path[d];
                    if (fixes)
                        for (int x = 0; x < n; ++x) uf.unite(x, sigma[x]);
                }
                bool skip = false;
                for (int cj = 0; cj < ci && !skip; ++cj) skip = uf.find(cand[cj]) == uf.find(v);
                if (skip) continue;
            }

            Part child = p;
            // move v to the front of its cell as a singleton
            int at = cell;
            while (child.perm[at] != v) ++at;
            std::swap(child.perm[at], child.perm[cell]);
            for (int i = cell + 1; i < end; ++i) child.cstart[i] = cell + 1;

            path[depth++] = v;
            descend(child, {std::uint64_t{1} << v});
            --depth;
        }
    }

    void run() {
        if (n == 0) {
            have_best = true;
            return;
        }
        Part root;
        for (int i = 0; i < n; ++i) {
            root.perm[i] = i;
            root.cstart[i] = 0;
        }
        std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        descend(root, {all});
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    Searcher s(g);
    s.run();
    return std::vector<int>(s.best_perm.begin(), s.best_perm.begin() + g.vertex_count());
}

Graph canonical_graph(const Graph& g) {
    std::vector<int> lab = canonical_labeling(g);
    const int n = g.vertex_count();
    Graph h(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(lab[i], lab[j])) h.add_edge(i, j);
    return h;
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{to_graph6(canonical_graph(g))}; }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degrees = [](const Graph& g) {
        std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace starfactor
