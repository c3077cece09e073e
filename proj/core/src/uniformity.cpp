#include "starfactor/uniformity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace starfactor {

Weighting::Weighting(const Graph& g, std::vector<Rat> values)
    : edges_(g.edges()), values_(std::move(values)) {
    if (values_.size() != edges_.size())
        throw std::invalid_argument("weighting needs one value per edge");
    for (const Rat& v : values_)
        if (v <= 0) throw std::invalid_argument("weights must be strictly positive");
}

Weighting Weighting::constant(const Graph& g, const Rat& value) {
    return Weighting(g, std::vector<Rat>(static_cast<std::size_t>(g.edge_count()), value));
}

const Rat& Weighting::operator[](const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e))
        throw std::out_of_range("weighting has no value for edge " + to_string(e));
    return values_[static_cast<std::size_t>(it - edges_.begin())];
}

Rat weight_of(const StarFactor& f, const Weighting& w) {
    Rat total = 0;
    for (const Edge& e : f.edges) total += w[e];
    return total;
}

namespace {

// Shared enumeration loop: constant-1 weights are just edge counts, so the
// generic weighted walk covers both entry points.
UniformityReport scan(const Graph& g, const Weighting* w, bool full) {
    UniformityReport report;
    StarFactorStream stream(g);
    std::uint64_t count = 0;
    std::optional<StarFactor> first;  // representative of spectrum.front()-ish; first seen
    while (auto f = stream.next()) {
        ++count;
        report.factor_exists = true;
        Rat weight = w ? weight_of(*f, *w) : Rat(f->edges.size());
        auto it = std::lower_bound(report.spectrum.begin(), report.spectrum.end(), weight);
        bool fresh = it == report.spectrum.end() || *it != weight;
        if (fresh) report.spectrum.insert(it, weight);
        if (!first) first = *f;
        if (fresh && report.spectrum.size() == 2) {
            report.uniform = false;
            report.witness = std::make_pair(*first, *f);
            if (!full) return report;  // factor_count stays absent: truncated
        }
    }
    report.factor_count = count;
    return report;
}

}  // namespace

UniformityReport is_uniform(const Graph& g, UniformityOptions options) {
    return scan(g, nullptr, options.full);
}

std::pair<bool, std::optional<std::pair<StarFactor, StarFactor>>> is_uniform_weighted(
    const Graph& g, const Weighting& w) {
    UniformityReport r = scan(g, &w, false);
    return {r.uniform, r.witness};
}

std::vector<Rat> weight_spectrum(const Graph& g, const Weighting& w) {
    return scan(g, &w, true).spectrum;
}

namespace {

// Smallest-index leaf adjacent to v, or -1.
int leaf_neighbor(const Graph& g, int v) {
    for (int u : g.neighbors(v))
        if (g.degree(u) == 1) return u;
    return -1;
}

template <typename Visit>
void for_each_triangle(const Graph& g, Visit visit) {
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            std::uint64_t common = g.neighbor_mask(i) & g.neighbor_mask(j);
            common >>= (j + 1);
            std::uint64_t m = common << (j + 1);
            while (m) {
                int k = std::countr_zero(m);
                m &= m - 1;
                if (visit(i, j, k)) return;
            }
        }
}

}  // namespace

std::optional<Lemma2Witness> lemma2_witness(const Graph& g) {
    std::optional<Lemma2Witness> out;
    for_each_triangle(g, [&](int i, int j, int k) {
        std::array<int, 3> tri{i, j, k};
        for (int t = 0; t < 3; ++t) {
            int third = tri[t];
            int a = tri[(t + 1) % 3], b = tri[(t + 2) % 3];
            if (g.degree(a) != 2 || g.degree(b) != 2) continue;
            int leaf = leaf_neighbor(g, third);
            if (leaf >= 0) {
                out = Lemma2Witness{tri, third, leaf};
                return true;
            }
        }
        return false;
    });
    return out;
}

std::optional<Lemma3Witness> lemma3_violation(const Graph& g) {
    std::optional<Lemma3Witness> out;
    for_each_triangle(g, [&](int i, int j, int k) {
        std::array<int, 3> tri{i, j, k};
        int branch = -1, high = 0;
        for (int v : tri)
            if (g.degree(v) >= 3) {
                ++high;
                branch = v;
            }
        if (high != 1) return false;
        for (int x : g.neighbors(branch)) {
            if (x == tri[0] || x == tri[1] || x == tri[2]) continue;
            if (leaf_neighbor(g, x) < 0) {
                out = Lemma3Witness{tri, branch, x};
                return true;
            }
        }
        return false;
    });
    return out;
}

}  // namespace starfactor
