#pragma once

// Uniformity: a graph is uniform when all of its star-factors have the same
// total weight. The default weighting is constant 1, so a factor's weight is
// its edge count. Graphs without any star-factor count as (vacuously)
// uniform but are flagged via factor_exists.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "starfactor/graph.hpp"
#include "starfactor/rational.hpp"
#include "starfactor/star_factor.hpp"

namespace starfactor {

// Strictly positive rational value per edge of a host graph, addressed by
// edge. Values are aligned with the host's lexicographic edge order.
class Weighting {
  public:
    Weighting(const Graph& g, std::vector<Rat> values);
    static Weighting constant(const Graph& g, const Rat& value = Rat(1));

    // Throws std::out_of_range when e is not a weighted edge.
    const Rat& operator[](const Edge& e) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Rat>& values() const { return values_; }

  private:
    std::vector<Edge> edges_;
    std::vector<Rat> values_;
};

// Sum of the factor's edge weights. Throws std::out_of_range if the
// weighting is missing one of the factor's edges.
Rat weight_of(const StarFactor& f, const Weighting& w);

struct UniformityReport {
    bool factor_exists = false;
    bool uniform = true;
    // Distinct weights observed before enumeration stopped, ascending. With
    // full=false this may be a proper subset of the true spectrum (it has 2
    // entries as soon as non-uniformity is witnessed); uniform <=> size <= 1.
    std::vector<Rat> spectrum;
    // Present only when enumeration ran to completion.
    std::optional<std::uint64_t> factor_count;
    // Two factors of different weight; present iff uniform is false.
    std::optional<std::pair<StarFactor, StarFactor>> witness;
};

struct UniformityOptions {
    bool full = false;  // enumerate everything even after non-uniformity is known
};

// Uniformity under the constant-1 weighting.
UniformityReport is_uniform(const Graph& g, UniformityOptions options = {});

// Uniformity under an arbitrary weighting; early exit on the first witness.
std::pair<bool, std::optional<std::pair<StarFactor, StarFactor>>> is_uniform_weighted(
    const Graph& g, const Weighting& w);

// All distinct factor weights under w, ascending (full enumeration).
std::vector<Rat> weight_spectrum(const Graph& g, const Weighting& w);

// Triangle with two degree-2 vertices whose third vertex is a stem: such a
// configuration rules uniformity out (in graphs that have a star-factor;
// both detectors are vacuous on graphs without one).
struct Lemma2Witness {
    std::array<int, 3> triangle;  // ascending
    int stem;                     // the triangle vertex adjacent to a leaf
    int leaf;
};
std::optional<Lemma2Witness> lemma2_witness(const Graph& g);

// Triangle with exactly one vertex of degree >= 3 where that vertex has an
// off-triangle neighbor that is not a stem: also rules uniformity out.
struct Lemma3Witness {
    std::array<int, 3> triangle;  // ascending
    int branch;                   // the unique triangle vertex of degree >= 3
    int neighbor;                 // its off-triangle non-stem neighbor
};
std::optional<Lemma3Witness> lemma3_violation(const Graph& g);

}  // namespace starfactor
