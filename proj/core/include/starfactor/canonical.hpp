#pragma once

// Canonical forms and isomorphism testing.
//
// The canonical form of a graph is the lexicographically smallest adjacency
// bit string (graph6 bit order) reachable through a search tree of
// degree-refined ordered partitions: refine, individualize a vertex of the
// first non-singleton cell, repeat. Branches are pruned by prefix comparison
// against the best leaf so far and by orbits of discovered automorphisms.
// Equal canonical keys <=> isomorphic graphs.
//
// Intended for n <= 16; correct but increasingly slow beyond that.

#include <string>
#include <vector>

#include "starfactor/graph.hpp"

namespace starfactor {

struct CanonicalForm {
    // graph6 encoding of the canonically relabeled graph.
    std::string key;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Canonical labeling as a position -> original-vertex map: position i of the
// relabeled graph hosts vertex labeling[i] of g.
std::vector<int> canonical_labeling(const Graph& g);

// g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace starfactor

template <>
struct std::hash<starfactor::CanonicalForm> {
    std::size_t operator()(const starfactor::CanonicalForm& c) const noexcept {
        return std::hash<std::string>{}(c.key);
    }
};
