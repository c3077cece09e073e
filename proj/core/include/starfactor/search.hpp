#pragma once

// Isomorph-free graph generation and the uniformity census.
//
// Generation is by vertex augmentation: every (k-1)-vertex representative is
// extended by one new vertex attached to each admissible neighborhood
// subset, and a candidate survives iff its canonical key is new at level k.
// With a connectivity requirement the subsets are the nonempty ones (levels
// are then exactly the connected classes; complete because every connected
// graph has a non-cut vertex). Without it the empty subset is allowed too.
// A girth floor above 3 prunes candidates level by level (short cycles never
// disappear when vertices are added); all other constraints are checked only
// on emission.
//
// Levels are deduplicated in hash stripes (safe under multiple workers) and
// sorted before use, so results and any serialized output are deterministic
// regardless of worker count. Practical bound: n_max <= 10.

#include <cstdint>
#include <optional>
#include <vector>

#include "starfactor/graph.hpp"
#include "starfactor/uniformity.hpp"

namespace starfactor {

struct Constraints {
    int n = 0;  // exact vertex count for enumerate_graphs (census ignores it)
    int min_degree = 0;
    std::optional<int> girth_exact;  // mutually exclusive with girth_min
    std::optional<int> girth_min;
    bool connected = true;
};

// All isomorphism classes with exactly c.n vertices satisfying c, as
// canonical representatives sorted by canonical key.
std::vector<Graph> enumerate_graphs(const Constraints& c, int jobs = 1);

struct CensusOptions {
    int jobs = 1;
    // Reject non-uniform graphs via the lemma detectors before enumerating
    // factors. Never promotes a graph to uniform, only skips doomed
    // enumerations; off by default so enumeration stays the sole arbiter.
    bool prune_lemmas = false;
    bool full_reports = false;  // full enumeration in each report
};

struct CensusEntry {
    Graph graph;  // canonical representative
    UniformityReport report;
};

// Every isomorphism class with 1 <= n <= n_max satisfying c (c.n ignored)
// whose uniformity check passes, ordered by (n, canonical key).
std::vector<CensusEntry> census_uniform(int n_max, const Constraints& c, CensusOptions options = {});

}  // namespace starfactor
