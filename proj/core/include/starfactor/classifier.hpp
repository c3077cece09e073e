#pragma once

// Membership classification for the family of graphs whose star-factors all
// have equal weight, specialized along two characterization results:
//
//   * connected, min degree >= 2, girth >= 5: member iff isomorphic to the
//     5-cycle or the 7-cycle;
//   * connected, min degree >= 2, girth exactly 3: member iff isomorphic to
//     one of finitely many small graphs. That list is not hard-coded; it is
//     supplied as a catalog, normally produced by census_uniform and
//     validated with verify_catalog.
//
// Everything else (leaves present, girth 4, or no usable catalog) falls back
// to exhaustive factor enumeration. Disconnected inputs are classified per
// component: the graph is a member iff every component is.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starfactor/graph.hpp"
#include "starfactor/star_factor.hpp"

namespace starfactor {

struct Catalog {
    // Members for the girth-3 slice of the characterization. Empty means
    // "no catalog available" and classify falls back to enumeration there.
    std::vector<Graph> girth3;
    // Members for the girth >= 5 slice; defaults to the two cycles.
    std::vector<Graph> girth5plus;

    Catalog();
    static Catalog with_girth3(std::vector<Graph> members);
};

// Reads graph6 lines ('#' comments and blank lines ignored) into the girth-3
// slice; the girth >= 5 slice keeps its defaults. Throws std::invalid_argument
// on malformed lines.
Catalog load_catalog(std::istream& in);

// Writes the girth-3 slice as graph6 lines with '#' header comments, the same
// format census output uses.
void save_catalog(std::ostream& out, const Catalog& catalog);

struct CatalogVerification {
    bool ok = true;
    std::vector<std::string> issues;  // human-readable, one per failure
};

// Checks every member: connected, min degree >= 2, girth matching its slice,
// uniform weights over all star-factors (by full enumeration), pairwise
// non-isomorphic within each slice; the girth-3 slice, if nonempty, must
// contain the triangle.
CatalogVerification verify_catalog(const Catalog& catalog);

enum class MembershipStatus { InU, NotInU, NoFactor };
enum class Method { Theorem1, Theorem2Catalog, BruteForce };
enum class Scope { InsideCharacterization, OutsideCharacterization };

struct Classification {
    MembershipStatus status = MembershipStatus::InU;
    // How the decision was reached. Disconnected inputs always report
    // BruteForce: the characterizations speak only about connected graphs,
    // even when individual components were decided by one of them.
    Method method = Method::BruteForce;
    // Inside iff every component has min degree >= 2 and girth 3 or >= 5
    // (infinite included) -- the territory the characterizations cover.
    Scope scope = Scope::OutsideCharacterization;
    // Two star-factors of different weight; present iff status is NotInU.
    std::optional<std::pair<StarFactor, StarFactor>> witness;
};

Classification classify(const Graph& g, const Catalog& catalog);
Classification classify(const Graph& g);  // enumeration-only, no catalog

std::string to_string(MembershipStatus status);
std::string to_string(Method method);
std::string to_string(Scope scope);

}  // namespace starfactor
