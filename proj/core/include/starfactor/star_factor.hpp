#pragma once

// Star-factors: spanning subgraphs in which every component is a star
// K_{1,t} with t >= 1 satellites. A graph with an isolated vertex has none;
// every other graph has at least one. The empty graph has exactly one (the
// empty factor).

#include <optional>
#include <vector>

#include "starfactor/graph.hpp"

namespace starfactor {

struct StarFactor {
    EdgeSet edges;
    // One center per star, ascending. Single-edge stars take the smaller
    // endpoint as center; larger stars have a structurally unique center.
    std::vector<int> centers;

    friend bool operator==(const StarFactor&, const StarFactor&) = default;
};

// True iff `edges` forms a star-factor of g. Throws std::invalid_argument
// if an edge is not present in g.
bool is_star_factor(const Graph& g, const EdgeSet& edges);

// Lazy stream over all star-factors of g in lexicographic order of their
// sorted edge lists. Duplicate-free. With max_star_size set, only factors
// whose stars have at most that many satellites are produced.
class StarFactorStream {
  public:
    explicit StarFactorStream(const Graph& g, std::optional<int> max_star_size = std::nullopt);

    std::optional<StarFactor> next();

  private:
    enum class VState : unsigned char { Un, K2, Cen, Sat };
    struct Frame {
        int j;      // next edge index to try
        int limit;  // largest edge index any uncovered vertex can still use
        int owner;  // edge added when this frame was pushed (-1 for root)
    };
    struct Saved {
        int vertex;
        VState state;
        int partner;
        int nsat;
    };

    bool addable(int e) const;
    void add(int e);
    void remove_last();
    int cover_limit() const;
    StarFactor make_factor() const;

    int n_ = 0;
    int bound_ = 0;  // max satellites per star (0 = unbounded)
    std::vector<Edge> edges_;
    std::vector<int> last_incident_;

    std::vector<VState> state_;
    std::vector<int> partner_;  // K2 partner or star center for satellites
    std::vector<int> nsat_;
    int uncovered_ = 0;

    std::vector<int> included_;
    std::vector<std::vector<Saved>> undo_;
    std::vector<Frame> stack_;
    bool primed_ = false;
    bool empty_emitted_ = false;
};

// Collects the whole stream (small graphs only).
std::vector<StarFactor> enumerate_star_factors(const Graph& g,
                                               std::optional<int> max_star_size = std::nullopt);

// True iff g has any star-factor: n = 0, or no isolated vertices.
// Agrees with stream non-emptiness.
bool has_star_factor(const Graph& g);

// True iff g has a star-factor whose stars all have at most max_star_size
// satellites. Throws std::invalid_argument if max_star_size < 1.
bool has_bounded_star_factor(const Graph& g, int max_star_size);

}  // namespace starfactor
