#pragma once

// graph6 encoding (single-byte size header, n <= 62) and a whitespace
// edge-list format.
//
// graph6 layout: byte 0 is n+63; the upper triangle of the adjacency matrix
// follows as bits x(0,1), x(0,2), x(1,2), x(0,3), ... (column by column),
// packed big-endian into 6-bit groups, each group emitted as value+63.
// Trailing padding bits are zero on output; lenient parsing (the default)
// ignores nonzero padding, strict parsing rejects it.

#include <string>
#include <string_view>

#include "starfactor/graph.hpp"

namespace starfactor {

struct Graph6Options {
    bool strict = false;  // reject nonzero padding bits
};

// Parses one graph6 line. An optional leading ">>graph6<<" marker is
// stripped. Throws std::invalid_argument on malformed input (bad header
// byte, byte outside 63..126, truncated or overlong payload, nonzero
// padding in strict mode).
Graph parse_graph6(std::string_view line, Graph6Options options = {});

std::string to_graph6(const Graph& g);

// Edge list: whitespace-separated nonnegative integer pairs, one edge per
// line; an optional first line "n <count>" pins the vertex count (it must
// cover every label used). Without it, the vertex set is 0..max label seen.
// Blank lines and '#' comment lines are skipped; duplicate edges collapse.
// Throws std::invalid_argument on loops, malformed tokens, or labels
// outside a declared vertex count.
Graph parse_edge_list(std::string_view text);

}  // namespace starfactor
