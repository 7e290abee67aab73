#pragma once

#include <string>

#include "alphacrit/graph.hpp"

namespace alphacrit {

// Standard graph6 text encoding: a size header followed by the upper triangle
// of the adjacency matrix in column-major order, packed MSB-first into 6-bit
// groups offset by 63. Parsing is strict: the string must decode to exactly
// one graph with no trailing bytes, all characters in [63,126], and padding
// bits zero. Leading and trailing ASCII whitespace is tolerated.
Graph parse_graph6(const std::string& text);

std::string to_graph6(const Graph& g);

}  // namespace alphacrit
