#pragma once

#include <string>
#include <vector>

#include "alphacrit/graph.hpp"

namespace alphacrit {

// Canonical form: the lexicographically smallest graph6 body over all
// relabelings, i.e. the minimum column-major upper-triangle bit string.
// Exponential in the worst case; intended for the sizes this library
// works at (census and composition outputs, tens of vertices).
std::string canonical_form(const Graph& g);

// perm[old] = new position under the canonical relabeling.
std::vector<int> canonical_permutation(const Graph& g);

Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace alphacrit
