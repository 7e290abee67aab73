#pragma once

#include <vector>

#include "alphacrit/graph.hpp"

namespace alphacrit {

// Reference implementations by exhaustive subset scan over plain bit masks.
// Deliberately shares no code with the branch and bound solver so the two
// can check each other. Refuses graphs with more than 26 vertices.

int oracle_stability_number(const Graph& g);

// All maximum stable sets, in increasing order of their bit mask.
std::vector<std::vector<int>> oracle_all_maximum_stable_sets(const Graph& g);

}  // namespace alphacrit
