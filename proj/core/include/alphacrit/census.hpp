#pragma once

#include <string>
#include <vector>

#include "alphacrit/graph.hpp"

namespace alphacrit {

enum class CensusFilter {
  All,            // every isomorphism class
  Connected,      // connected classes
  AlphaCritical,  // connected, at least one edge, every edge critical
  Basic           // alpha-critical and neither splitting- nor duplication-reducible
};

// Canonical graph6 strings of all isomorphism classes on exactly n vertices
// matching the filter, sorted. Generated by vertex extension from level n - 1
// with canonical deduplication; capped at 9 vertices (TooLargeForEnumeration).
// When ALPHACRIT_CACHE_DIR is set, All and Connected levels are cached there
// as gzipped line files. Results are memoized per process.
std::vector<std::string> census_level(int n, CensusFilter filter);

// The same classes parsed, in the same order.
std::vector<Graph> census_graphs(int n, CensusFilter filter);

}  // namespace alphacrit
