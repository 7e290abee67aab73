#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "alphacrit/graph.hpp"

namespace alphacrit {

// Exact maximum stable set size, branch and bound. Fast for the sizes this
// library targets (census graphs and composition outputs).
int stability_number(const Graph& g);

// Stability number of the subgraph induced by p, without building it.
int stability_number_within(const Graph& g, const Bits512& p);

bool is_stable_set(const Graph& g, const VertexSet& s);

// Stable and not extendable by any single vertex.
bool is_maximal_stable_set(const Graph& g, const VertexSet& s);

// Smallest maximum stable set under lex_less (lowest differing vertex wins).
VertexSet lex_least_maximum_stable_set(const Graph& g);

// All maximum stable sets in lex_less order. Output can be exponential;
// refuses graphs with more than 24 vertices.
std::vector<VertexSet> all_maximum_stable_sets(const Graph& g);

// Number of maximum stable sets; cost scales with the count. Refuses graphs
// with more than 32 vertices.
long long count_maximum_stable_sets(const Graph& g);

struct StabilityReport {
  int alpha = 0;
  VertexSet witness;
  std::optional<long long> num_maximum;
};

StabilityReport alpha(const Graph& g, bool count = false);

// Deleting an edge raises alpha by at most 1; this asserts that internally.
bool is_alpha_critical_edge(const Graph& g, const EdgeRef& e);

struct CriticalityReport {
  int alpha = 0;
  std::vector<EdgeRef> critical_edges;  // sorted
  bool is_alpha_critical = false;       // critical_edges == all edges
  int defect = 0;                       // n - 2*alpha
  int tau = 0;                          // n - alpha
};

// Edgeless graphs are vacuously alpha-critical.
CriticalityReport is_alpha_critical(const Graph& g);

// Same verdict as is_alpha_critical(g).is_alpha_critical, stopping at the
// first non-critical edge.
bool all_edges_alpha_critical(const Graph& g);

// n - 2*alpha; negative for graphs far from critical (e.g. edgeless).
int defect(const Graph& g);

// table[mask] = stability number of the subgraph induced by mask, for every
// mask over the vertex bits. Size 2^n; refuses graphs with more than 20
// vertices. Entry point for composition analyses that need alpha on many
// subsets of a small block.
std::vector<int8_t> subset_stability_table(const Graph& g);

inline int vertex_cover_number(const Graph& g) {
  return g.vertex_count() - stability_number(g);
}

// Visits every stable set of size exactly k in lex_less order. The visitor
// returns false to stop early. Sets are emitted as raw bit sets.
void enumerate_stable_sets_of_size(const Graph& g, int k,
                                   const std::function<bool(const Bits512&)>& visit);

}  // namespace alphacrit
