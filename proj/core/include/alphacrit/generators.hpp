#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "alphacrit/graph.hpp"
#include "alphacrit/ops.hpp"

namespace alphacrit {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

Graph random_graph(Rng& rng, int n, double edge_prob);

// Connected alpha-critical census members with 2 <= n <= max_n.
std::vector<Graph> alpha_critical_corpus(int max_n);

// The 2-connected corpus members.
std::vector<Graph> two_connected_corpus(int max_n);

// Vertex set with induced stability number alpha(g) - 1, grown greedily over
// a shuffled order (hence inclusion-maximal). With shrink, vertices are
// randomly dropped while the gap survives, usually losing maximality. Null
// when alpha(g) == 0.
std::optional<VertexSet> random_gap_subset(const Graph& g, Rng& rng, bool shrink);

// Random blocks (any graphs) with gap subsets on both sides.
JoinQuadruple random_gap_quadruple(Rng& rng, int max_block, bool shrink);

// Corpus blocks with maximal designated subgraphs; all six join conditions
// hold by construction.
JoinQuadruple random_conditions_quadruple(Rng& rng, int max_block,
                                          int max_composed = 1024);

// Quadruple violating exactly condition 1 (maximality), 2 (edges leaving the
// designated set), or 3 (edges inside it) on the g side, everything else
// holding.
JoinQuadruple violation_quadruple(Rng& rng, int max_block, int which);

struct EVInstance {
  Graph g;
  EdgeRef e{0, 1};
  Graph h;
  int v = 0;
  EVPartition p;
};

// Alpha-critical blocks with a random edge, vertex, and assignment, composed
// size at most max_composed.
EVInstance random_ev_instance(Rng& rng, int max_composed);

}  // namespace alphacrit
