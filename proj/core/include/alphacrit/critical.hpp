#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphacrit/graph.hpp"
#include "alphacrit/ops.hpp"
#include "alphacrit/solver.hpp"

namespace alphacrit {

// V(g) \ N[v]: the vertex-deleted neighborhood complement at v.
VertexSet canonical_subgraph(const Graph& g, int v);

// True iff every edge incident to v is alpha-critical (vacuous for isolated v).
bool check_vertex_star_critical(const Graph& g, int v);

// True iff alpha(g[s]) == alpha(g) - 1 and every one-vertex extension of s
// raises the induced stability number back to alpha(g).
bool is_maximal_alpha_minus_one(const Graph& g, const VertexSet& s);

enum class MaximalClass { Canonical, NonCanonical };

struct MaximalEntry {
  VertexSet vertices;
  MaximalClass cls = MaximalClass::NonCanonical;
  int canonical_vertex = -1;  // least v with vertices == V \ N[v]
};

// All maximal induced subgraphs with stability number alpha(g) - 1, largest
// first. Capped at 14 vertices (TooLargeForEnumeration). Empty when
// alpha(g) == 0.
std::vector<MaximalEntry> enumerate_maximal_alpha_minus_one(const Graph& g);

struct ConditionViolation {
  std::string condition;  // "i", "ii", "iii"
  std::string side;       // "g", "h"
  std::optional<EdgeRef> edge;
  std::optional<VertexSet> extension;  // one-vertex extension breaking (i)
};

struct JoinConditionReport {
  bool g_maximal = false;  // (i): g0 is a maximal alpha-1 subgraph
  bool h_maximal = false;
  bool g_outside_critical = false;  // (ii): edges leaving g0 critical in g
  bool h_outside_critical = false;
  bool g_inside_covered = false;  // (iii): g0 edges critical in g or in g[g0]
  bool h_inside_covered = false;
  bool all_hold = false;
  std::vector<ConditionViolation> violations;
};

// Requires the stability gap (alpha of each designated subgraph one below its
// host), else HypothesisViolated.
JoinConditionReport check_join_conditions(const JoinQuadruple& q);

struct AlphaIdentity {
  int predicted = 0;  // alpha(g) + alpha(h) - 1
  int actual = 0;
};

AlphaIdentity join_alpha_identity(const JoinQuadruple& q);

struct K1ReductionReport {
  bool j_critical = false;
  bool g1_critical = false;  // one_join(g, g0, K1, empty)
  bool h1_critical = false;
};

K1ReductionReport corollary_k1_reduction(const JoinQuadruple& q);

// Criticality of the join with u (a g vertex) deleted, or with u and an
// h vertex v both deleted. Requires the gap and all six join conditions,
// else HypothesisViolated.
bool corollary_vertex_deleted(const JoinQuadruple& q, int u);
bool corollary_vertex_deleted(const JoinQuadruple& q, int u, int v);

struct PredictedFamily {
  std::string case_tag;  // shape label, "EV-i".."EV-v" or "J-i".."J-iv"
  VertexSet vertex_set;  // in the composed graph's labeling
  std::string provenance;
};

// Maximal alpha-1 vertex sets of edge_vertex_compose(g, e, h, v, p), computed
// from the blocks' subset stability tables without searching the composition.
// Tags classify the shape: EV-i full h side, EV-ii full g side, EV-iii full
// g side minus a replaced-edge endpoint, EV-iv a kept endpoint against the
// far assignment half, EV-v anything else. Requires g and h alpha-critical
// (HypothesisViolated) and composed size <= 14 (TooLargeForEnumeration).
std::vector<PredictedFamily> predict_maximal_in_ev_composition(
    const Graph& g, const EdgeRef& e, const Graph& h, int v,
    const EVPartition& p);

// Maximal alpha-1 vertex sets of one_join(q), computed from the blocks'
// subset stability tables without searching the composition. Tags: J-ii full
// h side, J-iii full g side, J-i both sides proper maximal alpha-1 sets
// meeting the designated sets at alpha - 1, J-iv the remaining proper-proper
// shapes. Requires the stability gap (HypothesisViolated) and composed
// size <= 14.
std::vector<PredictedFamily> predict_maximal_in_join(const JoinQuadruple& q);

}  // namespace alphacrit
