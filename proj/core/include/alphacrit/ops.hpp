#pragma once

#include <vector>

#include "alphacrit/graph.hpp"

namespace alphacrit {

// Unordered bipartition of a neighborhood N(v) into two nonempty parts, the
// future neighborhoods of v' and v''.
struct SplitPartition {
  VertexSet part_vprime;
  VertexSet part_vdoubleprime;
};

// Ordered assignment of a neighborhood N(v) to the two endpoints of an edge.
struct EVPartition {
  VertexSet u1;
  VertexSet u2;
};

// Join input (g, g0, h, h0): g0 and h0 are vertex sets of g and h whose
// complements are nonempty. Stability gaps are not checked here; hypotheses
// are the callers' business.
struct JoinQuadruple {
  Graph g;
  VertexSet g0;
  Graph h;
  VertexSet h0;
};

// Throws HostMismatch or InvalidQuadruple (empty complement on either side).
void validate_quadruple(const JoinQuadruple& q);

// Replaces edge e = {u, v} by the path u - u' - v' - v. New vertices are
// appended: u' gets id n, v' gets id n + 1. Existing ids are unchanged.
Graph odd_subdivide(const Graph& g, const EdgeRef& e);

// Removes v (remaining ids compact, order preserved), then appends v' with
// neighborhood p.part_vprime, v'' with p.part_vdoubleprime, and u adjacent to
// exactly v' and v''. Ids: v' = n - 1, v'' = n, u = n + 1.
Graph split_vertex(const Graph& g, int v, const SplitPartition& p);

// Appends v' with id n, adjacent to the closed neighborhood N[v].
Graph duplicate_vertex(const Graph& g, int v);

// Glues h minus v onto g minus the edge e: e.u inherits p.u1, e.v inherits
// p.u2. Ids of g are unchanged; vertex w of h maps to ng + w - (w > v).
Graph edge_vertex_compose(const Graph& g, const EdgeRef& e, const Graph& h,
                          int v, const EVPartition& p);

// Disjoint union of g and h (h shifted by ng) plus all edges between
// V(g) \ g0 and V(h) \ h0.
Graph one_join(const JoinQuadruple& q);

// Image of h's vertex w inside edge_vertex_compose output.
inline int ev_image(int ng, int v, int w) { return ng + w - (w > v ? 1 : 0); }

// Image of h's vertex w inside one_join output.
inline int join_image(int ng, int w) { return ng + w; }

// All unordered bipartitions of N(v) into nonempty halves, the least neighbor
// kept in part_vprime: 2^(deg-1) - 1 entries, empty when deg(v) < 2.
std::vector<SplitPartition> split_partitions(const Graph& g, int v);

// All ordered assignments (U1, U2) with both parts nonempty: 2^deg - 2.
std::vector<EVPartition> ev_assignments(const Graph& h, int v);

}  // namespace alphacrit
