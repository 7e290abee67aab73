#pragma once

#include <optional>
#include <string>

#include "alphacrit/graph.hpp"
#include "alphacrit/ops.hpp"

namespace alphacrit {

// Closed twins N[u] == N[v]; least pair in lexicographic order.
struct TwinWitness {
  int u = -1;
  int v = -1;
};

std::optional<TwinWitness> find_closed_twins(const Graph& g);

// True iff g == duplicate_vertex(g', w) for some smaller g', i.e. iff g has
// closed twins.
bool is_duplication_reducible(const Graph& g);

// Center u of degree 2 whose neighbors v', v'' are nonadjacent with disjoint
// nonempty remaining neighborhoods: exactly the configurations reversing a
// split_vertex.
struct SplitGadget {
  int vprime = -1;
  int u = -1;
  int vdoubleprime = -1;
};

std::optional<SplitGadget> find_splitting_gadget(const Graph& g);

// Degree criterion: min degree <= 2. Valid only for connected alpha-critical
// hosts with >= 2 vertices (PreconditionViolated otherwise). Diverges from
// the gadget scan exactly on K2 and odd cycles, whose low-degree vertices
// reverse no split.
bool is_splitting_reducible_alpha_critical(const Graph& g);

// Adjacent degree-2 pair u', v' whose outer neighbors u, v are distinct and
// nonadjacent: exactly the configurations reversing an odd_subdivide.
struct OddSubdivisionGadget {
  int u = -1;
  int uprime = -1;
  int vprime = -1;
  int v = -1;
};

std::optional<OddSubdivisionGadget> find_odd_subdivision_gadget(const Graph& g);

bool is_odd_subdivision_reducible(const Graph& g);

// Inverse constructions at a found gadget. Remaining ids are compacted in
// order; contract_split appends the merged vertex last.
Graph contract_odd_subdivision(const Graph& g, const OddSubdivisionGadget& w);
Graph contract_split(const Graph& g, const SplitGadget& w);
Graph contract_duplicate(const Graph& g, const TwinWitness& w);

struct ReducibilityReport {
  bool splitting_reducible = false;  // degree criterion
  std::optional<int> low_degree_vertex;
  bool odd_subdivision_reducible = false;
  std::optional<OddSubdivisionGadget> odd_gadget;
  bool duplication_reducible = false;
  std::optional<TwinWitness> twins;
  bool is_basic = false;  // neither splitting- nor duplication-reducible
};

// Requires a connected alpha-critical host with >= 2 vertices
// (PreconditionViolated).
ReducibilityReport check_basic(const Graph& g);

struct JoinBasicPart {
  bool direct = false;      // property measured on the composed join
  bool conditions = false;  // block-level characterization
  bool agree = false;
  std::string detail;
};

struct JoinBasicReport {
  JoinBasicPart splitting;
  JoinBasicPart odd_subdivision;
  JoinBasicPart duplication;
  bool all_agree = false;
};

// Requires the stability gap (HypothesisViolated). Each part compares the
// composed join's measured property against the block-level conditions.
JoinBasicReport check_join_basic_theorem(const JoinQuadruple& q);

}  // namespace alphacrit
