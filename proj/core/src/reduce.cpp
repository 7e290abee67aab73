#include "alphacrit/reduce.hpp"

#include <string>

#include "alphacrit/critical.hpp"
#include "alphacrit/error.hpp"
#include "alphacrit/solver.hpp"

namespace alphacrit {

namespace {

Bits512 closed_row(const Graph& g, int v) {
  Bits512 r = g.row(v);
  r.set(v);
  return r;
}

// Adjacent degree-2 pair inside s whose outer neighbors are distinct and
// nonadjacent: subdividing inside s is reversible in the ambient graph.
bool has_odd_gadget_within(const Graph& g, const Bits512& s) {
  for (const EdgeRef& e : g.edges()) {
    if (!s.test(e.u) || !s.test(e.v)) continue;
    if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
    Bits512 ra = g.row(e.u);
    ra.reset(e.v);
    Bits512 rb = g.row(e.v);
    rb.reset(e.u);
    const int x = ra.first();
    const int y = rb.first();
    if (x != y && !g.has_edge(x, y)) return true;
  }
  return false;
}

// The two vertices outside x0 form a reversed split with the middle vertex
// already absent: nonadjacent, with disjoint nonempty neighborhoods.
bool complement_is_split_pair(const Graph& x, const VertexSet& x0) {
  const Bits512 comp = Bits512::prefix(x.vertex_count()).minus(x0.bits);
  if (comp.count() != 2) return false;
  const int a = comp.first();
  const int b = comp.next_after(a);
  if (x.has_edge(a, b)) return false;
  if ((x.row(a) & x.row(b)).any()) return false;
  return x.row(a).any() && x.row(b).any();
}

void require_connected_critical(const Graph& g, const char* what) {
  if (g.vertex_count() < 2)
    throw Error(Errc::PreconditionViolated,
                std::string(what) + " needs at least 2 vertices");
  if (!is_connected(g))
    throw Error(Errc::PreconditionViolated,
                std::string(what) + " needs a connected host");
  if (!all_edges_alpha_critical(g))
    throw Error(Errc::PreconditionViolated,
                std::string(what) + " needs an alpha-critical host");
}

std::string join_detail(const char* kind, bool direct, bool conditions,
                        const std::string& why) {
  std::string out = std::string(kind) + ": composed=" +
                    (direct ? "true" : "false") + " blocks=" +
                    (conditions ? "true" : "false");
  if (!why.empty()) out += " (" + why + ")";
  return out;
}

}  // namespace

std::optional<TwinWitness> find_closed_twins(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    const Bits512 cu = closed_row(g, u);
    for (int v = u + 1; v < n; ++v) {
      if (cu == closed_row(g, v)) return TwinWitness{u, v};
    }
  }
  return std::nullopt;
}

bool is_duplication_reducible(const Graph& g) {
  return find_closed_twins(g).has_value();
}

std::optional<SplitGadget> find_splitting_gadget(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != 2) continue;
    const int a = g.row(u).first();
    const int b = g.row(u).next_after(a);
    if (g.has_edge(a, b)) continue;
    Bits512 na = g.row(a);
    na.reset(u);
    Bits512 nb = g.row(b);
    nb.reset(u);
    if ((na & nb).any()) continue;
    if (na.none() || nb.none()) continue;
    return SplitGadget{a, u, b};
  }
  return std::nullopt;
}

bool is_splitting_reducible_alpha_critical(const Graph& g) {
  require_connected_critical(g, "splitting reducibility");
  return g.min_degree() <= 2;
}

std::optional<OddSubdivisionGadget> find_odd_subdivision_gadget(const Graph& g) {
  for (const EdgeRef& e : g.edges()) {
    if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
    Bits512 ra = g.row(e.u);
    ra.reset(e.v);
    Bits512 rb = g.row(e.v);
    rb.reset(e.u);
    const int x = ra.first();
    const int y = rb.first();
    if (x == y || g.has_edge(x, y)) continue;
    return OddSubdivisionGadget{x, e.u, e.v, y};
  }
  return std::nullopt;
}

bool is_odd_subdivision_reducible(const Graph& g) {
  return find_odd_subdivision_gadget(g).has_value();
}

Graph contract_odd_subdivision(const Graph& g, const OddSubdivisionGadget& w) {
  const InducedSubgraph sub = delete_vertices(
      g, make_vertex_set(g, std::vector<int>{w.uprime, w.vprime}));
  Graph out = sub.graph;
  out.add_edge(sub.old_to_new[w.u], sub.old_to_new[w.v]);
  return out;
}

Graph contract_split(const Graph& g, const SplitGadget& w) {
  const InducedSubgraph sub = delete_vertices(
      g, make_vertex_set(g, std::vector<int>{w.vprime, w.u, w.vdoubleprime}));
  const int merged = sub.graph.vertex_count();
  Graph out(merged + 1);
  for (const EdgeRef& e : sub.graph.edges()) out.add_edge(e.u, e.v);
  Bits512 nbrs = g.row(w.vprime) | g.row(w.vdoubleprime);
  nbrs.reset(w.u);
  nbrs.for_each([&](int x) { out.add_edge(sub.old_to_new[x], merged); });
  return out;
}

Graph contract_duplicate(const Graph& g, const TwinWitness& w) {
  return delete_vertex(g, w.v);
}

ReducibilityReport check_basic(const Graph& g) {
  require_connected_critical(g, "basic check");
  ReducibilityReport r;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) <= 2) {
      r.low_degree_vertex = v;
      break;
    }
  }
  r.splitting_reducible = r.low_degree_vertex.has_value();
  r.odd_gadget = find_odd_subdivision_gadget(g);
  r.odd_subdivision_reducible = r.odd_gadget.has_value();
  r.twins = find_closed_twins(g);
  r.duplication_reducible = r.twins.has_value();
  r.is_basic = !r.splitting_reducible && !r.duplication_reducible;
  return r;
}

JoinBasicReport check_join_basic_theorem(const JoinQuadruple& q) {
  const JoinConditionReport cond = check_join_conditions(q);
  const Graph j = one_join(q);
  const bool j_connected = is_connected(j);
  const bool j_critical = all_edges_alpha_critical(j);

  JoinBasicReport r;

  {
    std::string why;
    const bool direct =
        j_connected && j_critical && !find_splitting_gadget(j).has_value();
    const bool parts_connected =
        is_connected(induced_subgraph(q.g, q.g0).graph) &&
        is_connected(induced_subgraph(q.h, q.h0).graph);
    if (!parts_connected) why += "designated subgraph disconnected; ";
    bool interior_degrees = true;
    q.g0.bits.for_each([&](int v) {
      if (q.g.degree(v) < 3) interior_degrees = false;
    });
    q.h0.bits.for_each([&](int v) {
      if (q.h.degree(v) < 3) interior_degrees = false;
    });
    if (!interior_degrees) why += "degree below 3 inside a designated subgraph; ";
    const bool split_shape =
        (q.g0.bits.none() && complement_is_split_pair(q.h, q.h0)) ||
        (q.h0.bits.none() && complement_is_split_pair(q.g, q.g0));
    if (split_shape) why += "join reassembles a split; ";
    if (!cond.all_hold) why += "join conditions fail; ";
    const bool conditions =
        parts_connected && interior_degrees && !split_shape && cond.all_hold;
    r.splitting = {direct, conditions, direct == conditions,
                   join_detail("splitting", direct, conditions, why)};
  }

  {
    std::string why;
    const bool direct =
        j_connected && j_critical && !find_odd_subdivision_gadget(j).has_value();
    const bool blocks_connected = is_connected(q.g) && is_connected(q.h);
    if (!blocks_connected) why += "block disconnected; ";
    const bool gadget_inside = has_odd_gadget_within(q.g, q.g0.bits) ||
                               has_odd_gadget_within(q.h, q.h0.bits);
    if (gadget_inside) why += "reversible pair inside a designated subgraph; ";
    if (!cond.all_hold) why += "join conditions fail; ";
    const bool conditions = blocks_connected && !gadget_inside && cond.all_hold;
    r.odd_subdivision = {direct, conditions, direct == conditions,
                         join_detail("odd-subdivision", direct, conditions, why)};
  }

  {
    std::string why;
    const bool direct = !find_closed_twins(j).has_value();
    const bool blocks_free = !find_closed_twins(q.g).has_value() &&
                             !find_closed_twins(q.h).has_value();
    if (!blocks_free) why += "block has closed twins; ";
    bool g0_canonical = false;
    for (int u = 0; u < q.g.vertex_count() && !g0_canonical; ++u)
      g0_canonical = q.g0.bits == canonical_subgraph(q.g, u).bits;
    bool h0_canonical = false;
    for (int v = 0; v < q.h.vertex_count() && !h0_canonical; ++v)
      h0_canonical = q.h0.bits == canonical_subgraph(q.h, v).bits;
    if (g0_canonical && h0_canonical)
      why += "both designated subgraphs delete closed neighborhoods; ";
    const bool conditions = blocks_free && !(g0_canonical && h0_canonical);
    r.duplication = {direct, conditions, direct == conditions,
                     join_detail("duplication", direct, conditions, why)};
  }

  r.all_agree =
      r.splitting.agree && r.odd_subdivision.agree && r.duplication.agree;
  return r;
}

}  // namespace alphacrit
