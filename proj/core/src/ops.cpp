#include "alphacrit/ops.hpp"

#include <string>

#include "alphacrit/error.hpp"

namespace alphacrit {

namespace {

void check_vertex_exists(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw Error(Errc::NoSuchVertex, "no vertex " + std::to_string(v) +
                                        " in graph on " +
                                        std::to_string(g.vertex_count()) +
                                        " vertices");
}

void check_bipartition(const Graph& g, int v, const VertexSet& a,
                       const VertexSet& b, const char* what) {
  check_host(g, a);
  check_host(g, b);
  if (a.bits.none() || b.bits.none())
    throw Error(Errc::BadPartition, std::string(what) + ": both parts must be nonempty");
  if ((a.bits & b.bits).any())
    throw Error(Errc::BadPartition, std::string(what) + ": parts overlap");
  if (!((a.bits | b.bits) == g.row(v)))
    throw Error(Errc::BadPartition,
                std::string(what) + ": parts do not cover the neighborhood of " +
                    std::to_string(v));
}

std::string side_label(const Graph& g, int v, const char* side) {
  const std::string& own = g.label(v);
  return std::string(side) + ":" + (own.empty() ? std::to_string(v) : own);
}

}  // namespace

void validate_quadruple(const JoinQuadruple& q) {
  check_host(q.g, q.g0);
  check_host(q.h, q.h0);
  if (q.g0.bits == Bits512::prefix(q.g.vertex_count()))
    throw Error(Errc::InvalidQuadruple, "g0 must miss at least one vertex of g");
  if (q.h0.bits == Bits512::prefix(q.h.vertex_count()))
    throw Error(Errc::InvalidQuadruple, "h0 must miss at least one vertex of h");
}

Graph odd_subdivide(const Graph& g, const EdgeRef& e) {
  if (!g.has_edge(e.u, e.v))
    throw Error(Errc::NoSuchEdge, "no edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "}");
  const int n = g.vertex_count();
  Graph out(n + 2);
  for (const EdgeRef& f : g.edges()) {
    if (!(f == e)) out.add_edge(f.u, f.v);
  }
  out.add_edge(e.u, n);
  out.add_edge(n, n + 1);
  out.add_edge(n + 1, e.v);
  if (g.has_labels()) {
    for (int w = 0; w < n; ++w) out.set_label(w, g.label(w));
  }
  out.set_label(n, "new:u'");
  out.set_label(n + 1, "new:v'");
  return out;
}

Graph split_vertex(const Graph& g, int v, const SplitPartition& p) {
  check_vertex_exists(g, v);
  check_bipartition(g, v, p.part_vprime, p.part_vdoubleprime, "split partition");
  const int n = g.vertex_count();
  auto map = [v](int w) { return w - (w > v ? 1 : 0); };
  const int vp = n - 1, vpp = n, u = n + 1;
  Graph out(n + 2);
  for (const EdgeRef& f : g.edges()) {
    if (f.u != v && f.v != v) out.add_edge(map(f.u), map(f.v));
  }
  p.part_vprime.bits.for_each([&](int w) { out.add_edge(map(w), vp); });
  p.part_vdoubleprime.bits.for_each([&](int w) { out.add_edge(map(w), vpp); });
  out.add_edge(vp, u);
  out.add_edge(vpp, u);
  if (g.has_labels()) {
    for (int w = 0; w < n; ++w) {
      if (w != v) out.set_label(map(w), g.label(w));
    }
  }
  out.set_label(vp, "new:v'");
  out.set_label(vpp, "new:v''");
  out.set_label(u, "new:u");
  return out;
}

Graph duplicate_vertex(const Graph& g, int v) {
  check_vertex_exists(g, v);
  const int n = g.vertex_count();
  Graph out(n + 1);
  for (const EdgeRef& f : g.edges()) out.add_edge(f.u, f.v);
  out.add_edge(v, n);
  g.row(v).for_each([&](int w) { out.add_edge(w, n); });
  if (g.has_labels()) {
    for (int w = 0; w < n; ++w) out.set_label(w, g.label(w));
  }
  out.set_label(n, "new:v'");
  return out;
}

Graph edge_vertex_compose(const Graph& g, const EdgeRef& e, const Graph& h,
                          int v, const EVPartition& p) {
  if (!g.has_edge(e.u, e.v))
    throw Error(Errc::NoSuchEdge, "no edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "}");
  check_vertex_exists(h, v);
  check_bipartition(h, v, p.u1, p.u2, "edge-vertex assignment");
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  auto map = [ng, v](int w) { return ev_image(ng, v, w); };
  Graph out(ng + nh - 1);
  for (const EdgeRef& f : g.edges()) {
    if (!(f == e)) out.add_edge(f.u, f.v);
  }
  for (const EdgeRef& f : h.edges()) {
    if (f.u != v && f.v != v) out.add_edge(map(f.u), map(f.v));
  }
  p.u1.bits.for_each([&](int w) { out.add_edge(e.u, map(w)); });
  p.u2.bits.for_each([&](int w) { out.add_edge(e.v, map(w)); });
  for (int w = 0; w < ng; ++w) out.set_label(w, side_label(g, w, "g"));
  for (int w = 0; w < nh; ++w) {
    if (w != v) out.set_label(map(w), side_label(h, w, "h"));
  }
  return out;
}

Graph one_join(const JoinQuadruple& q) {
  validate_quadruple(q);
  const int ng = q.g.vertex_count();
  const int nh = q.h.vertex_count();
  Graph out(ng + nh);
  for (const EdgeRef& f : q.g.edges()) out.add_edge(f.u, f.v);
  for (const EdgeRef& f : q.h.edges()) out.add_edge(ng + f.u, ng + f.v);
  const Bits512 gc = complement(q.g, q.g0).bits;
  const Bits512 hc = complement(q.h, q.h0).bits;
  gc.for_each([&](int a) {
    hc.for_each([&](int b) { out.add_edge(a, ng + b); });
  });
  for (int w = 0; w < ng; ++w) out.set_label(w, side_label(q.g, w, "g"));
  for (int w = 0; w < nh; ++w) out.set_label(ng + w, side_label(q.h, w, "h"));
  return out;
}

std::vector<SplitPartition> split_partitions(const Graph& g, int v) {
  check_vertex_exists(g, v);
  const std::vector<int> nbrs = g.row(v).indices();
  const int d = static_cast<int>(nbrs.size());
  std::vector<SplitPartition> out;
  if (d < 2) return out;
  if (d > 20)
    throw Error(Errc::TooLargeForEnumeration,
                "partition enumeration capped at degree 20, got " +
                    std::to_string(d));
  // nbrs[0] stays in part_vprime, fixing one orientation per bipartition.
  for (unsigned mask = 1; mask < (1u << (d - 1)); ++mask) {
    Bits512 a, b;
    a.set(nbrs[0]);
    for (int i = 1; i < d; ++i) {
      if (mask & (1u << (i - 1)))
        b.set(nbrs[i]);
      else
        a.set(nbrs[i]);
    }
    out.push_back({VertexSet{a, g.vertex_count()}, VertexSet{b, g.vertex_count()}});
  }
  return out;
}

std::vector<EVPartition> ev_assignments(const Graph& h, int v) {
  check_vertex_exists(h, v);
  const std::vector<int> nbrs = h.row(v).indices();
  const int d = static_cast<int>(nbrs.size());
  std::vector<EVPartition> out;
  if (d < 2) return out;
  if (d > 20)
    throw Error(Errc::TooLargeForEnumeration,
                "partition enumeration capped at degree 20, got " +
                    std::to_string(d));
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    Bits512 a, b;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i))
        a.set(nbrs[i]);
      else
        b.set(nbrs[i]);
    }
    out.push_back({VertexSet{a, h.vertex_count()}, VertexSet{b, h.vertex_count()}});
  }
  return out;
}

}  // namespace alphacrit
