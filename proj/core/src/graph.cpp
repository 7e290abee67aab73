#include "alphacrit/graph.hpp"

#include <algorithm>

namespace alphacrit {

VertexSet make_vertex_set(const Graph& g, const std::vector<int>& vertices) {
  VertexSet s;
  s.host_n = g.vertex_count();
  for (int v : vertices) {
    g.check_vertex(v);
    s.bits.set(v);
  }
  return s;
}

VertexSet make_vertex_set(const Graph& g, const Bits512& bits) {
  VertexSet s;
  s.host_n = g.vertex_count();
  s.bits = bits;
  int top = -1;
  bits.for_each([&](int v) { top = v; });
  if (top >= g.vertex_count())
    throw Error(Errc::EndpointOutOfRange,
                "set member " + std::to_string(top) + " outside host graph");
  return s;
}

VertexSet full_set(const Graph& g) {
  VertexSet s;
  s.host_n = g.vertex_count();
  s.bits = g.all_vertices();
  return s;
}

VertexSet empty_set(const Graph& g) {
  VertexSet s;
  s.host_n = g.vertex_count();
  return s;
}

VertexSet complement(const Graph& g, const VertexSet& s) {
  check_host(g, s);
  VertexSet out;
  out.host_n = g.vertex_count();
  out.bits = g.all_vertices().minus(s.bits);
  return out;
}

void check_host(const Graph& g, const VertexSet& s) {
  if (s.host_n != g.vertex_count())
    throw Error(Errc::HostMismatch, "vertex set built for a graph on " +
                                        std::to_string(s.host_n) + " vertices, host has " +
                                        std::to_string(g.vertex_count()));
}

Graph new_graph(int n, const std::vector<EdgeRef>& edges) {
  Graph g(n);
  for (const auto& e : edges) {
    if (e.v >= n)
      throw Error(Errc::EndpointOutOfRange, "edge endpoint " + std::to_string(e.v) +
                                                " outside [0," + std::to_string(n) + ")");
    g.add_edge(e.u, e.v);
  }
  return g;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  check_host(g, s);
  VertexSet out;
  out.host_n = g.vertex_count();
  s.bits.for_each([&](int v) { out.bits |= g.row(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = neighborhood(g, s);
  out.bits |= s.bits;
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_host(g, s);
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  out.new_to_old = s.bits.indices();
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
    out.old_to_new[static_cast<std::size_t>(out.new_to_old[i])] = static_cast<int>(i);
  out.graph = Graph(static_cast<int>(out.new_to_old.size()));
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    const Bits512 nbrs = g.row(out.new_to_old[i]) & s.bits;
    nbrs.for_each([&](int w) {
      int j = out.old_to_new[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    });
  }
  if (g.has_labels()) {
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i)
      out.graph.set_label(static_cast<int>(i), g.label(out.new_to_old[i]));
  }
  return out;
}

Graph delete_edge(const Graph& g, const EdgeRef& e) {
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph(g, complement(g, s));
}

Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  return delete_vertices(g, make_vertex_set(g, std::vector<int>{v})).graph;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  if (ng + nh > Graph::kMaxVertices)
    throw Error(Errc::CapacityExceeded, "union has " + std::to_string(ng + nh) + " vertices");
  Graph out(ng + nh);
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) out.add_edge(e.u + ng, e.v + ng);
  if (g.has_labels() || h.has_labels()) {
    for (int v = 0; v < ng; ++v) out.set_label(v, g.label(v));
    for (int v = 0; v < nh; ++v) out.set_label(v + ng, h.label(v));
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  Bits512 seen;
  seen.set(0);
  Bits512 frontier = seen;
  while (frontier.any()) {
    Bits512 next;
    frontier.for_each([&](int v) { next |= g.row(v); });
    next = next.minus(seen);
    seen |= next;
    frontier = next;
  }
  return seen.count() == n;
}

bool is_two_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    if (!is_connected(delete_vertex(g, v))) return false;
  }
  return true;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw Error(Errc::InvalidQuadruple, "permutation length mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)])
      throw Error(Errc::InvalidQuadruple, "not a permutation of 0.." + std::to_string(n - 1));
    hit[static_cast<std::size_t>(p)] = true;
  }
  Graph out(n);
  for (const auto& e : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  if (g.has_labels()) {
    for (int v = 0; v < n; ++v) out.set_label(perm[static_cast<std::size_t>(v)], g.label(v));
  }
  return out;
}

}  // namespace alphacrit
