#pragma once

#include <string>
#include <vector>

#include "alphacrit/bitset.hpp"
#include "alphacrit/error.hpp"

namespace alphacrit {

// Undirected edge with endpoints normalized to u < v.
struct EdgeRef {
  int u = 0;
  int v = 0;

  EdgeRef() = default;
  EdgeRef(int a, int b) {
    if (a == b) throw Error(Errc::SelfLoop, "edge endpoints coincide: " + std::to_string(a));
    u = a < b ? a : b;
    v = a < b ? b : a;
  }
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend bool operator<(const EdgeRef& a, const EdgeRef& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bit row
// per vertex. Hard capacity of 512 vertices. Treat instances as immutable
// values once built; every operation here returns a new graph.
class Graph {
 public:
  static constexpr int kMaxVertices = Bits512::kCapacity;

  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw Error(Errc::EndpointOutOfRange, "negative vertex count");
    if (n > kMaxVertices)
      throw Error(Errc::CapacityExceeded,
                  "vertex count " + std::to_string(n) + " exceeds capacity " +
                      std::to_string(kMaxVertices));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), Bits512{});
  }

  Graph(int n, const std::vector<EdgeRef>& edges) : Graph(n) {
    for (const auto& e : edges) add_edge(e.u, e.v);
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error(Errc::EndpointOutOfRange,
                  "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].test(v);
  }

  void add_edge(int u, int v) {
    if (u == v) throw Error(Errc::SelfLoop, "self loop at " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v))
      throw Error(Errc::NoSuchEdge,
                  "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[static_cast<std::size_t>(u)].reset(v);
    adj_[static_cast<std::size_t>(v)].reset(u);
  }

  const Bits512& row(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return row(v).count(); }

  int min_degree() const {
    int m = n_ == 0 ? 0 : kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) m = std::min(m, adj_[static_cast<std::size_t>(v)].count());
    return n_ == 0 ? 0 : m;
  }

  int max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, adj_[static_cast<std::size_t>(v)].count());
    return m;
  }

  std::vector<EdgeRef> edges() const {
    std::vector<EdgeRef> out;
    for (int u = 0; u < n_; ++u) {
      adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (v > u) out.emplace_back(u, v);
      });
    }
    return out;
  }

  Bits512 all_vertices() const { return Bits512::prefix(n_); }

  // Optional per-vertex labels, used by the composition operations to record
  // where a vertex came from. Not part of graph equality.
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const {
    check_vertex(v);
    static const std::string kEmpty;
    return labels_.empty() ? kEmpty : labels_[static_cast<std::size_t>(v)];
  }
  void set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty()) labels_.assign(static_cast<std::size_t>(n_), std::string());
    labels_[static_cast<std::size_t>(v)] = std::move(s);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<Bits512> adj_;
  std::vector<std::string> labels_;
};

// Subset of the vertices of a particular host graph.
struct VertexSet {
  Bits512 bits;
  int host_n = 0;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  bool contains(int v) const { return v >= 0 && v < host_n && bits.test(v); }
  int size() const { return bits.count(); }
  bool empty() const { return bits.none(); }
  std::vector<int> members() const { return bits.indices(); }
};

VertexSet make_vertex_set(const Graph& g, const std::vector<int>& vertices);
VertexSet make_vertex_set(const Graph& g, const Bits512& bits);
VertexSet full_set(const Graph& g);
VertexSet empty_set(const Graph& g);
VertexSet complement(const Graph& g, const VertexSet& s);

void check_host(const Graph& g, const VertexSet& s);

Graph new_graph(int n, const std::vector<EdgeRef>& edges);

// Union of open neighborhoods of s; may intersect s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  // old_to_new[v] is the new id of old vertex v, or -1 when v was dropped.
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

// Induced subgraph on s, keeping relative vertex order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph delete_edge(const Graph& g, const EdgeRef& e);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);
Graph delete_vertex(const Graph& g, int v);

// Left graph keeps its ids, right graph is shifted by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);

// Empty graph and K1 both count as connected.
bool is_connected(const Graph& g);

// n >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

// perm[old] = new id; edges mapped accordingly, labels follow vertices.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace alphacrit
