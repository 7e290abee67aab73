#include "alphacrit/solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>

#include "alphacrit/error.hpp"

namespace alphacrit {

namespace {

// Greedy clique cover of p: each clique contributes at most one vertex to a
// stable set, so the cover size bounds alpha within p.
int clique_cover_bound(const Graph& g, const Bits512& p) {
  std::vector<Bits512> cliques;
  p.for_each([&](int v) {
    for (auto& c : cliques) {
      if (c.subset_of(g.row(v))) {
        c.set(v);
        return;
      }
    }
    Bits512 c;
    c.set(v);
    cliques.push_back(c);
  });
  return static_cast<int>(cliques.size());
}

struct BranchState {
  const Graph& g;
  int best = 0;

  void search(const Bits512& p, int have) {
    int pick = -1;
    int pick_deg = -1;
    int count = 0;
    int degree_sum = 0;
    p.for_each([&](int v) {
      ++count;
      const int d = (g.row(v) & p).count();
      degree_sum += d;
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    });
    if (pick_deg <= 1) {
      // Remaining components are vertices and single edges: take all isolated
      // vertices plus one endpoint per edge.
      best = std::max(best, have + count - degree_sum / 2);
      return;
    }
    if (have + clique_cover_bound(g, p) <= best) return;
    Bits512 with = p.minus(g.row(pick));
    with.reset(pick);
    search(with, have + 1);
    Bits512 without = p;
    without.reset(pick);
    search(without, have);
  }
};

}  // namespace

int stability_number_within(const Graph& g, const Bits512& p) {
  BranchState s{g};
  s.search(p, 0);
  return s.best;
}

int stability_number(const Graph& g) {
  return stability_number_within(g, g.all_vertices());
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
  check_host(g, s);
  bool ok = true;
  s.bits.for_each([&](int v) {
    if (g.row(v).intersects(s.bits)) ok = false;
  });
  return ok;
}

bool is_maximal_stable_set(const Graph& g, const VertexSet& s) {
  if (!is_stable_set(g, s)) return false;
  const Bits512 blocked = closed_neighborhood(g, s).bits;
  return g.all_vertices().minus(blocked).none();
}

void enumerate_stable_sets_of_size(const Graph& g, int k,
                                   const std::function<bool(const Bits512&)>& visit) {
  if (k < 0) return;
  struct Rec {
    const Graph& g;
    const std::function<bool(const Bits512&)>& visit;
    bool stopped = false;

    // Branch on the lowest candidate, include first: emits in lex_less order.
    void go(Bits512 cur, Bits512 p, int need) {
      if (stopped) return;
      if (need == 0) {
        if (!visit(cur)) stopped = true;
        return;
      }
      if (p.count() < need) return;
      const int v = p.first();
      Bits512 with = p.minus(g.row(v));
      with.reset(v);
      cur.set(v);
      go(cur, with, need - 1);
      cur.reset(v);
      p.reset(v);
      go(cur, p, need);
    }
  };
  Rec rec{g, visit};
  rec.go(Bits512{}, g.all_vertices(), k);
}

VertexSet lex_least_maximum_stable_set(const Graph& g) {
  const int alpha = stability_number(g);
  VertexSet out = empty_set(g);
  enumerate_stable_sets_of_size(g, alpha, [&](const Bits512& s) {
    out.bits = s;
    return false;
  });
  return out;
}

std::vector<VertexSet> all_maximum_stable_sets(const Graph& g) {
  if (g.vertex_count() > 24)
    throw Error(Errc::TooLargeForEnumeration,
                "maximum stable set listing capped at 24 vertices, got " +
                    std::to_string(g.vertex_count()));
  const int alpha = stability_number(g);
  std::vector<VertexSet> out;
  enumerate_stable_sets_of_size(g, alpha, [&](const Bits512& s) {
    out.push_back(make_vertex_set(g, s));
    return true;
  });
  return out;
}

long long count_maximum_stable_sets(const Graph& g) {
  if (g.vertex_count() > 32)
    throw Error(Errc::TooLargeForEnumeration,
                "maximum stable set counting capped at 32 vertices, got " +
                    std::to_string(g.vertex_count()));
  const int alpha = stability_number(g);
  long long count = 0;
  enumerate_stable_sets_of_size(g, alpha, [&](const Bits512&) {
    ++count;
    return true;
  });
  return count;
}

StabilityReport alpha(const Graph& g, bool count) {
  StabilityReport r;
  r.alpha = stability_number(g);
  r.witness = lex_least_maximum_stable_set(g);
  if (count) r.num_maximum = count_maximum_stable_sets(g);
  return r;
}

bool is_alpha_critical_edge(const Graph& g, const EdgeRef& e) {
  if (!g.has_edge(e.u, e.v))
    throw Error(Errc::NoSuchEdge, "no edge {" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + "}");
  const int before = stability_number(g);
  const int after = stability_number(delete_edge(g, e));
  assert(after == before || after == before + 1);
  return after == before + 1;
}

CriticalityReport is_alpha_critical(const Graph& g) {
  CriticalityReport r;
  r.alpha = stability_number(g);
  r.defect = g.vertex_count() - 2 * r.alpha;
  r.tau = g.vertex_count() - r.alpha;
  for (const EdgeRef& e : g.edges()) {
    if (stability_number(delete_edge(g, e)) > r.alpha) r.critical_edges.push_back(e);
  }
  r.is_alpha_critical = r.critical_edges.size() == g.edges().size();
  return r;
}

bool all_edges_alpha_critical(const Graph& g) {
  const int base = stability_number(g);
  for (const EdgeRef& e : g.edges()) {
    if (stability_number(delete_edge(g, e)) == base) return false;
  }
  return true;
}

int defect(const Graph& g) { return g.vertex_count() - 2 * stability_number(g); }

std::vector<int8_t> subset_stability_table(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20)
    throw Error(Errc::TooLargeForEnumeration,
                "subset table capped at 20 vertices, got " + std::to_string(n));
  std::vector<uint32_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    uint32_t row = 1u << v;
    g.row(v).for_each([&](int w) { row |= 1u << w; });
    closed[static_cast<std::size_t>(v)] = row;
  }
  std::vector<int8_t> table(std::size_t{1} << n, 0);
  for (uint32_t mask = 1; mask < table.size(); ++mask) {
    const int v = std::countr_zero(mask);
    const int8_t skip = table[mask & (mask - 1)];
    const int8_t take =
        static_cast<int8_t>(1 + table[mask & ~closed[static_cast<std::size_t>(v)]]);
    table[mask] = std::max(skip, take);
  }
  return table;
}

}  // namespace alphacrit
