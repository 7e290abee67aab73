#include "alphacrit/generators.hpp"

#include <algorithm>

#include "alphacrit/census.hpp"
#include "alphacrit/critical.hpp"
#include "alphacrit/error.hpp"
#include "alphacrit/solver.hpp"

namespace alphacrit {

namespace {

constexpr int kGeneratorAttempts = 20000;

std::vector<int> shuffled_vertices(const Graph& g, Rng& rng) {
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

VertexSet sample_maximal_set(const Graph& g, Rng& rng) {
  const auto entries = enumerate_maximal_alpha_minus_one(g);
  return entries[uniform_int(rng, 0, static_cast<int>(entries.size()) - 1)].vertices;
}

const Graph& sample_block(const std::vector<Graph>& corpus, Rng& rng) {
  return corpus[uniform_int(rng, 0, static_cast<int>(corpus.size()) - 1)];
}

}  // namespace

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Graph random_graph(Rng& rng, int n, double edge_prob) {
  Graph g(n);
  std::bernoulli_distribution coin(edge_prob);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Graph> alpha_critical_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : census_graphs(n, CensusFilter::AlphaCritical))
      out.push_back(g);
  }
  return out;
}

std::vector<Graph> two_connected_corpus(int max_n) {
  std::vector<Graph> out;
  for (const Graph& g : alpha_critical_corpus(max_n)) {
    if (is_two_connected(g)) out.push_back(g);
  }
  return out;
}

std::optional<VertexSet> random_gap_subset(const Graph& g, Rng& rng, bool shrink) {
  const int base = stability_number(g);
  if (base == 0) return std::nullopt;
  const int target = base - 1;
  Bits512 s;
  for (int v : shuffled_vertices(g, rng)) {
    Bits512 ext = s;
    ext.set(v);
    if (stability_number_within(g, ext) <= target) s = ext;
  }
  if (shrink) {
    for (int v : shuffled_vertices(g, rng)) {
      if (!s.test(v) || (rng() & 1) == 0) continue;
      Bits512 less = s;
      less.reset(v);
      if (stability_number_within(g, less) == target) s = less;
    }
  }
  return VertexSet{s, g.vertex_count()};
}

JoinQuadruple random_gap_quadruple(Rng& rng, int max_block, bool shrink) {
  std::uniform_real_distribution<double> prob(0.15, 0.85);
  for (int i = 0; i < kGeneratorAttempts; ++i) {
    const Graph g = random_graph(rng, uniform_int(rng, 1, max_block), prob(rng));
    const Graph h = random_graph(rng, uniform_int(rng, 1, max_block), prob(rng));
    const auto g0 = random_gap_subset(g, rng, shrink);
    const auto h0 = random_gap_subset(h, rng, shrink);
    if (g0 && h0) return {g, *g0, h, *h0};
  }
  throw Error(Errc::PreconditionViolated, "no gap quadruple found");
}

JoinQuadruple random_conditions_quadruple(Rng& rng, int max_block,
                                          int max_composed) {
  const std::vector<Graph> corpus = alpha_critical_corpus(max_block);
  for (int i = 0; i < kGeneratorAttempts; ++i) {
    const Graph& g = sample_block(corpus, rng);
    const Graph& h = sample_block(corpus, rng);
    if (g.vertex_count() + h.vertex_count() > max_composed) continue;
    return {g, sample_maximal_set(g, rng), h, sample_maximal_set(h, rng)};
  }
  throw Error(Errc::PreconditionViolated, "no conditions quadruple found");
}

JoinQuadruple violation_quadruple(Rng& rng, int max_block, int which) {
  if (which < 1 || which > 3)
    throw Error(Errc::PreconditionViolated, "violation kind must be 1, 2, or 3");
  // Kind 1 needs a block with stability number at least 2 and kind 3 a
  // designated set holding a suitable non-critical edge; the smallest
  // witnesses have 5 and 6 vertices, so the cap rises to fit.
  if (which == 1) max_block = std::max(max_block, 5);
  if (which == 3) max_block = std::max(max_block, 6);
  const std::vector<Graph> corpus = alpha_critical_corpus(max_block);
  std::vector<Graph> pool;
  if (which == 3) {
    for (int n = 6; n <= max_block; ++n) {
      for (const Graph& g : census_graphs(n, CensusFilter::Connected))
        pool.push_back(g);
    }
  }
  for (int i = 0; i < kGeneratorAttempts; ++i) {
    const Graph& h = sample_block(corpus, rng);
    const VertexSet h0 = sample_maximal_set(h, rng);
    const Graph& g = sample_block(corpus, rng);
    if (which == 1) {
      const VertexSet g0 = sample_maximal_set(g, rng);
      const int target = stability_number(g) - 1;
      std::vector<int> candidates;
      g0.bits.for_each([&](int x) {
        Bits512 less = g0.bits;
        less.reset(x);
        if (stability_number_within(g, less) == target) candidates.push_back(x);
      });
      if (candidates.empty()) continue;
      Bits512 smaller = g0.bits;
      smaller.reset(candidates[uniform_int(
          rng, 0, static_cast<int>(candidates.size()) - 1)]);
      return {g, VertexSet{smaller, g.vertex_count()}, h, h0};
    }
    if (which == 2) {
      // A pendant edge is never critical, and the old vertex set stays a
      // maximal gap witness, so exactly the leaving-edge condition fails.
      const int ng = g.vertex_count();
      Graph ext(ng + 1);
      for (const EdgeRef& e : g.edges()) ext.add_edge(e.u, e.v);
      ext.add_edge(uniform_int(rng, 0, ng - 1), ng);
      return {ext, VertexSet{Bits512::prefix(ng), ng + 1}, h, h0};
    }
    // Kind 3: a connected graph holding a maximal designated set with every
    // leaving edge critical and some inside edge critical neither in the
    // graph nor in the designated subgraph on its own.
    const Graph& cand = sample_block(pool, rng);
    const auto entries = enumerate_maximal_alpha_minus_one(cand);
    if (entries.empty()) continue;
    const VertexSet g0 =
        entries[uniform_int(rng, 0, static_cast<int>(entries.size()) - 1)].vertices;
    const JoinQuadruple q{cand, g0, h, h0};
    const JoinConditionReport r = check_join_conditions(q);
    if (r.g_maximal && r.g_outside_critical && !r.g_inside_covered &&
        r.h_maximal && r.h_outside_critical && r.h_inside_covered)
      return q;
  }
  throw Error(Errc::PreconditionViolated, "no violation quadruple found");
}

EVInstance random_ev_instance(Rng& rng, int max_composed) {
  const std::vector<Graph> corpus = alpha_critical_corpus(8);
  for (int i = 0; i < kGeneratorAttempts; ++i) {
    const Graph& g = sample_block(corpus, rng);
    const Graph& h = sample_block(corpus, rng);
    if (h.vertex_count() < 3) continue;
    if (g.vertex_count() + h.vertex_count() - 1 > max_composed) continue;
    const auto edges = g.edges();
    const EdgeRef e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    const int v = uniform_int(rng, 0, h.vertex_count() - 1);
    const auto assignments = ev_assignments(h, v);
    if (assignments.empty()) continue;
    const EVPartition p =
        assignments[uniform_int(rng, 0, static_cast<int>(assignments.size()) - 1)];
    return {g, e, h, v, p};
  }
  throw Error(Errc::PreconditionViolated, "no edge-vertex instance found");
}

}  // namespace alphacrit
