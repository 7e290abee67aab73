#include "alphacrit/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "alphacrit/canonical.hpp"
#include "alphacrit/census.hpp"
#include "alphacrit/critical.hpp"
#include "alphacrit/error.hpp"
#include "alphacrit/factory.hpp"
#include "alphacrit/generators.hpp"
#include "alphacrit/graph6.hpp"
#include "alphacrit/oracle.hpp"
#include "alphacrit/parallel.hpp"
#include "alphacrit/reduce.hpp"
#include "alphacrit/solver.hpp"

namespace alphacrit {

namespace {

constexpr int kMaxRecordedFailures = 25;

Rng instance_rng(uint64_t seed, uint64_t stream, uint64_t i) {
  return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1) +
                     0xbf58476d1ce4e5b9ULL * (i + 1)));
}

void record(SweepResult& r, const std::string& instance, const std::string& message) {
  if (static_cast<int>(r.failures.size()) < kMaxRecordedFailures)
    r.failures.push_back({instance, message});
}

void merge(SweepResult& r, const std::vector<SweepFailure>& batch) {
  for (const auto& f : batch) record(r, f.instance, f.message);
}

std::string set_string(const Bits512& bits) {
  std::string out = "{";
  bool first = true;
  bits.for_each([&](int v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string quadruple_string(const JoinQuadruple& q) {
  return to_graph6(q.g) + " g0=" + set_string(q.g0.bits) + " | " +
         to_graph6(q.h) + " h0=" + set_string(q.h0.bits);
}

using Failures = std::vector<SweepFailure>;

std::vector<std::vector<int>> sorted_sets(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.members());
  std::sort(out.begin(), out.end());
  return out;
}

std::string family_diff(const std::vector<Bits512>& predicted,
                        const std::vector<Bits512>& actual) {
  std::unordered_set<Bits512, Bits512Hash> pred(predicted.begin(), predicted.end());
  std::unordered_set<Bits512, Bits512Hash> act(actual.begin(), actual.end());
  std::string out;
  for (const Bits512& b : actual) {
    if (pred.find(b) == pred.end()) out += " missing=" + set_string(b);
  }
  for (const Bits512& b : predicted) {
    if (act.find(b) == act.end()) out += " spurious=" + set_string(b);
  }
  return out;
}

// Suites refuse an explicit size request beyond their hard cap instead of
// silently clamping; defaults are always within cap.
int suite_cap(const SweepOptions& opt, int fallback, int cap) {
  const int n = opt.max_n > 0 ? opt.max_n : fallback;
  if (n > cap)
    throw Error(Errc::TooLargeForEnumeration,
                "suite size cap is " + std::to_string(cap) + ", got " +
                    std::to_string(n));
  return n;
}

}  // namespace

SweepResult verify_graph_core(const SweepOptions& opt) {
  SweepResult r{"graph-core", 0, {}};
  const int n_cap = suite_cap(opt, 10, 512);
  const int count = opt.instances > 0 ? opt.instances : 300;
  auto batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 1, i);
    const int n = uniform_int(rng, 0, n_cap);
    const Graph g = random_graph(rng, n, uniform_int(rng, 1, 9) / 10.0);
    const std::string id = to_graph6(g);
    if (!(parse_graph6(to_graph6(g)) == g))
      fails.push_back({id, "graph6 round trip changed the graph"});
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (canonical_form(apply_permutation(g, perm)) != canonical_form(g))
      fails.push_back({id, "canonical form not permutation invariant"});
    if (n > 0) {
      const int v = uniform_int(rng, 0, n - 1);
      if (g.degree(v) != g.row(v).count())
        fails.push_back({id, "degree disagrees with adjacency row"});
      Bits512 sub;
      for (int w = 0; w < n; ++w)
        if ((rng() & 1) != 0) sub.set(w);
      const VertexSet s{sub, n};
      const InducedSubgraph in = induced_subgraph(g, s);
      int inside = 0;
      for (const EdgeRef& e : g.edges())
        if (sub.test(e.u) && sub.test(e.v)) ++inside;
      if (static_cast<int>(in.graph.edge_count()) != inside)
        fails.push_back({id, "induced subgraph edge count mismatch"});
      if (is_connected(disjoint_union(g, complete_graph(1))) && n >= 1)
        fails.push_back({id, "union with an isolated vertex reported connected"});
    }
    return fails;
  });
  for (const auto& b : batches) merge(r, b);
  r.checked = count;
  return r;
}

SweepResult verify_solver(const SweepOptions& opt) {
  SweepResult r{"solver", 0, {}};
  const int n_cap = suite_cap(opt, 16, 24);
  const int count = opt.instances > 0 ? opt.instances : 300;
  auto batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 2, i);
    const Graph g = random_graph(rng, uniform_int(rng, 0, n_cap),
                                 uniform_int(rng, 1, 9) / 10.0);
    const std::string id = to_graph6(g);
    const int fast = stability_number(g);
    const int slow = oracle_stability_number(g);
    if (fast != slow)
      fails.push_back({id, "solver " + std::to_string(fast) + " vs oracle " +
                               std::to_string(slow)});
    const StabilityReport rep = alpha(g);
    if (rep.alpha != fast || !is_stable_set(g, rep.witness) ||
        rep.witness.bits.count() != fast)
      fails.push_back({id, "witness is not a maximum stable set"});
    if (g.vertex_count() <= 12) {
      auto mine = sorted_sets(all_maximum_stable_sets(g));
      auto theirs = oracle_all_maximum_stable_sets(g);
      std::sort(theirs.begin(), theirs.end());
      if (mine != theirs)
        fails.push_back({id, "maximum stable set families disagree"});
    }
    return fails;
  });
  for (const auto& b : batches) merge(r, b);
  r.checked = count;
  return r;
}

SweepResult verify_ops(const SweepOptions& opt) {
  SweepResult r{"ops", 0, {}};
  const int count = opt.instances > 0 ? opt.instances : 20;
  const int block_cap = suite_cap(opt, 7, 8);
  for (int n = 2; n <= 8; ++n) {
    ++r.checked;
    if (canonical_form(duplicate_vertex(complete_graph(n - 1), 0)) !=
        canonical_form(complete_graph(n)))
      record(r, "K" + std::to_string(n - 1),
             "duplication did not produce the next complete graph");
  }
  const std::vector<Graph> corpus = alpha_critical_corpus(block_cap);
  const Graph k3 = complete_graph(3);
  for (int i = 0; i < count; ++i) {
    Rng rng = instance_rng(opt.seed, 3, i);
    const Graph& g = corpus[uniform_int(rng, 0, static_cast<int>(corpus.size()) - 1)];
    const auto edges = g.edges();
    const EdgeRef e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    const std::string id = to_graph6(g);
    ++r.checked;

    const EVPartition triangle_split{make_vertex_set(k3, std::vector<int>{0}),
                                     make_vertex_set(k3, std::vector<int>{1})};
    if (canonical_form(edge_vertex_compose(g, e, k3, 2, triangle_split)) !=
        canonical_form(odd_subdivide(g, e)))
      record(r, id, "triangle composition differs from edge subdivision");
    if (stability_number(odd_subdivide(g, e)) != stability_number(g) + 1)
      record(r, id, "subdivision did not raise alpha by one");

    const Graph& h =
        corpus[uniform_int(rng, 0, static_cast<int>(corpus.size()) - 1)];
    if (h.vertex_count() >= 3) {
      const int v = uniform_int(rng, 0, h.vertex_count() - 1);
      const auto parts = split_partitions(h, v);
      if (!parts.empty()) {
        const SplitPartition p =
            parts[uniform_int(rng, 0, static_cast<int>(parts.size()) - 1)];
        const std::string hid = to_graph6(h);
        if (canonical_form(edge_vertex_compose(k3, EdgeRef(0, 1), h, v,
                                               {p.part_vprime, p.part_vdoubleprime})) !=
            canonical_form(split_vertex(h, v, p)))
          record(r, hid, "triangle-side composition differs from vertex split");
        if (stability_number(split_vertex(h, v, p)) != stability_number(h) + 1)
          record(r, hid, "split did not raise alpha by one");
      }
    }

    const int w = uniform_int(rng, 0, h.vertex_count() - 1);
    const Graph k1 = complete_graph(1);
    const JoinQuadruple dup_as_join{k1, empty_set(k1), h, canonical_subgraph(h, w)};
    if (canonical_form(one_join(dup_as_join)) !=
        canonical_form(duplicate_vertex(h, w)))
      record(r, to_graph6(h), "K1 join differs from vertex duplication");
    if (stability_number(duplicate_vertex(h, w)) != stability_number(h))
      record(r, to_graph6(h), "duplication changed alpha");
  }
  return r;
}

SweepResult verify_reduce(const SweepOptions& opt) {
  SweepResult r{"reduce", 0, {}};
  const int count = opt.instances > 0 ? opt.instances : 100;
  const int block_cap = suite_cap(opt, 7, 8);
  const std::vector<Graph> corpus = alpha_critical_corpus(block_cap);

  for (const Graph& g : corpus) {
    ++r.checked;
    const bool by_degree = is_splitting_reducible_alpha_critical(g);
    const bool by_gadget = find_splitting_gadget(g).has_value();
    const bool two_regular_cycle = g.min_degree() == 2 && g.max_degree() == 2;
    const bool divergent = g.vertex_count() == 2 ||
                           (two_regular_cycle && g.vertex_count() == 3);
    if (divergent) {
      if (!(by_degree && !by_gadget))
        record(r, to_graph6(g), "expected degree-only reducibility verdict");
    } else if (by_degree != by_gadget) {
      record(r, to_graph6(g), "degree criterion disagrees with gadget scan");
    }
  }

  for (int i = 0; i < count; ++i) {
    Rng rng = instance_rng(opt.seed, 4, i);
    const Graph& g = corpus[uniform_int(rng, 0, static_cast<int>(corpus.size()) - 1)];
    const std::string id = to_graph6(g);
    const int n = g.vertex_count();
    ++r.checked;

    const int v = uniform_int(rng, 0, n - 1);
    const Graph dup = duplicate_vertex(g, v);
    if (!find_closed_twins(dup).has_value())
      record(r, id, "duplicated vertex not detected as closed twins");
    if (!(contract_duplicate(dup, TwinWitness{v, n}) == g))
      record(r, id, "duplication round trip changed the graph");

    const auto edges = g.edges();
    const EdgeRef e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    const Graph sub = odd_subdivide(g, e);
    if (!find_odd_subdivision_gadget(sub).has_value())
      record(r, id, "subdivision gadget not detected");
    if (!(contract_odd_subdivision(sub, OddSubdivisionGadget{e.u, n, n + 1, e.v}) == g))
      record(r, id, "subdivision round trip changed the graph");

    if (n >= 3) {
      const int w = uniform_int(rng, 0, n - 1);
      const auto parts = split_partitions(g, w);
      if (!parts.empty()) {
        const SplitPartition p =
            parts[uniform_int(rng, 0, static_cast<int>(parts.size()) - 1)];
        const Graph split = split_vertex(g, w, p);
        if (!find_splitting_gadget(split).has_value())
          record(r, id, "split gadget not detected");
        if (canonical_form(contract_split(split, SplitGadget{n - 1, n + 1, n})) !=
            canonical_form(g))
          record(r, id, "split round trip changed the graph");
      }
    }
  }
  return r;
}

SweepResult verify_join_theorem(const SweepOptions& opt) {
  SweepResult r{"join-theorem", 0, {}};
  const int max_block = suite_cap(opt, 8, 8);
  const int count = opt.instances > 0 ? opt.instances : 200;
  const int violations = std::max(1, count / 4);

  auto identity_batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 5, i);
    const JoinQuadruple q = random_gap_quadruple(rng, max_block, i % 2 == 1);
    const AlphaIdentity a = join_alpha_identity(q);
    if (a.predicted != a.actual)
      fails.push_back({quadruple_string(q),
                       "join alpha " + std::to_string(a.actual) + " vs predicted " +
                           std::to_string(a.predicted)});
    return fails;
  });
  for (const auto& b : identity_batches) merge(r, b);
  r.checked += count;

  auto forward_batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 6, i);
    const JoinQuadruple q = random_conditions_quadruple(rng, max_block);
    const std::string id = quadruple_string(q);
    if (!check_join_conditions(q).all_hold) {
      fails.push_back({id, "generator produced a quadruple violating a condition"});
      return fails;
    }
    if (!all_edges_alpha_critical(one_join(q)))
      fails.push_back({id, "all conditions hold but the join is not critical"});
    const K1ReductionReport k1 = corollary_k1_reduction(q);
    if (k1.j_critical != (k1.g1_critical && k1.h1_critical))
      fails.push_back({id, "K1 reduction equivalence failed"});
    return fails;
  });
  for (const auto& b : forward_batches) merge(r, b);
  r.checked += count;

  for (int which = 1; which <= 3; ++which) {
    auto batches = parallel_map<Failures>(violations, opt.threads, [&](int i) {
      Failures fails;
      Rng rng = instance_rng(opt.seed, 10 + which, i);
      const JoinQuadruple q = violation_quadruple(rng, max_block, which);
      const JoinConditionReport cond = check_join_conditions(q);
      const std::string id = quadruple_string(q);
      const bool expected_profile =
          (which == 1 && !cond.g_maximal && cond.g_outside_critical &&
           cond.g_inside_covered) ||
          (which == 2 && cond.g_maximal && !cond.g_outside_critical &&
           cond.g_inside_covered) ||
          (which == 3 && cond.g_maximal && cond.g_outside_critical &&
           !cond.g_inside_covered);
      if (!expected_profile || !cond.h_maximal || !cond.h_outside_critical ||
          !cond.h_inside_covered) {
        fails.push_back({id, "violation generator produced the wrong profile"});
        return fails;
      }
      if (all_edges_alpha_critical(one_join(q)))
        fails.push_back({id, "a condition fails but the join is critical"});
      const K1ReductionReport k1 = corollary_k1_reduction(q);
      if (k1.j_critical != (k1.g1_critical && k1.h1_critical))
        fails.push_back({id, "K1 reduction equivalence failed"});
      return fails;
    });
    for (const auto& b : batches) merge(r, b);
    r.checked += violations;
  }
  return r;
}

SweepResult verify_ev_maximal(const SweepOptions& opt) {
  SweepResult r{"ev-maximal", 0, {}};
  const int cap = suite_cap(opt, 12, 14);
  const int count = opt.instances > 0 ? opt.instances : 50;
  auto batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 20, i);
    const EVInstance inst = random_ev_instance(rng, cap);
    const Graph composed =
        edge_vertex_compose(inst.g, inst.e, inst.h, inst.v, inst.p);
    std::vector<Bits512> predicted;
    for (const auto& f :
         predict_maximal_in_ev_composition(inst.g, inst.e, inst.h, inst.v, inst.p))
      predicted.push_back(f.vertex_set.bits);
    std::vector<Bits512> actual;
    for (const auto& m : enumerate_maximal_alpha_minus_one(composed))
      actual.push_back(m.vertices.bits);
    const std::string diff = family_diff(predicted, actual);
    if (!diff.empty())
      fails.push_back({to_graph6(inst.g) + " e={" + std::to_string(inst.e.u) + "," +
                           std::to_string(inst.e.v) + "} " + to_graph6(inst.h) +
                           " v=" + std::to_string(inst.v),
                       "maximal family mismatch:" + diff});
    return fails;
  });
  for (const auto& b : batches) merge(r, b);
  r.checked = count;
  return r;
}

SweepResult verify_join_maximal(const SweepOptions& opt) {
  SweepResult r{"join-maximal", 0, {}};
  const int cap = suite_cap(opt, 12, 14);
  const int count = opt.instances > 0 ? opt.instances : 50;
  auto batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 21, i);
    const JoinQuadruple q = i % 2 == 0
                                ? random_conditions_quadruple(rng, 8, cap)
                                : random_gap_quadruple(rng, cap / 2, i % 4 == 1);
    std::vector<Bits512> predicted;
    for (const auto& f : predict_maximal_in_join(q))
      predicted.push_back(f.vertex_set.bits);
    std::vector<Bits512> actual;
    for (const auto& m : enumerate_maximal_alpha_minus_one(one_join(q)))
      actual.push_back(m.vertices.bits);
    const std::string diff = family_diff(predicted, actual);
    if (!diff.empty())
      fails.push_back({quadruple_string(q), "maximal family mismatch:" + diff});
    return fails;
  });
  for (const auto& b : batches) merge(r, b);
  r.checked = count;
  return r;
}

SweepResult verify_basic_theorem(const SweepOptions& opt) {
  SweepResult r{"basic-theorem", 0, {}};
  const int block_cap = suite_cap(opt, 7, 8);
  const int count = opt.instances > 0 ? opt.instances : 100;
  auto batches = parallel_map<Failures>(count, opt.threads, [&](int i) {
    Failures fails;
    Rng rng = instance_rng(opt.seed, 22, i);
    const JoinQuadruple q = random_conditions_quadruple(rng, block_cap, 14);
    const JoinBasicReport rep = check_join_basic_theorem(q);
    if (!rep.all_agree) {
      std::string detail;
      for (const JoinBasicPart* part :
           {&rep.splitting, &rep.odd_subdivision, &rep.duplication}) {
        if (!part->agree) detail += part->detail + "; ";
      }
      fails.push_back({quadruple_string(q), detail});
    }
    return fails;
  });
  for (const auto& b : batches) merge(r, b);
  r.checked = count;
  return r;
}

SweepResult verify_hajnal(const SweepOptions& opt) {
  SweepResult r{"hajnal", 0, {}};
  const int cap = suite_cap(opt, 8, 9);
  const std::string k2 = canonical_form(complete_graph(2));
  for (int n = 2; n <= cap; ++n) {
    for (const Graph& g : census_graphs(n, CensusFilter::AlphaCritical)) {
      ++r.checked;
      const int d = defect(g);
      const std::string id = to_graph6(g);
      if (g.max_degree() > d + 1)
        record(r, id, "degree " + std::to_string(g.max_degree()) +
                          " exceeds defect + 1 = " + std::to_string(d + 1));
      if (d < 0) record(r, id, "connected critical graph with negative defect");
      if (d == 0 && canonical_form(g) != k2)
        record(r, id, "defect 0 on something other than a single edge");
    }
  }
  return r;
}

SweepResult verify_defect_census(const SweepOptions& opt) {
  SweepResult r{"defect-census", 0, {}};
  const int cap = suite_cap(opt, 8, 9);

  std::unordered_set<std::string> defect1, defect2;
  for (int n = 2; n <= cap; ++n) {
    for (const Graph& g : census_graphs(n, CensusFilter::AlphaCritical)) {
      const int d = defect(g);
      if (d == 1) defect1.insert(canonical_form(g));
      if (d == 2) defect2.insert(canonical_form(g));
    }
  }

  std::unordered_set<std::string> odd_cycles;
  for (int k = 3; k <= cap; k += 2) odd_cycles.insert(canonical_form(cycle_graph(k)));
  ++r.checked;
  if (defect1 != odd_cycles)
    record(r, "defect-1", "census classes differ from the odd cycles");

  std::unordered_set<std::string> closure;
  std::vector<Graph> frontier{complete_graph(4)};
  closure.insert(canonical_form(frontier[0]));
  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      if (g.vertex_count() + 2 > cap) continue;
      for (const EdgeRef& e : g.edges()) {
        Graph s = odd_subdivide(g, e);
        if (closure.insert(canonical_form(s)).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  ++r.checked;
  if (defect2 != closure)
    record(r, "defect-2", "census classes differ from the subdivision closure");

  const std::string k4 = canonical_form(complete_graph(4));
  for (const std::string& code : defect2) {
    ++r.checked;
    Graph g = parse_graph6(code);
    int guard = 0;
    while (canonical_form(g) != k4 && guard++ < 16) {
      const auto w = find_odd_subdivision_gadget(g);
      if (!w) break;
      g = contract_odd_subdivision(g, *w);
      if (defect(g) != 2) {
        record(r, code, "contraction left the defect-2 family");
        break;
      }
    }
    if (canonical_form(g) != k4)
      record(r, code, "contraction chain did not reach the complete graph on 4");
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"graph-core",   "solver",       "ops",           "reduce",
          "join-theorem", "ev-maximal",   "join-maximal",  "basic-theorem",
          "hajnal",       "defect-census"};
}

std::vector<SweepResult> run_suites(const std::string& name,
                                    const SweepOptions& opt) {
  using Fn = SweepResult (*)(const SweepOptions&);
  const std::vector<std::pair<std::string, Fn>> table = {
      {"graph-core", verify_graph_core},   {"solver", verify_solver},
      {"ops", verify_ops},                 {"reduce", verify_reduce},
      {"join-theorem", verify_join_theorem}, {"ev-maximal", verify_ev_maximal},
      {"join-maximal", verify_join_maximal}, {"basic-theorem", verify_basic_theorem},
      {"hajnal", verify_hajnal},           {"defect-census", verify_defect_census},
  };
  std::vector<SweepResult> out;
  if (name == "all") {
    for (const auto& [_, fn] : table) out.push_back(fn(opt));
    return out;
  }
  for (const auto& [key, fn] : table) {
    if (key == name) {
      out.push_back(fn(opt));
      return out;
    }
  }
  throw Error(Errc::PreconditionViolated, "unknown suite: " + name);
}

}  // namespace alphacrit
